#include "essv/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "essv/error.hpp"

namespace essv::oracle {

WordEnumeration::WordEnumeration(Alphabet alphabet, std::size_t max_length)
    : alphabet_(std::move(alphabet)), max_length_(max_length) {
  std::vector<Word> layer{Word{}};
  for (std::size_t len = 0; len <= max_length_; ++len) {
    words_.insert(words_.end(), layer.begin(), layer.end());
    if (len == max_length_) break;
    std::vector<Word> next;
    for (const auto& w : layer)
      for (Letter a = 0; a < alphabet_.size(); ++a) {
        Word v = w;
        v.push_back(a);
        next.push_back(std::move(v));
      }
    layer = std::move(next);
  }
}

bool approx_equal(const Dfa& a, const Dfa& b, std::size_t n) {
  if (!(a.alphabet() == b.alphabet())) throw InputError("alphabet mismatch");
  const WordEnumeration words(a.alphabet(), n);
  for (const auto& w : words.words())
    if (a.accepts(w) != b.accepts(w)) return false;
  return true;
}

std::vector<std::vector<Word>> syntactic_classes_bruteforce(const Dfa& d, std::size_t n,
                                                            std::optional<std::size_t> context_length) {
  const WordEnumeration words(d.alphabet(), n);
  const WordEnumeration contexts(d.alphabet(), context_length.value_or(n));
  // x u y ∈ L iff run(run(run(q0, x), u), y) is final; the runs on x and
  // the acceptance of y from each state are tabulated once.
  std::vector<State> after_x;
  for (const auto& x : contexts.words()) after_x.push_back(d.run(d.initial(), x));
  std::vector<std::vector<bool>> accepts_y(d.state_count());
  for (State q = 0; q < d.state_count(); ++q)
    for (const auto& y : contexts.words()) accepts_y[q].push_back(d.is_final(d.run(q, y)));
  std::map<std::vector<bool>, std::size_t> ids;
  std::vector<std::vector<Word>> classes;
  std::vector<bool> profile;
  for (const auto& u : words.words()) {
    profile.clear();
    for (auto qx : after_x) {
      const auto& row = accepts_y[d.run(qx, u)];
      profile.insert(profile.end(), row.begin(), row.end());
    }
    auto [it, inserted] = ids.try_emplace(profile, classes.size());
    if (inserted) classes.emplace_back();
    classes[it->second].push_back(u);
  }
  return classes;
}

std::vector<Monoid> enumerate_monoids_of_size(std::size_t size) {
  if (size == 0) throw InputError("monoids have at least one element");
  if (size > 4) throw InputError("monoid enumeration is limited to size 4");
  const std::size_t n = size;
  // Row and column 0 are fixed by the identity; the (n-1)^2 free entries
  // range over 0..n-1.
  std::vector<Element> flat(n * n, 0);
  for (Element i = 0; i < n; ++i) {
    flat[i] = i;
    flat[i * n] = i;
  }
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t a = 1; a < n; ++a)
    for (std::size_t b = 1; b < n; ++b) cells.emplace_back(a, b);

  std::vector<Monoid> found;
  auto associative = [&] {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (flat[flat[a * n + b] * n + c] != flat[a * n + flat[b * n + c]]) return false;
    return true;
  };
  std::vector<std::size_t> digits(cells.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      flat[cells[i].first * n + cells[i].second] = static_cast<Element>(digits[i]);
    if (associative()) {
      Monoid m = Monoid::from_trusted(n, flat, 0);
      if (std::none_of(found.begin(), found.end(), [&](const Monoid& f) { return isomorphic(f, m); }))
        found.push_back(std::move(m));
    }
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == n) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return found;
}

std::vector<Monoid> enumerate_monoids(std::size_t max_size) {
  if (max_size > 4) throw InputError("monoid enumeration is limited to size 4");
  std::vector<Monoid> out;
  for (std::size_t s = 1; s <= max_size; ++s) {
    auto part = enumerate_monoids_of_size(s);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Element omega_by_exponent(const Monoid& m, Element x) {
  if (m.size() > 20) throw InputError("omega_by_exponent is limited to 20 elements");
  std::uint64_t e = 1;
  for (std::uint64_t i = 2; i <= m.size(); ++i) e = std::lcm(e, i);
  e *= m.size();
  Element result = m.identity();
  Element base = x;
  while (e > 0) {
    if (e & 1) result = m.mul(result, base);
    base = m.mul(base, base);
    e >>= 1;
  }
  return result;
}

namespace {

Element eval_by_words(const Monoid& m, const OmegaTerm& t, const std::map<std::string, Element>& values) {
  Element acc = m.identity();
  for (const auto& f : t) {
    const Element v =
        f.kind == Factor::Kind::Var ? values.at(f.name) : omega_by_exponent(m, eval_by_words(m, f.body, values));
    acc = m.mul(acc, v);
  }
  return acc;
}

}  // namespace

bool satisfies_by_words(const Stamp& s, const IdentityStatement& id, SatisfactionMode mode) {
  const Monoid& m = s.monoid();
  // Shortest representatives; elements are reached by words of length < |M|.
  std::map<Element, Word> reps;
  const WordEnumeration all(s.alphabet(), m.size());
  for (const auto& w : all.words()) {
    if (mode == SatisfactionMode::Ne && w.empty()) continue;
    reps.try_emplace(eval_word(s, w), w);
  }
  std::vector<Word> words;
  for (const auto& [e, w] : reps) words.push_back(w);
  if (words.empty()) return true;
  const auto vars = id.variables();
  const std::vector<std::string> names(vars.begin(), vars.end());
  std::vector<std::size_t> idx(names.size(), 0);
  while (true) {
    std::map<std::string, Element> values;
    for (std::size_t i = 0; i < names.size(); ++i) values[names[i]] = eval_word(s, words[idx[i]]);
    if (eval_by_words(m, id.lhs, values) != eval_by_words(m, id.rhs, values)) return false;
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == words.size()) idx[i++] = 0;
    if (i == idx.size()) return true;
  }
}

std::vector<ElementSet> level_sets_by_words(const Dfa& input, const Stamp& s, std::size_t max_length) {
  const Dfa d = minimize(input);
  const std::size_t n = d.state_count();
  std::map<std::vector<State>, Word> layer;
  {
    std::vector<State> id(n);
    std::iota(id.begin(), id.end(), State{0});
    layer.emplace(std::move(id), Word{});
  }
  std::vector<ElementSet> out;
  for (std::size_t len = 1; len <= max_length; ++len) {
    std::map<std::vector<State>, Word> next;
    for (const auto& [f, w] : layer)
      for (Letter a = 0; a < d.alphabet().size(); ++a) {
        std::vector<State> g(n);
        for (State q = 0; q < n; ++q) g[q] = d.next(f[q], a);
        Word v = w;
        v.push_back(a);
        next.try_emplace(std::move(g), std::move(v));
      }
    layer = std::move(next);
    std::set<Element> images;
    for (const auto& [f, w] : layer) images.insert(eval_word(s, w));
    out.emplace_back(images.begin(), images.end());
  }
  return out;
}

}  // namespace essv::oracle
