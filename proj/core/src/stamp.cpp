#include "essv/stamp.hpp"

#include <algorithm>
#include <unordered_map>

#include "essv/bitset.hpp"
#include "essv/error.hpp"

namespace essv {

Stamp::Stamp(Alphabet alphabet, Monoid monoid, std::vector<Element> letter_image,
             std::optional<ElementSet> accepting)
    : alphabet_(std::move(alphabet)),
      monoid_(std::move(monoid)),
      letter_image_(std::move(letter_image)),
      accepting_(std::move(accepting)) {
  if (letter_image_.size() != alphabet_.size())
    throw InputError("stamp needs exactly one image per letter");
  for (auto e : letter_image_)
    if (e >= monoid_.size()) throw InputError("letter image out of range");
  if (generated_submonoid(monoid_, letter_image_).size() != monoid_.size())
    throw InputError("letter images do not generate the monoid (stamp is not surjective)");
  if (accepting_) {
    std::sort(accepting_->begin(), accepting_->end());
    accepting_->erase(std::unique(accepting_->begin(), accepting_->end()), accepting_->end());
    for (auto e : *accepting_)
      if (e >= monoid_.size()) throw InputError("accepting element out of range");
  }
}

Stamp syntactic_stamp(const Dfa& input) {
  const Dfa d = minimize(input);
  const std::size_t n = d.state_count();
  const std::size_t k = d.alphabet().size();

  // Elements are maps states -> states, discovered breadth-first along the
  // right Cayley graph; element 0 is the identity map and every other
  // element e equals parent[e]·last[e].
  std::vector<std::vector<State>> maps;
  std::vector<Element> parent;
  std::vector<Letter> last;
  std::unordered_map<std::vector<State>, Element, VectorHash> ids;
  auto id_of = [&](std::vector<State> f, Element from, Letter a) {
    auto [it, inserted] = ids.try_emplace(f, static_cast<Element>(maps.size()));
    if (inserted) {
      maps.push_back(std::move(f));
      parent.push_back(from);
      last.push_back(a);
    }
    return it->second;
  };
  {
    std::vector<State> id(n);
    for (State q = 0; q < n; ++q) id[q] = q;
    id_of(std::move(id), 0, 0);
  }
  std::vector<std::vector<Element>> right;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    std::vector<Element> row(k);
    for (Letter a = 0; a < k; ++a) {
      std::vector<State> f(n);
      for (State q = 0; q < n; ++q) f[q] = d.next(maps[i][q], a);
      row[a] = id_of(std::move(f), static_cast<Element>(i), a);
    }
    right.push_back(std::move(row));
  }
  std::vector<Element> letter_image(right[0]);
  const std::size_t size = maps.size();
  // Product m·m' is "apply m, then m'". Since parents precede children,
  // a·e = (a·parent[e])·last[e] is already known when e is reached.
  std::vector<Element> flat(size * size);
  for (std::size_t a = 0; a < size; ++a) {
    flat[a * size] = static_cast<Element>(a);
    for (std::size_t e = 1; e < size; ++e) flat[a * size + e] = right[flat[a * size + parent[e]]][last[e]];
  }
  ElementSet accepting;
  for (std::size_t e = 0; e < size; ++e)
    if (d.is_final(maps[e][d.initial()])) accepting.push_back(static_cast<Element>(e));
  return Stamp(d.alphabet(), Monoid::from_trusted(size, std::move(flat), 0), std::move(letter_image),
               std::move(accepting));
}

Element eval_word(const Stamp& s, const Word& w) {
  Element acc = s.monoid().identity();
  for (auto a : w) {
    if (a >= s.alphabet().size()) throw InputError("letter outside the stamp's alphabet");
    acc = s.monoid().mul(acc, s.letter_image(a));
  }
  return acc;
}

const ElementSet& LevelSets::at(std::size_t n) const {
  if (n == 0) throw InputError("level sets start at length 1");
  if (n <= sets.size()) return sets[n - 1];
  const std::size_t idx = preperiod + (n - preperiod) % period;
  return sets[idx - 1];
}

LevelSets level_sets(const Stamp& s) {
  const Monoid& m = s.monoid();
  const std::size_t size = m.size();
  DynBitset letters(size);
  for (auto e : s.letter_images()) letters.set(e);
  std::vector<Element> gens;
  letters.for_each([&](std::size_t e) { gens.push_back(static_cast<Element>(e)); });

  auto to_set = [](const DynBitset& b) {
    ElementSet out;
    b.for_each([&](std::size_t e) { out.push_back(static_cast<Element>(e)); });
    return out;
  };

  LevelSets out;
  std::unordered_map<DynBitset, std::size_t, DynBitsetHash> seen;  // set -> n
  DynBitset current = letters;
  // There are at most 2^|M| distinct subsets, so a repetition is reached.
  for (std::size_t n = 1;; ++n) {
    if (auto it = seen.find(current); it != seen.end()) {
      out.preperiod = it->second;
      out.period = n - it->second;
      return out;
    }
    seen.emplace(current, n);
    out.sets.push_back(to_set(current));
    DynBitset next(size);
    current.for_each([&](std::size_t e) {
      for (auto g : gens) next.set(m.mul(static_cast<Element>(e), g));
    });
    current = std::move(next);
  }
}

namespace {

std::size_t stability_from(const LevelSets& levels) {
  for (std::size_t k = 1;; ++k)
    if (levels.at(2 * k) == levels.at(k)) return k;
}

}  // namespace

std::size_t stability_index(const Stamp& s) { return stability_from(level_sets(s)); }

EventualImage eventual_image(const Stamp& s) {
  EventualImage out;
  out.levels = level_sets(s);
  out.stability_index = stability_from(out.levels);
  const std::size_t start = std::max(out.stability_index, out.levels.preperiod);
  std::vector<bool> in(s.monoid().size(), false);
  for (std::size_t n = start; n < start + out.levels.period; ++n)
    for (auto e : out.levels.at(n)) in[e] = true;
  for (Element e = 0; e < in.size(); ++e)
    if (in[e]) out.t.push_back(e);
  return out;
}

ElementSet image_semigroup(const Stamp& s) {
  const LevelSets levels = level_sets(s);
  std::vector<bool> in(s.monoid().size(), false);
  for (const auto& set : levels.sets)
    for (auto e : set) in[e] = true;
  ElementSet out;
  for (Element e = 0; e < in.size(); ++e)
    if (in[e]) out.push_back(e);
  return out;
}

Dfa language_of(const Stamp& s, const ElementSet& accept) {
  const Monoid& m = s.monoid();
  const std::size_t k = s.alphabet().size();
  std::vector<bool> finals(m.size(), false);
  for (auto e : accept) {
    if (e >= m.size()) throw InputError("accepting element out of range");
    finals[e] = true;
  }
  std::vector<State> delta(m.size() * k);
  for (Element e = 0; e < m.size(); ++e)
    for (Letter a = 0; a < k; ++a) delta[e * k + a] = m.mul(e, s.letter_image(a));
  return Dfa(s.alphabet(), m.size(), m.identity(), std::move(finals), std::move(delta));
}

}  // namespace essv
