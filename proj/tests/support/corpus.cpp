#include "corpus.hpp"

#include <set>

#include "essv/builders.hpp"
#include "essv/stamp.hpp"

namespace essv::testing {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Dfa make_dfa(const Alphabet& alphabet, State initial, const std::vector<State>& finals,
             const std::vector<std::vector<State>>& rows) {
  std::vector<bool> f(rows.size(), false);
  for (auto q : finals) f[q] = true;
  std::vector<State> delta;
  for (const auto& r : rows) delta.insert(delta.end(), r.begin(), r.end());
  return Dfa(alphabet, rows.size(), initial, std::move(f), std::move(delta));
}

std::vector<CorpusEntry> random_minimal_dfas(std::size_t count, std::size_t max_states, std::uint64_t seed) {
  Rng rng(seed);
  const Alphabet ab = Alphabet::of("ab");
  std::set<std::pair<std::vector<State>, std::vector<bool>>> seen;
  std::vector<CorpusEntry> out;
  while (out.size() < count) {
    const std::size_t n = 1 + pick(rng, max_states);
    std::vector<State> delta(n * 2);
    for (auto& t : delta) t = static_cast<State>(pick(rng, n));
    std::vector<bool> finals(n);
    for (std::size_t q = 0; q < n; ++q) finals[q] = pick(rng, 2) == 1;
    Dfa d = minimize(Dfa(ab, n, 0, finals, delta));
    if (!seen.insert({d.delta(), d.final_mask()}).second) continue;
    out.push_back({"random-" + std::to_string(out.size()), std::move(d)});
  }
  return out;
}

std::vector<CorpusEntry> handcrafted() {
  const Alphabet ab = Alphabet::of("ab");
  const Alphabet a = Alphabet::of("a");
  auto spec = [&](const char* text) { return build_family(ab, parse_family_spec(ab, text)); };
  std::vector<CorpusEntry> out;
  out.push_back({"all", spec("all")});
  out.push_back({"empty", spec("empty")});
  out.push_back({"(aa)* over a", make_dfa(a, 0, {0}, {{1}, {0}})});
  out.push_back({"aS*", spec("prefix(a)")});
  out.push_back({"S*a", spec("suffix(a)")});
  out.push_back({"aS*b", spec("infix(a;b;)")});
  out.push_back({"S*bS*", spec("subword(b)")});
  out.push_back({"bS*bS*", concat_words(Word{1}, spec("subword(b)"), Word{})});
  out.push_back({"(ab)*", make_dfa(ab, 0, {0}, {{1, 2}, {2, 0}, {2, 2}})});
  out.push_back({"S*abS*", make_dfa(ab, 0, {2}, {{1, 0}, {1, 2}, {2, 2}})});
  out.push_back({"even b", make_dfa(ab, 0, {0}, {{0, 1}, {1, 0}})});
  out.push_back({"subword ab", spec("subword(ab)")});
  out.push_back({"{b}*a{a,b}*", spec("rmono({b} a {a,b})")});
  out.push_back({"{a,b}*a{b}*", spec("lmono({a,b} a {b})")});
  out.push_back({"length 0 mod 3", make_dfa(ab, 0, {0}, {{1, 1}, {2, 2}, {0, 0}})});
  out.push_back({"a*b*", make_dfa(ab, 0, {0, 1}, {{0, 1}, {2, 1}, {2, 2}})});
  out.push_back({"S*aaS*", make_dfa(ab, 0, {2}, {{1, 0}, {2, 0}, {2, 2}})});
  out.push_back({"{ab}", spec("single(ab)")});
  out.push_back({"even length", make_dfa(ab, 0, {0}, {{1, 1}, {0, 0}})});
  out.push_back({"(aa)* over ab", make_dfa(ab, 0, {0}, {{1, 2}, {0, 2}, {2, 2}})});
  return out;
}

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> all = [] {
    auto out = handcrafted();
    auto random = random_minimal_dfas(500, 5, kCorpusSeed);
    out.insert(out.end(), random.begin(), random.end());
    return out;
  }();
  return all;
}

Word random_word(Rng& rng, const Alphabet& alphabet, std::size_t max_length) {
  Word w(pick(rng, max_length + 1));
  for (auto& c : w) c = static_cast<Letter>(pick(rng, alphabet.size()));
  return w;
}

RMonomial random_monomial(Rng& rng, const Alphabet& alphabet, std::size_t max_k, MonomialNormal mode) {
  RMonomial m;
  m.alphabet = alphabet;
  m.mode = mode;
  const std::size_t k = pick(rng, max_k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    LetterSet s(alphabet.size());
    for (std::size_t c = 0; c < s.size(); ++c) s[c] = pick(rng, 2) == 1;
    m.sets.push_back(std::move(s));
  }
  for (std::size_t i = 1; i <= k; ++i) {
    const LetterSet& forbidden = mode == MonomialNormal::R ? m.sets[i - 1] : m.sets[i];
    std::vector<Letter> allowed;
    for (Letter c = 0; c < alphabet.size(); ++c)
      if (!forbidden[c]) allowed.push_back(c);
    if (allowed.empty()) {
      // Free a letter so the normal form can hold.
      const auto c = static_cast<Letter>(pick(rng, alphabet.size()));
      (mode == MonomialNormal::R ? m.sets[i - 1] : m.sets[i])[c] = false;
      allowed.push_back(c);
    }
    m.letters.push_back(allowed[pick(rng, allowed.size())]);
  }
  return m;
}

Dfa random_li_language(Rng& rng, const Alphabet& alphabet) {
  switch (pick(rng, 3)) {
    case 0:
      return build_family(alphabet, family::Prefix{random_word(rng, alphabet, 3)});
    case 1:
      return build_family(alphabet, family::Suffix{random_word(rng, alphabet, 3)});
    default: {
      family::InfixLi f;
      for (std::size_t i = 0, n = 1 + pick(rng, 2); i < n; ++i) f.prefixes.push_back(random_word(rng, alphabet, 2));
      for (std::size_t i = 0, n = 1 + pick(rng, 2); i < n; ++i) f.suffixes.push_back(random_word(rng, alphabet, 2));
      for (std::size_t i = 0, n = pick(rng, 3); i < n; ++i) f.extra.push_back(random_word(rng, alphabet, 3));
      return build_family(alphabet, f);
    }
  }
}

Dfa random_simon_union(Rng& rng, const Alphabet& alphabet, std::size_t k) {
  const SubwordProfile p = simon_profile(alphabet, k);
  std::vector<bool> finals(p.state_count());
  for (std::size_t i = 0; i < finals.size(); ++i) finals[i] = pick(rng, 2) == 1;
  return minimize(p.as_dfa(finals));
}

Dfa random_group_language(Rng& rng, const Alphabet& alphabet, std::size_t n) {
  const Monoid z = Monoid::cyclic_group(n);
  std::vector<Element> images(alphabet.size());
  for (auto& e : images) e = static_cast<Element>(pick(rng, n));
  images[pick(rng, images.size())] = 1;
  const Stamp s(alphabet, z, images);
  ElementSet accept;
  for (Element e = 0; e < n; ++e)
    if (pick(rng, 2) == 1) accept.push_back(e);
  return minimize(language_of(s, accept));
}

Dfa random_boolean_combination(Rng& rng, const std::vector<Dfa>& atoms, std::size_t ops) {
  Dfa acc = atoms[pick(rng, atoms.size())];
  for (std::size_t i = 0; i < ops; ++i) {
    const Dfa& other = atoms[pick(rng, atoms.size())];
    switch (pick(rng, 5)) {
      case 0: acc = bool_op(BoolOp::Union, acc, other); break;
      case 1: acc = bool_op(BoolOp::Intersection, acc, other); break;
      case 2: acc = bool_op(BoolOp::Difference, acc, other); break;
      case 3: acc = bool_op(BoolOp::SymmetricDifference, acc, other); break;
      default: acc = complement(acc); break;
    }
  }
  return acc;
}

}  // namespace essv::testing
