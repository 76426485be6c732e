#include "essv/builders.hpp"

#include <cstdint>
#include <string>
#include <unordered_map>

#include "essv/error.hpp"

namespace essv {

LetterSet letter_set(const Alphabet& alphabet, std::string_view symbols) {
  LetterSet set(alphabet.size(), false);
  for (auto a : alphabet.parse(symbols)) set[a] = true;
  return set;
}

Dfa pattern_language(const Alphabet& alphabet, const std::vector<PatternToken>& tokens) {
  const std::size_t n = tokens.size();
  if (n > 63) throw InputError("pattern too long (at most 63 tokens)");
  const std::size_t k = alphabet.size();
  for (const auto& t : tokens) {
    if (t.kind == PatternToken::Kind::Letter && t.letter >= k)
      throw InputError("pattern letter outside the alphabet");
    if (t.kind == PatternToken::Kind::Star && t.star.size() != k)
      throw InputError("pattern letter set has the wrong size");
  }
  auto closure = [&](std::uint64_t set) {
    for (std::size_t i = 0; i < n; ++i)
      if ((set >> i) & 1U && tokens[i].kind == PatternToken::Kind::Star) set |= std::uint64_t{1} << (i + 1);
    return set;
  };
  std::unordered_map<std::uint64_t, State> ids;
  std::vector<std::uint64_t> subsets;
  auto id_of = [&](std::uint64_t s) {
    auto [it, inserted] = ids.try_emplace(s, static_cast<State>(subsets.size()));
    if (inserted) subsets.push_back(s);
    return it->second;
  };
  id_of(closure(1));
  std::vector<State> delta;
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    for (Letter a = 0; a < k; ++a) {
      std::uint64_t next = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (!((subsets[s] >> i) & 1U)) continue;
        const auto& t = tokens[i];
        if (t.kind == PatternToken::Kind::Letter && t.letter == a) next |= std::uint64_t{1} << (i + 1);
        if (t.kind == PatternToken::Kind::Star && t.star[a]) next |= std::uint64_t{1} << i;
      }
      delta.push_back(id_of(closure(next)));
    }
  }
  std::vector<bool> finals(subsets.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) finals[s] = (subsets[s] >> n) & 1U;
  return minimize(Dfa(alphabet, subsets.size(), 0, std::move(finals), std::move(delta)));
}

Dfa finite_language(const Alphabet& alphabet, const std::vector<Word>& words) {
  Dfa result = empty_language(alphabet);
  for (const auto& w : words) {
    std::vector<PatternToken> tokens;
    for (auto a : w) tokens.push_back(PatternToken::of(a));
    result = bool_op(BoolOp::Union, result, pattern_language(alphabet, tokens));
  }
  return result;
}

namespace {

LetterSet everything(const Alphabet& alphabet) { return LetterSet(alphabet.size(), true); }

void append_word(std::vector<PatternToken>& tokens, const Word& w) {
  for (auto a : w) tokens.push_back(PatternToken::of(a));
}

Dfa build(const Alphabet& alphabet, const family::Prefix& f) {
  std::vector<PatternToken> t;
  append_word(t, f.u);
  t.push_back(PatternToken::star_of(everything(alphabet)));
  return pattern_language(alphabet, t);
}

Dfa build(const Alphabet& alphabet, const family::Suffix& f) {
  std::vector<PatternToken> t{PatternToken::star_of(everything(alphabet))};
  append_word(t, f.u);
  return pattern_language(alphabet, t);
}

Dfa build(const Alphabet& alphabet, const family::InfixLi& f) {
  Dfa result = finite_language(alphabet, f.extra);
  for (const auto& u : f.prefixes) {
    for (const auto& v : f.suffixes) {
      std::vector<PatternToken> t;
      append_word(t, u);
      t.push_back(PatternToken::star_of(everything(alphabet)));
      append_word(t, v);
      result = bool_op(BoolOp::Union, result, pattern_language(alphabet, t));
    }
  }
  return result;
}

Dfa build(const Alphabet& alphabet, const family::Monomial& f) {
  if (f.sets.size() != f.letters.size() + 1)
    throw InputError("a monomial with k letters needs k+1 letter sets");
  for (const auto& s : f.sets)
    if (s.size() != alphabet.size()) throw InputError("monomial letter set has the wrong size");
  for (std::size_t i = 1; i <= f.letters.size(); ++i) {
    const Letter a = f.letters[i - 1];
    if (a >= alphabet.size()) throw InputError("monomial letter outside the alphabet");
    if (f.normal == MonomialNormal::R && f.sets[i - 1][a])
      throw InputError("R-normal form violated at index " + std::to_string(i) + ": a_" +
                       std::to_string(i) + " belongs to A_" + std::to_string(i - 1));
    if (f.normal == MonomialNormal::L && f.sets[i][a])
      throw InputError("L-normal form violated at index " + std::to_string(i) + ": a_" +
                       std::to_string(i) + " belongs to A_" + std::to_string(i));
  }
  std::vector<PatternToken> t{PatternToken::star_of(f.sets[0])};
  for (std::size_t i = 0; i < f.letters.size(); ++i) {
    t.push_back(PatternToken::of(f.letters[i]));
    t.push_back(PatternToken::star_of(f.sets[i + 1]));
  }
  return pattern_language(alphabet, t);
}

Dfa build(const Alphabet& alphabet, const family::Subword& f) {
  std::vector<PatternToken> t{PatternToken::star_of(everything(alphabet))};
  for (auto a : f.u) {
    t.push_back(PatternToken::of(a));
    t.push_back(PatternToken::star_of(everything(alphabet)));
  }
  return pattern_language(alphabet, t);
}

Dfa build(const Alphabet& alphabet, const family::Single& f) {
  std::vector<PatternToken> t;
  append_word(t, f.w);
  return pattern_language(alphabet, t);
}

Dfa build(const Alphabet& alphabet, const family::All&) { return universal_language(alphabet); }
Dfa build(const Alphabet& alphabet, const family::Empty&) { return empty_language(alphabet); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

std::vector<Word> parse_word_list(const Alphabet& alphabet, std::string_view s) {
  std::vector<Word> words;
  s = trim(s);
  if (s.empty()) return words;
  for (auto part : split(s, ',')) words.push_back(alphabet.parse(trim(part)));
  return words;
}

family::Monomial parse_monomial(const Alphabet& alphabet, std::string_view body, MonomialNormal normal) {
  family::Monomial m;
  m.normal = normal;
  std::size_t i = 0;
  bool expect_set = true;
  while (true) {
    while (i < body.size() && body[i] == ' ') ++i;
    if (i >= body.size()) break;
    if (expect_set) {
      if (body[i] != '{') throw InputError("monomial: expected '{' at position " + std::to_string(i));
      const auto close = body.find('}', i);
      if (close == std::string_view::npos) throw InputError("monomial: unbalanced '{'");
      LetterSet set(alphabet.size(), false);
      for (const auto& w : parse_word_list(alphabet, body.substr(i + 1, close - i - 1))) {
        if (w.size() != 1) throw InputError("monomial: set members must be single letters");
        set[w[0]] = true;
      }
      m.sets.push_back(std::move(set));
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < body.size() && body[j] != ' ' && body[j] != '{') ++j;
      const Word w = alphabet.parse(body.substr(i, j - i));
      if (w.size() != 1) throw InputError("monomial: expected a single letter between sets");
      m.letters.push_back(w[0]);
      i = j;
    }
    expect_set = !expect_set;
  }
  if (m.sets.empty() || expect_set) throw InputError("monomial must start and end with a letter set");
  return m;
}

}  // namespace

Dfa build_family(const Alphabet& alphabet, const FamilySpec& spec) {
  return std::visit([&](const auto& f) { return build(alphabet, f); }, spec);
}

FamilySpec parse_family_spec(const Alphabet& alphabet, std::string_view text) {
  text = trim(text);
  if (text == "all") return family::All{};
  if (text == "empty") return family::Empty{};
  const auto open = text.find('(');
  if (open == std::string_view::npos || text.back() != ')')
    throw InputError("family spec must look like name(args): '" + std::string(text) + "'");
  const auto name = trim(text.substr(0, open));
  const auto body = text.substr(open + 1, text.size() - open - 2);
  if (name == "prefix") return family::Prefix{alphabet.parse(trim(body))};
  if (name == "suffix") return family::Suffix{alphabet.parse(trim(body))};
  if (name == "subword") return family::Subword{alphabet.parse(trim(body))};
  if (name == "single") return family::Single{alphabet.parse(trim(body))};
  if (name == "infix") {
    const auto parts = split(body, ';');
    if (parts.size() != 3) throw InputError("infix needs three ';'-separated word lists U;V;W");
    return family::InfixLi{parse_word_list(alphabet, parts[0]), parse_word_list(alphabet, parts[1]),
                           parse_word_list(alphabet, parts[2])};
  }
  if (name == "rmono") return parse_monomial(alphabet, body, MonomialNormal::R);
  if (name == "lmono") return parse_monomial(alphabet, body, MonomialNormal::L);
  if (name == "mono") return parse_monomial(alphabet, body, MonomialNormal::None);
  throw InputError("unknown language family '" + std::string(name) +
                   "' (expected prefix, suffix, infix, rmono, lmono, mono, subword, single, all, empty)");
}

}  // namespace essv
