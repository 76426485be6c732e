#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "essv/dfa.hpp"

namespace essv {

/// Subset of an alphabet, one flag per letter.
using LetterSet = std::vector<bool>;

LetterSet letter_set(const Alphabet& alphabet, std::string_view symbols);

/// One position of a star pattern: a single letter or B* for a letter set B.
struct PatternToken {
  enum class Kind { Letter, Star } kind;
  Letter letter = 0;
  LetterSet star;

  static PatternToken of(Letter a) { return {Kind::Letter, a, {}}; }
  static PatternToken star_of(LetterSet set) { return {Kind::Star, 0, std::move(set)}; }
};

/// The language of a concatenation of letters and starred letter sets,
/// e.g. {b}* a {a,b}*. Up to 63 tokens.
Dfa pattern_language(const Alphabet& alphabet, const std::vector<PatternToken>& tokens);

enum class MonomialNormal { None, R, L };

namespace family {
/// u Σ*
struct Prefix { Word u; };
/// Σ* u
struct Suffix { Word u; };
/// U Σ* V ∪ W with U, V, W finite
struct InfixLi { std::vector<Word> prefixes, suffixes, extra; };
/// A₀* a₁ A₁* ... a_k A_k*
struct Monomial {
  std::vector<LetterSet> sets;
  Word letters;
  MonomialNormal normal = MonomialNormal::None;
};
/// Σ* u₁ Σ* u₂ ... Σ* u_n Σ*
struct Subword { Word u; };
/// {w}
struct Single { Word w; };
/// Σ*
struct All {};
/// ∅
struct Empty {};
}  // namespace family

using FamilySpec = std::variant<family::Prefix, family::Suffix, family::InfixLi, family::Monomial,
                                family::Subword, family::Single, family::All, family::Empty>;

/// Minimized DFA of the described language. Monomials with a normal-form
/// flag are checked (R: a_i ∉ A_{i-1}, L: a_i ∉ A_i) and rejected with the
/// offending index.
Dfa build_family(const Alphabet& alphabet, const FamilySpec& spec);

/// Finite language given by its words.
Dfa finite_language(const Alphabet& alphabet, const std::vector<Word>& words);

/// Parses the textual builder syntax used by the command line:
///   prefix(u)  suffix(u)  subword(u)  single(w)  all  empty
///   infix(U;V;W)      U, V, W comma-separated word lists
///   rmono(A0 a1 A1 ... ak Ak)  lmono(...)  mono(...)
/// where each A_i is written {x,y} ({} for the empty set) and words use the
/// alphabet's word syntax.
FamilySpec parse_family_spec(const Alphabet& alphabet, std::string_view text);

}  // namespace essv
