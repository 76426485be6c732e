#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "essv/bitset.hpp"
#include "essv/builders.hpp"
#include "essv/dfa.hpp"

namespace essv {

/// A₀* a₁ A₁* ... a_k A_k* in R normal form (a_i ∉ A_{i-1}) or L normal
/// form (a_i ∉ A_i).
struct RMonomial {
  Alphabet alphabet;
  std::vector<LetterSet> sets;
  Word letters;
  MonomialNormal mode = MonomialNormal::R;

  /// Throws InputError on a shape mismatch or a normal-form violation.
  void validate() const;
  Dfa language() const;
  /// The mirror monomial; swaps R and L mode.
  RMonomial reversed() const;
};

/// Union of the monomials' languages (∅ for an empty list).
Dfa monomial_union(const Alphabet& alphabet, const std::vector<RMonomial>& monomials);

/// K in Lang(R) with L = x^{-1} K y^{-1}, L the union of R-mode monomials.
/// Throws InputError on mode violations and ConsistencyError if the
/// quotient check fails.
Dfa r_witness(const Alphabet& alphabet, const std::vector<RMonomial>& monomials, const Word& x,
              const Word& y);

/// The dual construction for L-mode monomials.
Dfa l_witness(const Alphabet& alphabet, const std::vector<RMonomial>& monomials, const Word& x,
              const Word& y);

inline constexpr std::size_t kDefaultProfileCap = 1'000'000;

/// The automaton whose state after w is the set of subwords of w of length
/// at most k. Two words are ~_k-equivalent iff they reach the same state.
class SubwordProfile {
 public:
  SubwordProfile(Alphabet alphabet, std::size_t k, std::size_t cap = kDefaultProfileCap);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t state_count() const noexcept { return profiles_.size(); }
  State initial() const noexcept { return 0; }
  State next(State q, Letter a) const noexcept { return delta_[q * alphabet_.size() + a]; }
  State state_of(const Word& w) const;

  /// Subwords (length ≤ k) recorded in a state, length-lexicographic.
  std::vector<Word> subwords(State q) const;
  /// u ∈ profile(q); throws InputError if |u| > k.
  bool contains(State q, const Word& u) const;

  /// The profile automaton with the given accepting states.
  Dfa as_dfa(const std::vector<bool>& finals) const;

 private:
  std::size_t index_of(const Word& u) const;

  Alphabet alphabet_;
  std::size_t k_;
  std::vector<std::size_t> offset_;  // index of the first word of each length
  std::vector<DynBitset> profiles_;
  std::vector<State> delta_;
};

SubwordProfile simon_profile(const Alphabet& alphabet, std::size_t k,
                             std::size_t cap = kDefaultProfileCap);

/// True iff L(d) is a union of ~_k-classes.
bool is_union_of_simon_classes(const Dfa& d, std::size_t k, std::size_t cap = kDefaultProfileCap);

/// K = ∪_{w∈L} [x w y]_{~_{|xy|+k}}. Throws InputError "not
/// piecewise-testable at level k" unless L is a union of ~_k-classes.
Dfa j_witness(const Dfa& l, std::size_t k, const Word& x, const Word& y,
              std::size_t cap = kDefaultProfileCap);

/// K = η^{-1}(η(x) η(L) η(y)) for the syntactic morphism η of L. Throws
/// InputError unless the syntactic monoid is a group.
Dfa group_witness(const Dfa& l, const Word& x, const Word& y);

/// Exhaustive replay of the J1 counterexample with L = Σ*bΣ*, x = b, y = ε.
struct J1Report {
  struct Row {
    std::size_t k = 0;
    std::size_t l = 0;
    Word u, v;
    bool a_in_quotient = false;   // a ∈ u^{-1} L v^{-1}
    bool ab_in_quotient = false;  // ab ∈ u^{-1} L v^{-1}
    /// Every candidate K puts a and ab on the same side of (xu)^{-1} K (vy)^{-1}.
    bool candidates_conflate = false;
  };
  Alphabet alphabet;
  Dfa language = empty_language(Alphabet::of("ab"));
  Word x, y;
  std::vector<Dfa> candidates;
  std::vector<Row> rows;
  std::size_t quotient_stamp_size = 0;
  bool bsbs_structural = false;
  bool bsbs_equational = false;
};

/// Runs the bounded criterion check for every k, l ≤ max. Throws
/// ConsistencyError if any step differs from the expected refutation.
J1Report j1_counterexample_report(std::size_t max_k = 3, std::size_t max_l = 3);

std::string format_report(const J1Report& r);

}  // namespace essv
