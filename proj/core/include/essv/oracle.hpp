#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "essv/dfa.hpp"
#include "essv/identity.hpp"
#include "essv/monoid.hpp"
#include "essv/stamp.hpp"

// Brute-force reference implementations. Slow by design; they share no
// code with the decision procedures beyond the data types.
namespace essv::oracle {

/// All words of length at most max_length, length-lexicographic.
class WordEnumeration {
 public:
  WordEnumeration(Alphabet alphabet, std::size_t max_length);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t max_length() const noexcept { return max_length_; }
  const std::vector<Word>& words() const noexcept { return words_; }

 private:
  Alphabet alphabet_;
  std::size_t max_length_;
  std::vector<Word> words_;
};

/// Membership agrees on every word of length ≤ n.
bool approx_equal(const Dfa& a, const Dfa& b, std::size_t n);

/// Partition of the words of length ≤ n by their membership profile over
/// contexts (x, y) with |x|, |y| ≤ context_length (default n).
std::vector<std::vector<Word>> syntactic_classes_bruteforce(const Dfa& d, std::size_t n,
                                                            std::optional<std::size_t> context_length = {});

/// Monoids of exactly the given size (identity 0) up to isomorphism.
std::vector<Monoid> enumerate_monoids_of_size(std::size_t size);
/// All monoids of size 1..max_size up to isomorphism; max_size ≤ 4.
std::vector<Monoid> enumerate_monoids(std::size_t max_size);

/// x^N with N a common multiple of all cycle lengths past the index; only
/// for monoids of at most 20 elements.
Element omega_by_exponent(const Monoid& m, Element x);

/// Evaluates an identity by substituting words for variables: one
/// shortest representative word per element of φ(Σ*) (all) or φ(Σ⁺) (ne),
/// ω-powers via omega_by_exponent.
bool satisfies_by_words(const Stamp& s, const IdentityStatement& id, SatisfactionMode mode);

/// φ(Σ^n) for n = 1..max_length, computed by composing the state maps of
/// the minimal DFA and mapping a witness word of each through φ.
std::vector<ElementSet> level_sets_by_words(const Dfa& d, const Stamp& s, std::size_t max_length);

}  // namespace essv::oracle
