#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "essv/dfa.hpp"
#include "essv/monoid.hpp"

namespace essv {

/// A surjective morphism Σ* → M given by letter images.
class Stamp {
 public:
  /// Throws InputError unless the letter images generate the monoid.
  Stamp(Alphabet alphabet, Monoid monoid, std::vector<Element> letter_image,
        std::optional<ElementSet> accepting = std::nullopt);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Monoid& monoid() const noexcept { return monoid_; }
  Element letter_image(Letter a) const { return letter_image_.at(a); }
  const std::vector<Element>& letter_images() const noexcept { return letter_image_; }
  /// Present when the stamp is the syntactic morphism of a language.
  const std::optional<ElementSet>& accepting() const noexcept { return accepting_; }

 private:
  Alphabet alphabet_;
  Monoid monoid_;
  std::vector<Element> letter_image_;
  std::optional<ElementSet> accepting_;
};

/// Syntactic morphism of L(d): the transition monoid of the minimal DFA.
/// Elements are state maps, numbered breadth-first from the identity (so
/// the identity is element 0); products compose left to right.
Stamp syntactic_stamp(const Dfa& d);

/// Image of a word; ε maps to the identity. Throws InputError on letters
/// outside the alphabet.
Element eval_word(const Stamp& s, const Word& w);

/// Level sets A_n = φ(Σ^n) for n = 1, 2, ... up to the first repetition,
/// together with the eventual period.
struct LevelSets {
  /// sets[n-1] = A_n for n = 1..preperiod+period-1.
  std::vector<ElementSet> sets;
  /// A_preperiod = A_{preperiod+period} is the first repetition.
  std::size_t preperiod = 1;
  std::size_t period = 1;

  /// A_n for any n >= 1, using eventual periodicity.
  const ElementSet& at(std::size_t n) const;
};

LevelSets level_sets(const Stamp& s);

/// Least k >= 1 with φ(Σ^{2k}) = φ(Σ^k).
std::size_t stability_index(const Stamp& s);

/// T = φ(Σ^{≥s}) for the stability index s.
struct EventualImage {
  std::size_t stability_index = 1;
  LevelSets levels;
  ElementSet t;
};

EventualImage eventual_image(const Stamp& s);

/// φ(Σ^+).
ElementSet image_semigroup(const Stamp& s);

/// φ^{-1}(accept) as a DFA whose states are the monoid elements.
Dfa language_of(const Stamp& s, const ElementSet& accept);

}  // namespace essv
