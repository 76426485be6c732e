#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace essv {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;
using State = std::uint32_t;

/// Ordered list of distinct, nonempty symbols.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> symbols);

  /// One symbol per character: Alphabet::of("ab") == {"a", "b"}.
  static Alphabet of(std::string_view chars);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(Letter a) const { return symbols_.at(a); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  std::optional<Letter> find(std::string_view symbol) const noexcept;
  /// Throws InputError on an unknown symbol.
  Letter letter(std::string_view symbol) const;

  /// Parses a word. With single-character symbols each character is a
  /// letter; otherwise symbols are separated by whitespace or '.'. The
  /// empty string, "ε" and "eps" denote the empty word.
  Word parse(std::string_view text) const;
  /// Inverse of parse(); the empty word prints as "ε".
  std::string format(const Word& w) const;

  bool single_char() const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
};

/// A complete deterministic automaton. delta is stored row-major,
/// delta[state * |Σ| + letter].
class Dfa {
 public:
  Dfa(Alphabet alphabet, std::size_t states, State initial, std::vector<bool> finals,
      std::vector<State> delta);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t state_count() const noexcept { return states_; }
  State initial() const noexcept { return initial_; }
  bool is_final(State q) const noexcept { return finals_[q]; }
  const std::vector<bool>& final_mask() const noexcept { return finals_; }
  std::vector<State> finals() const;

  State next(State q, Letter a) const noexcept { return delta_[q * alphabet_.size() + a]; }
  State run(State q, const Word& w) const noexcept;
  bool accepts(const Word& w) const noexcept { return is_final(run(initial_, w)); }

  const std::vector<State>& delta() const noexcept { return delta_; }

  /// Structural equality (same numbering). Equal canonical forms mean
  /// equal languages.
  friend bool operator==(const Dfa&, const Dfa&) = default;

 private:
  Alphabet alphabet_;
  std::size_t states_ = 0;
  State initial_ = 0;
  std::vector<bool> finals_;
  std::vector<State> delta_;
};

/// Σ* and ∅ over an alphabet (single-state automata).
Dfa universal_language(const Alphabet& alphabet);
Dfa empty_language(const Alphabet& alphabet);

/// Drops unreachable states, merges equivalent ones (partition refinement)
/// and renumbers states breadth-first from the initial state, letters in
/// alphabet order. Equal languages give identical results.
Dfa minimize(const Dfa& d);

enum class BoolOp { Union, Intersection, Difference, SymmetricDifference };

/// Product construction followed by minimize(). Throws InputError on an
/// alphabet mismatch.
Dfa bool_op(BoolOp op, const Dfa& left, const Dfa& right);
Dfa complement(const Dfa& d);

/// {w : u w v ∈ L(d)}.
Dfa word_quotient(const Dfa& d, const Word& u, const Word& v);

/// {x w y : w ∈ L(d)}.
Dfa concat_words(const Word& x, const Dfa& d, const Word& y);

/// The mirror language {reverse(w) : w ∈ L(d)} (subset construction).
Dfa reverse(const Dfa& d);

bool is_empty(const Dfa& d);

/// Language equality via canonical forms. Throws InputError on an
/// alphabet mismatch.
bool equivalent(const Dfa& a, const Dfa& b);

/// A shortest word in the symmetric difference, if any.
std::optional<Word> distinguishing_word(const Dfa& a, const Dfa& b);

/// Non-erasing morphism from source words to target words.
class NeMorphism {
 public:
  /// Throws InputError if an image is empty or uses letters outside target.
  NeMorphism(Alphabet source, Alphabet target, std::vector<Word> images);

  static NeMorphism identity(const Alphabet& alphabet);

  const Alphabet& source() const noexcept { return source_; }
  const Alphabet& target() const noexcept { return target_; }
  const Word& image(Letter a) const { return images_.at(a); }
  Word apply(const Word& w) const;

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

/// f^{-1}(L(d)) over f's source alphabet.
Dfa ne_preimage(const NeMorphism& f, const Dfa& d);

}  // namespace essv
