#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace essv {

/// Dense index of a monoid element. The identity need not be 0.
using Element = std::uint32_t;

/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<Element>;

/// A finite monoid given by its multiplication table.
///
/// Row index is the left factor. Values are immutable; copies share the
/// table, so passing monoids by value is cheap even for a few thousand
/// elements.
class Monoid {
 public:
  /// Validates ranges, the identity laws and associativity (O(n^3)).
  /// Throws InputError naming the first offending entry or triple.
  static Monoid from_table(const std::vector<std::vector<Element>>& rows, Element identity,
                           std::vector<std::string> names = {});

  /// Builds from a flat row-major table that is associative by
  /// construction (function composition, componentwise products,
  /// quotients by a checked congruence). Ranges and identity laws are
  /// still checked; associativity is not.
  static Monoid from_trusted(std::size_t size, std::vector<Element> flat_table, Element identity);

  /// The one-element monoid.
  static Monoid trivial();

  /// Cyclic group Z_n with elements 0..n-1 and identity 0.
  static Monoid cyclic_group(std::size_t n);

  std::size_t size() const noexcept { return size_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const noexcept { return (*table_)[a * size_ + b]; }

  /// The unique idempotent positive power of m.
  Element omega(Element m) const noexcept { return (*omega_)[m]; }

  bool is_idempotent(Element m) const noexcept { return mul(m, m) == m; }

  /// Product of a sequence of elements; the empty product is the identity.
  Element product(std::span<const Element> factors) const noexcept;

  /// True when every element has ω-power equal to the identity.
  bool is_group() const noexcept;

  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Display name of m: its name if names are set, otherwise its index.
  std::string name(Element m) const;

  std::vector<std::vector<Element>> rows() const;

  /// Same size, identity and table (names ignored).
  friend bool operator==(const Monoid& a, const Monoid& b) noexcept;

 private:
  Monoid(std::size_t size, std::shared_ptr<const std::vector<Element>> table, Element identity,
         std::vector<std::string> names);

  std::size_t size_ = 0;
  Element identity_ = 0;
  std::shared_ptr<const std::vector<Element>> table_;
  std::shared_ptr<const std::vector<Element>> omega_;
  std::vector<std::string> names_;
};

/// Computes the ω-power of m by iterating m, m^2, ... until m^k m^k = m^k.
Element omega(const Monoid& m, Element x);

/// Least submonoid containing the identity and gens.
ElementSet generated_submonoid(const Monoid& m, std::span<const Element> gens);

/// Direct product together with its pairing bijection.
struct ProductMonoid {
  Monoid monoid;
  std::size_t right_size = 0;

  Element pair(Element left, Element right) const noexcept {
    return static_cast<Element>(left * right_size + right);
  }
  Element first(Element e) const noexcept { return static_cast<Element>(e / right_size); }
  Element second(Element e) const noexcept { return static_cast<Element>(e % right_size); }
};

inline constexpr std::size_t kDefaultProductCap = 4096;

/// Componentwise product M x N. Throws InputError if |M|·|N| exceeds cap.
ProductMonoid direct_product(const Monoid& left, const Monoid& right,
                             std::size_t cap = kDefaultProductCap);

/// A partition of a monoid's carrier, intended to be compatible with
/// multiplication. Compatibility is checked by find_incompatibility() and
/// by quotient_monoid(), not at construction.
class MonoidCongruence {
 public:
  /// class_of[m] is an arbitrary label; labels are renumbered in order of
  /// first occurrence.
  MonoidCongruence(Monoid base, const std::vector<std::size_t>& class_of);

  static MonoidCongruence identity(const Monoid& base);
  static MonoidCongruence full(const Monoid& base);

  const Monoid& base() const noexcept { return base_; }
  std::size_t class_of(Element m) const noexcept { return class_of_[m]; }
  const std::vector<std::size_t>& classes() const noexcept { return class_of_; }
  std::size_t class_count() const noexcept { return class_count_; }

  /// A pair (a, b) of related elements and a multiplier c such that ac ≁ bc
  /// or ca ≁ cb, if any.
  struct Violation {
    Element a, b, c;
    bool on_left;  // true: c·a vs c·b
  };
  std::optional<Violation> find_incompatibility() const;

 private:
  Monoid base_;
  std::vector<std::size_t> class_of_;
  std::size_t class_count_ = 0;
};

struct QuotientMonoid {
  Monoid monoid;
  /// Surjective morphism from the base monoid.
  std::vector<Element> projection;
};

/// Throws InputError naming a violating pair when the partition is not a
/// congruence.
QuotientMonoid quotient_monoid(const MonoidCongruence& congruence);

/// Verdict of the division search; exhaustion is not a "no".
enum class DivisionVerdict { Divides, DoesNotDivide, BudgetExhausted };

struct DivisionBudget {
  std::size_t max_generators = 4;
  std::size_t max_target_size = 6;
};

/// Does `m` divide `n` (is m a quotient of a submonoid of n)? Exponential;
/// meant as a test oracle on small monoids.
DivisionVerdict divides(const Monoid& m, const Monoid& n, DivisionBudget budget = {});

const char* to_string(DivisionVerdict v) noexcept;

/// Whether f: carrier(a) -> carrier(b) is a monoid morphism.
bool is_morphism(const Monoid& a, const Monoid& b, std::span<const Element> f);

/// Whether two monoids are isomorphic (brute force over bijections fixing
/// the identity; small monoids only).
bool isomorphic(const Monoid& a, const Monoid& b);

}  // namespace essv
