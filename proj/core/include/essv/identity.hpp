#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "essv/monoid.hpp"
#include "essv/stamp.hpp"

namespace essv {

/// A factor of an ω-term: a variable, or the ω-power of a term.
struct Factor {
  enum class Kind { Var, Omega } kind = Kind::Var;
  std::string name;           // Var
  std::vector<Factor> body;   // Omega

  static Factor var(std::string n) { return Factor{Kind::Var, std::move(n), {}}; }
  static Factor omega(std::vector<Factor> b) { return Factor{Kind::Omega, {}, std::move(b)}; }

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// A product of factors; the empty product is the constant 1.
using OmegaTerm = std::vector<Factor>;

struct IdentityStatement {
  OmegaTerm lhs;
  OmegaTerm rhs;

  /// Names occurring on either side, sorted.
  std::set<std::string> variables() const;

  friend bool operator==(const IdentityStatement&, const IdentityStatement&) = default;
};

/// Substitution range: the whole monoid, or the image of nonempty words.
enum class SatisfactionMode { All, Ne };

const char* to_string(SatisfactionMode mode) noexcept;

/// Parses "term = term". Grammar:
///   term   := "1" | factor+
///   factor := var | var "^w" | "(" term ")" "^w"
///   var    := [a-z][0-9]*
/// A run of letters such as "ab" is read as the variables a, b. Throws
/// InputError with the offending position.
IdentityStatement parse_identity(std::string_view text);
OmegaTerm parse_term(std::string_view text);

std::string to_string(const OmegaTerm& t);
std::string to_string(const IdentityStatement& id);

using Assignment = std::map<std::string, Element>;

/// Evaluates t; throws InputError on an unbound variable.
Element eval_term(const Monoid& m, const OmegaTerm& t, const Assignment& assignment);

/// A substitution under which the two sides differ.
struct IdentityViolation {
  Assignment assignment;
  Element lhs_value;
  Element rhs_value;
};

/// Checks lhs = rhs for every assignment of the variables into `range`.
/// Returns a violating assignment, or nothing when the identity holds.
std::optional<IdentityViolation> find_violation(const Monoid& m, const ElementSet& range,
                                                const IdentityStatement& id);

/// Range for a mode: the whole carrier (all) or φ(Σ⁺) (ne).
ElementSet substitution_range(const Stamp& s, SatisfactionMode mode);

bool satisfies(const Stamp& s, const IdentityStatement& id, SatisfactionMode mode);

/// All-satisfaction by a bare monoid.
bool satisfies(const Monoid& m, const IdentityStatement& id);

/// x^ω y u z t^ω = x^ω y v z t^ω for each u = v, with x, y, z, t renamed
/// by appending digits until they avoid the variables of u = v.
std::vector<IdentityStatement> u_of_e(const std::vector<IdentityStatement>& basis);
IdentityStatement u_of_e(const IdentityStatement& id);

/// Where a builtin basis comes from.
enum class BasisSource { Cited, Standard };

struct Basis {
  std::string name;
  std::vector<IdentityStatement> identities;
  SatisfactionMode mode = SatisfactionMode::All;
  BasisSource source = BasisSource::Standard;
};

/// Names accepted by builtin_basis().
const std::vector<std::string>& builtin_basis_names();

/// R, L, J, LI, J1, Com, ACom, A, G, Ab, triv. Throws InputError listing
/// the choices on an unknown name.
Basis builtin_basis(std::string_view name);

}  // namespace essv
