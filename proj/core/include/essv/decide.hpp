#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "essv/dfa.hpp"
#include "essv/identity.hpp"
#include "essv/monoid.hpp"
#include "essv/stamp.hpp"

namespace essv {

/// The essential congruence of a stamp φ and the quotient stamp μ onto
/// Σ*/≡_φ.
///
/// Two elements m, m' are related iff α m β = α m' β for all α, β in
/// T = φ(Σ^{≥s}), s the stability index. Since φ(u) = φ(v) implies
/// u ≡_φ v, this element-level relation determines ≡_φ, and μ = π ∘ φ for
/// the projection π onto the quotient monoid.
struct EssentialQuotient {
  Stamp stamp;
  MonoidCongruence congruence;
  Stamp quotient_stamp;
  std::vector<Element> projection;
  ElementSet t;
  std::size_t stability_index = 1;
};

EssentialQuotient essential_quotient(const Stamp& s);

/// Σ*/≡_φ all-satisfies every identity of the basis.
bool is_essentially_v_structural(const Stamp& s, const std::vector<IdentityStatement>& basis);
bool is_essentially_v_structural(const EssentialQuotient& q, const std::vector<IdentityStatement>& basis);

/// A wrapped identity x^ω y u z t^ω = x^ω y v z t^ω that φ fails, with the
/// failing substitution.
struct EquationalFailure {
  IdentityStatement identity;
  IdentityViolation violation;
};

/// φ ne-satisfies every identity of u_of_e(basis). Returns the first
/// failure, or nothing when φ is essentially-V.
std::optional<EquationalFailure> essentially_v_failure(const Stamp& s,
                                                       const std::vector<IdentityStatement>& basis);
bool is_essentially_v_equational(const Stamp& s, const std::vector<IdentityStatement>& basis);

enum class DecisionMethod { Structural, Equational, Both };
const char* to_string(DecisionMethod m) noexcept;

/// Why a variety is accepted by in_join_with_li.
enum class CriterionStatus {
  Proved,         // R, L, J, groups
  Asserted,  // Com, ACom
  Standard,       // triv (the join is LI itself), A (contains LI)
};
const char* to_string(CriterionStatus s) noexcept;

struct JoinWitness {
  std::string identity;
  Assignment assignment;
  Element lhs_value = 0;
  Element rhs_value = 0;
};

struct JoinVerdict {
  std::string variety;
  bool in_join = false;
  DecisionMethod method = DecisionMethod::Both;
  CriterionStatus status = CriterionStatus::Proved;
  std::size_t monoid_size = 0;
  std::size_t quotient_size = 0;
  std::size_t stability_index = 1;
  std::optional<JoinWitness> witness;
};

/// Varieties V for which membership in V ∨ LI coincides with being
/// essentially-V.
const std::vector<std::string>& join_varieties();

/// Decides whether L(d) belongs to V ∨ LI by running both essentially-V
/// procedures on its syntactic stamp. Throws InputError for J1 ("criterion
/// (A) fails for J1") and for unknown names; throws ConsistencyError if the
/// two procedures disagree.
JoinVerdict in_join_with_li(const Dfa& d, std::string_view variety);

/// Result of the bounded quotient-expressibility search.
struct CriterionCheck {
  struct Match {
    Word u, v;
    std::size_t candidate;
  };
  bool found = false;
  /// One entry per (u, v) when found; the matches before the refutation
  /// otherwise.
  std::vector<Match> matches;
  /// First (u, v), in length-lexicographic order, with no candidate K.
  std::optional<std::pair<Word, Word>> refuted_at;
};

/// For each u ∈ Σ^k, v ∈ Σ^l, searches the candidates for K with
/// u^{-1} L v^{-1} = (xu)^{-1} K (vy)^{-1}.
CriterionCheck bounded_criterion_check(const Dfa& l, const Word& x, const Word& y, std::size_t k,
                                       std::size_t len_v, const std::vector<Dfa>& candidates);

/// All words of the given length in lexicographic order.
std::vector<Word> words_of_length(const Alphabet& alphabet, std::size_t length);

}  // namespace essv
