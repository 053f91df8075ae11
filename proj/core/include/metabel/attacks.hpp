#ifndef METABEL_ATTACKS_HPP
#define METABEL_ATTACKS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metabel/group.hpp"
#include "metabel/protocols.hpp"

namespace metabel {

/// One linear equation  coeff_d * d + coeff_t * t = rhs  over Q, obtained
/// from g^x = h with g = (s, c), h = (s, c'):  d (1 - chi(s)) + c t = c'.
struct ConjRow {
  Rational coeff_d;
  Rational coeff_t;
  Rational rhs;

  friend bool operator==(const ConjRow&, const ConjRow&) = default;
};

/// Throws ErrorCode::NotConjugate when g and h have different m-parts.
ConjRow csp_row(const GroupParams& params, const GroupElement& g, const GroupElement& h);

enum class SolveStatus { Unique, AmbiguousLine, AmbiguousAll };

std::string_view to_string(SolveStatus status);  // "unique", "ambiguous-line", "ambiguous-all"
SolveStatus parse_solve_status(std::string_view text);

struct ScspSolution {
  Rational t;
  Rational d;
  MPart alpha;  // chi(alpha) == t
  SolveStatus status = SolveStatus::Unique;

  GroupElement element() const { return {alpha, d}; }
};

using ConjugacyPair = std::pair<GroupElement, GroupElement>;

/// Finds x with g_i^x = h_i for every pair.
///
/// Rows are reduced to the 2x2 system formed by the first nonzero row and
/// the first later row that is not proportional to it. With such a pair the
/// answer is unique. Otherwise a deterministic representative of the
/// solution set is returned and the status says how much freedom was left.
/// The returned element is checked against every pair before return.
///
/// Errors: NotConjugate (from csp_row), Inconsistent when the rows have no
/// common solution in G, NoExponentVector when t is not a value of chi.
ScspSolution solve_scsp(const GroupParams& params, const std::vector<ConjugacyPair>& pairs);

/// Integer alpha with chi(alpha) == t. With multiplicatively dependent
/// moduli any solution is returned. Throws ErrorCode::NoExponentVector when
/// t <= 0, when t has a prime outside the support, or when the valuation
/// system has no integral solution.
MPart recover_alpha(const GroupParams& params, const Rational& t);

/// Result of attacking one AAG instance from its public data.
struct AagAttackResult {
  ScspSolution solution_A;  // from pairs (b_i, b_i^A)
  ScspSolution solution_B;  // from pairs (a_i, a_i^B)
  GroupElement recovered_key;
  std::int64_t wall_time_us = 0;
};

AagAttackResult aag_attack(const AagPublic& pub);

/// Identifies the commuting subgroup spanned by published generators.
/// Throws ErrorCode::NotAComplement when they do not fit a single M^r, and
/// ErrorCode::MalformedInput for an empty list.
SubgroupDescriptor derive_r(const GroupParams& params, const std::vector<GroupElement>& omega_generators);

struct KoLeeAttackResult {
  GroupElement recovered_secret;
  std::string note;
};

/// Recovers a' in the subgroup with g^{a'} = g_a.
///
/// Errors: NotConjugate, DegeneratePublic (the divisor c, 1 - s or
/// c - r + r s vanishes), NoExponentVector, MembershipViolation (recovered
/// n-part outside N), Inconsistent (final check failed).
KoLeeAttackResult kolee_attack(const GroupParams& params, const GroupElement& g, const GroupElement& g_a,
                               const SubgroupDescriptor& descriptor);

/// (g_b)^{a'}.
GroupElement kolee_recover_key(const GroupParams& params, const GroupElement& g_b, const GroupElement& a_prime);

struct KoLeeFullAttack {
  KoLeeAttackResult attack;
  GroupElement recovered_key;
  std::int64_t wall_time_us = 0;
};

KoLeeFullAttack kolee_attack_public(const KoLeePublic& pub);

/// Exhaustive search for solution validation.
struct BruteForceBounds {
  long exp_bound = 3;    // alpha in [-exp_bound, exp_bound]^n
  long denom_bound = 3;  // gamma in [0, denom_bound]^n
  long num_bound = 20;   // w in [-num_bound, num_bound]
};

inline constexpr std::uint64_t kMaxBruteForceGrid = 1'000'000;

/// Every x = (alpha, w / chi(gamma)) in the grid with g_i^x = h_i for all
/// pairs, deduplicated and sorted by element_less. Throws
/// ErrorCode::SearchSpaceTooLarge if the raw grid exceeds 10^6 points.
std::vector<GroupElement> brute_force_conjugator(const GroupParams& params, const std::vector<ConjugacyPair>& pairs,
                                                 const BruteForceBounds& bounds);

}  // namespace metabel

#endif  // METABEL_ATTACKS_HPP
