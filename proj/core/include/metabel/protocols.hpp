#ifndef METABEL_PROTOCOLS_HPP
#define METABEL_PROTOCOLS_HPP

#include <string_view>
#include <vector>

#include "metabel/group.hpp"
#include "metabel/words.hpp"

namespace metabel {

// ---------------------------------------------------------------------------
// Commutator (AAG) key exchange
// ---------------------------------------------------------------------------

/// One factor a_index^sign of a private element.
struct Factor {
  std::size_t index = 0;  // 0-based into the relevant public tuple
  int sign = 1;           // +1 or -1

  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Everything the two parties publish.
struct AagPublic {
  GroupParams params;
  std::vector<GroupElement> a_tuple;
  std::vector<GroupElement> b_tuple;
  std::vector<GroupElement> conj_b_by_A;  // b_i^A, published by Alice
  std::vector<GroupElement> conj_a_by_B;  // a_i^B, published by Bob
};

/// Ground truth kept only for scoring attacks.
struct AagSecret {
  std::vector<Factor> A_factorization;
  std::vector<Factor> B_factorization;
  GroupElement A;
  GroupElement B;
  GroupElement true_key;
};

struct AagInstance {
  AagPublic pub;
  AagSecret secret;
};

struct AagShape {
  std::size_t n1 = 5;
  std::size_t n2 = 5;
  std::size_t l = 4;
  std::size_t m = 4;
  std::size_t word_len = 8;
};

/// Product of tuple[f.index]^{f.sign} over the factorization.
GroupElement apply_factorization(const GroupParams& params, const std::vector<GroupElement>& tuple,
                                 const std::vector<Factor>& factors);

/// Runs the protocol honestly: public tuples are evaluated random words,
/// private factorizations are uniform, and an instance whose A or B is the
/// identity is thrown away and regenerated.
AagInstance aag_generate(const GroupParams& params, const AagShape& shape, Rng& rng);

/// Same protocol, but the public tuples are random_element draws with the
/// given bounds instead of evaluated words. Used to scale entry sizes.
AagInstance aag_generate_from_elements(const GroupParams& params, const AagShape& shape, long exp_bound,
                                       const Integer& num_bound, Rng& rng);

/// Builds every derived field of an instance from tuples and factorizations.
AagInstance aag_assemble(const GroupParams& params, std::vector<GroupElement> a_tuple,
                         std::vector<GroupElement> b_tuple, std::vector<Factor> A_factorization,
                         std::vector<Factor> B_factorization);

/// K_A = A^{-1} (a_{s_1}^B)^{e_1} ... (a_{s_l}^B)^{e_l}.
GroupElement aag_alice_key(const AagInstance& instance);

/// K_B = ((b_{t_1}^A)^{d_1} ... (b_{t_m}^A)^{d_m})^{-1} B.
GroupElement aag_bob_key(const AagInstance& instance);

// ---------------------------------------------------------------------------
// Non-commutative Diffie-Hellman (Ko-Lee)
// ---------------------------------------------------------------------------

enum class SubgroupKind { SubM, SubN, ConjM };

std::string_view to_string(SubgroupKind kind);  // "m", "n", "conj"
SubgroupKind parse_subgroup_kind(std::string_view text);

/// The commuting subgroup both parties draw their secrets from:
///   SubM:     M = {(alpha, 0)}
///   SubN:     N = {(0, d)}
///   ConjM(r): M^r = {(alpha, r (1 - chi(alpha)))}, r any rational.
struct SubgroupDescriptor {
  SubgroupKind kind = SubgroupKind::SubM;
  Rational r;  // meaningful for ConjM only

  static SubgroupDescriptor sub_m() { return {SubgroupKind::SubM, Rational(0)}; }
  static SubgroupDescriptor sub_n() { return {SubgroupKind::SubN, Rational(0)}; }
  static SubgroupDescriptor conj_m(Rational r) { return {SubgroupKind::ConjM, std::move(r)}; }

  friend bool operator==(const SubgroupDescriptor&, const SubgroupDescriptor&) = default;
};

/// Whether x lies in the subgroup described by omega.
bool in_subgroup(const GroupParams& params, const SubgroupDescriptor& omega, const GroupElement& x);

/// The element of M^r over alpha: (alpha, r (1 - chi(alpha))).
GroupElement conj_m_element(const GroupParams& params, const Rational& r, const MPart& alpha);

struct KoLeePublic {
  GroupParams params;
  GroupElement g;
  SubgroupDescriptor descriptor;
  GroupElement g_a;
  GroupElement g_b;
};

struct KoLeeSecret {
  GroupElement a;
  GroupElement b;
  GroupElement true_key;
};

struct KoLeeInstance {
  KoLeePublic pub;
  KoLeeSecret secret;
};

/// Sampling bounds for Ko-Lee generation.
struct KoLeeBounds {
  long exp_bound = 3;
  Integer num_bound = 20;
};

/// g is resampled until its n-part is nonzero and chi(m-part) != 1. For
/// ConjM a nonzero r in N is drawn; secrets are drawn inside the subgroup
/// with chi(m-part) != 1 (SubM, ConjM) or nonzero n-part (SubN).
KoLeeInstance kolee_generate(const GroupParams& params, SubgroupKind kind, const KoLeeBounds& bounds, Rng& rng);

/// Builds the derived public values and key from explicit secrets.
KoLeeInstance kolee_assemble(const GroupParams& params, GroupElement g, SubgroupDescriptor descriptor,
                             GroupElement a, GroupElement b);

/// (g^b)^a, checked against (g^a)^b. Throws ErrorCode::CommutationViolation
/// when they differ.
GroupElement kolee_shared_key(const KoLeeInstance& instance);

}  // namespace metabel

#endif  // METABEL_PROTOCOLS_HPP
