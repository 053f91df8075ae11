#include <gtest/gtest.h>

#include "metabel/json_io.hpp"
#include "metabel/protocols.hpp"
#include "test_util.hpp"

namespace metabel {
namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

GroupElement el(std::initializer_list<long> alpha, Rational d) {
  MPart m;
  for (long a : alpha) m.alpha.emplace_back(a);
  return {std::move(m), std::move(d)};
}

void check_aag_invariants(const AagInstance& inst) {
  const auto& params = inst.pub.params;
  ASSERT_EQ(inst.secret.A, apply_factorization(params, inst.pub.a_tuple, inst.secret.A_factorization));
  ASSERT_EQ(inst.secret.B, apply_factorization(params, inst.pub.b_tuple, inst.secret.B_factorization));
  for (std::size_t i = 0; i < inst.pub.b_tuple.size(); ++i) {
    ASSERT_EQ(inst.pub.conj_b_by_A[i], conj(params, inst.pub.b_tuple[i], inst.secret.A));
    ASSERT_EQ(inst.pub.conj_b_by_A[i].m_part, inst.pub.b_tuple[i].m_part);
  }
  for (std::size_t i = 0; i < inst.pub.a_tuple.size(); ++i) {
    ASSERT_EQ(inst.pub.conj_a_by_B[i], conj(params, inst.pub.a_tuple[i], inst.secret.B));
  }
  ASSERT_EQ(inst.secret.true_key, commutator(params, inst.secret.A, inst.secret.B));
  ASSERT_TRUE(inst.secret.true_key.m_part.is_zero());
  ASSERT_FALSE(inst.secret.A.is_identity());
  ASSERT_FALSE(inst.secret.B.is_identity());
}

TEST(AagTest, GeneratedInstancesAreHonest) {
  const GroupParams params({2, 3});
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const AagInstance inst = aag_generate(params, AagShape{}, rng);
    check_aag_invariants(inst);
    ASSERT_EQ(inst.pub.a_tuple.size(), 5U);
    ASSERT_EQ(inst.secret.A_factorization.size(), 4U);
    ASSERT_EQ(aag_alice_key(inst), inst.secret.true_key);
    ASSERT_EQ(aag_bob_key(inst), inst.secret.true_key);
  }
}

TEST(AagTest, DeterministicUnderSeed) {
  const GroupParams params({2, 3});
  Rng a(123), b(123);
  EXPECT_EQ(to_json(aag_generate(params, AagShape{}, a)).dump(), to_json(aag_generate(params, AagShape{}, b)).dump());
}

TEST(AagTest, SmallestShape) {
  const GroupParams params({2});
  Rng rng(3);
  const AagInstance inst = aag_generate(params, AagShape{1, 1, 1, 1, 3}, rng);
  check_aag_invariants(inst);
  const auto& f = inst.secret.A_factorization[0];
  EXPECT_EQ(f.index, 0U);
  const GroupElement a1 = f.sign > 0 ? inst.pub.a_tuple[0] : inv(params, inst.pub.a_tuple[0]);
  EXPECT_EQ(inst.secret.A, a1);
  EXPECT_EQ(aag_alice_key(inst), inst.secret.true_key);
}

TEST(AagTest, SingleFactorKeyFormula) {
  const GroupParams params({2, 3});
  const auto inst = aag_assemble(params, {el({1, 0}, 2), el({0, 1}, q(1, 2))}, {el({1, 1}, 3)}, {{1, +1}},
                                 {{0, +1}});
  // K_A = A^{-1} (B^{-1} a_{s_1} B).
  EXPECT_EQ(aag_alice_key(inst), mul(params, inv(params, inst.secret.A), inst.pub.conj_a_by_B[1]));
  EXPECT_EQ(aag_alice_key(inst), inst.secret.true_key);
  EXPECT_EQ(aag_bob_key(inst), inst.secret.true_key);
}

TEST(AagTest, EqualSecretsGiveIdentityKey) {
  const GroupParams params({2});
  const GroupElement x = el({2}, q(3, 4));
  const auto inst = aag_assemble(params, {x}, {x}, {{0, 1}}, {{0, 1}});
  EXPECT_EQ(inst.secret.A, inst.secret.B);
  EXPECT_EQ(inst.secret.true_key, params.identity());
  EXPECT_EQ(aag_alice_key(inst), params.identity());
  EXPECT_EQ(aag_bob_key(inst), params.identity());
}

TEST(AagTest, CorrectnessAcrossParameterGrid) {
  int checked = 0;
  for (const auto& moduli : std::vector<std::vector<std::uint64_t>>{{2}, {2, 3}, {2, 4}, {6}, {3, 5, 7}}) {
    const GroupParams params(moduli);
    for (const AagShape shape : {AagShape{1, 1, 1, 1, 1}, AagShape{2, 3, 2, 5, 4}, AagShape{5, 5, 4, 4, 8}}) {
      Rng rng(moduli.size() * 1000 + shape.n2);
      for (int i = 0; i < 70; ++i, ++checked) {
        const AagInstance inst = aag_generate(params, shape, rng);
        ASSERT_EQ(aag_alice_key(inst), inst.secret.true_key);
        ASSERT_EQ(aag_bob_key(inst), inst.secret.true_key);
      }
    }
  }
  EXPECT_GE(checked, 1000);
}

TEST(KoLeeTest, SubMInstance) {
  const GroupParams params({2});
  Rng rng(7);
  const auto inst = kolee_generate(params, SubgroupKind::SubM, KoLeeBounds{}, rng);
  EXPECT_TRUE(inst.secret.a.n_part.is_zero());
  EXPECT_TRUE(inst.secret.b.n_part.is_zero());
  EXPECT_EQ(inst.secret.true_key, conj(params, conj(params, inst.pub.g, inst.secret.a), inst.secret.b));
}

TEST(KoLeeTest, SubNInstance) {
  const GroupParams params({2, 3});
  Rng rng(8);
  const auto inst = kolee_generate(params, SubgroupKind::SubN, KoLeeBounds{}, rng);
  EXPECT_TRUE(inst.secret.a.m_part.is_zero());
  EXPECT_TRUE(inst.secret.b.m_part.is_zero());
  EXPECT_EQ(mul(params, inst.secret.a, inst.secret.b), mul(params, inst.secret.b, inst.secret.a));
}

TEST(KoLeeTest, ConjMElementFormula) {
  const GroupParams params({2});
  // (1/2)(1 - 2) = -1/2.
  EXPECT_EQ(conj_m_element(params, q(1, 2), MPart{{Integer(1)}}), el({1}, q(-1, 2)));
  Rng rng(9);
  const auto inst = kolee_generate(params, SubgroupKind::ConjM, KoLeeBounds{}, rng);
  EXPECT_TRUE(in_subgroup(params, inst.pub.descriptor, inst.secret.a));
  EXPECT_TRUE(in_subgroup(params, inst.pub.descriptor, inst.secret.b));
  EXPECT_FALSE(inst.pub.descriptor.r.is_zero());
  EXPECT_TRUE(params.in_n(inst.pub.descriptor.r));
}

TEST(KoLeeTest, GeneratedPublicsAreNonDegenerate) {
  for (const auto kind : {SubgroupKind::SubM, SubgroupKind::SubN, SubgroupKind::ConjM}) {
    const GroupParams params({2, 3});
    Rng rng(static_cast<std::uint64_t>(kind) + 40);
    for (int i = 0; i < 300; ++i) {
      const auto inst = kolee_generate(params, kind, KoLeeBounds{}, rng);
      ASSERT_FALSE(inst.pub.g.n_part.is_zero());
      ASSERT_NE(params.chi(inst.pub.g.m_part), Rational(1));
      ASSERT_TRUE(in_subgroup(params, inst.pub.descriptor, inst.secret.a));
      ASSERT_TRUE(in_subgroup(params, inst.pub.descriptor, inst.secret.b));
      ASSERT_EQ(conj(params, conj(params, inst.pub.g, inst.secret.a), inst.secret.b),
                conj(params, conj(params, inst.pub.g, inst.secret.b), inst.secret.a));
      ASSERT_EQ(kolee_shared_key(inst), inst.secret.true_key);
    }
  }
}

TEST(KoLeeTest, SharedKeyEdgeCases) {
  const GroupParams params({2});
  const GroupElement g = el({1}, 3);
  const GroupElement b = el({2}, 0);
  const auto one_identity = kolee_assemble(params, g, SubgroupDescriptor::sub_m(), params.identity(), b);
  EXPECT_EQ(kolee_shared_key(one_identity), one_identity.pub.g_b);
  const auto both = kolee_assemble(params, g, SubgroupDescriptor::sub_m(), params.identity(), params.identity());
  EXPECT_EQ(kolee_shared_key(both), g);
}

TEST(KoLeeTest, NonCommutingSecretsAreRejected) {
  const GroupParams params({2});
  // a in M, b in N do not commute.
  expect_error(ErrorCode::CommutationViolation, [&] {
    (void)kolee_assemble(params, el({1}, 3), SubgroupDescriptor::sub_m(), el({1}, 0), el({0}, 1));
  });
}

TEST(ComplementTest, SameRCommutesDifferentRDoesNot) {
  const GroupParams params({2, 3});
  Rng rng(31);
  const Rational one(1);
  for (int i = 0; i < 500; ++i) {
    const Rational r = random_n_value(params, 3, Integer(20), rng);
    Rational r2 = random_n_value(params, 3, Integer(20), rng);
    if (r2 == r) r2 += one;
    MPart a1 = random_mpart(params, 3, rng), a2 = random_mpart(params, 3, rng);
    if (params.chi(a1) == one || params.chi(a2) == one) continue;
    const auto x = conj_m_element(params, r, a1);
    const auto y = conj_m_element(params, r, a2);
    const auto z = conj_m_element(params, r2, a2);
    ASSERT_EQ(mul(params, x, y), mul(params, y, x));
    ASSERT_NE(mul(params, x, z), mul(params, z, x));
  }
}

TEST(PublicViewTest, OmitsSecrets) {
  const GroupParams params({2, 3});
  Rng rng(2);
  const auto aag = aag_generate(params, AagShape{}, rng);
  const std::string pub = to_json(aag.pub).dump();
  for (const char* key : {"A_factorization", "B_factorization", "\"A\"", "\"B\"", "true_key"}) {
    EXPECT_EQ(pub.find(key), std::string::npos) << key;
  }
  const auto kolee = kolee_generate(params, SubgroupKind::ConjM, KoLeeBounds{}, rng);
  const Json kpub = to_json(kolee.pub);
  for (const char* key : {"a", "b", "true_key"}) EXPECT_FALSE(kpub.contains(key)) << key;
}

}  // namespace
}  // namespace metabel
