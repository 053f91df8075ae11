#include <gtest/gtest.h>

#include "metabel/group.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace metabel {
namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

GroupElement el(std::initializer_list<long> alpha, Rational d) {
  MPart m;
  for (long a : alpha) m.alpha.emplace_back(a);
  return {std::move(m), std::move(d)};
}

TEST(GroupParamsTest, FactorsModuli) {
  const GroupParams one({2});
  EXPECT_EQ(one.n(), 1U);
  EXPECT_EQ(one.prime_support().primes(), (std::vector<std::uint64_t>{2}));
  EXPECT_EQ(one.valuation(0, 0), 1U);

  const GroupParams two({2, 3});
  EXPECT_EQ(two.prime_support().primes(), (std::vector<std::uint64_t>{2, 3}));
  EXPECT_EQ(two.valuation(0, 0), 1U);
  EXPECT_EQ(two.valuation(0, 1), 0U);
  EXPECT_EQ(two.valuation(1, 0), 0U);
  EXPECT_EQ(two.valuation(1, 1), 1U);

  const GroupParams mixed({12, 45});
  EXPECT_EQ(mixed.prime_support().primes(), (std::vector<std::uint64_t>{2, 3, 5}));
  // Factorizations are complete: prod p^V[p][i] = m_i.
  for (std::size_t i = 0; i < mixed.n(); ++i) {
    std::uint64_t back = 1;
    for (std::size_t p = 0; p < mixed.prime_support().size(); ++p) {
      for (unsigned k = 0; k < mixed.valuation(p, i); ++k) back *= mixed.prime_support().primes()[p];
    }
    EXPECT_EQ(back, mixed.moduli()[i]);
  }
  EXPECT_EQ(mixed.modulus_product(), 540);
}

TEST(GroupParamsTest, RejectsOutOfRangeModuli) {
  expect_error(ErrorCode::ModulusOutOfRange, [] { GroupParams({1}); });
  expect_error(ErrorCode::ModulusOutOfRange, [] { GroupParams({0}); });
  expect_error(ErrorCode::ModulusOutOfRange, [] { GroupParams({2, (std::uint64_t{1} << 31) + 1}); });
  EXPECT_NO_THROW(GroupParams({std::uint64_t{1} << 31}));
  expect_error(ErrorCode::MalformedInput, [] { GroupParams(std::span<const std::uint64_t>{}); });
  const std::vector<Integer> huge{Integer("100000000000000000000")};
  expect_error(ErrorCode::ModulusOutOfRange, [&] { (void)GroupParams::from_integers(huge); });
}

TEST(ChiTest, Examples) {
  EXPECT_EQ(GroupParams({2}).chi(MPart{{Integer(2)}}), Rational(4));
  const GroupParams p23({2, 3});
  const MPart alpha{{Integer(-1), Integer(2)}};
  EXPECT_EQ(p23.chi(alpha), q(9, 2));
  EXPECT_EQ(oracle::chi_by_repeated_product(p23, alpha), q(9, 2));
  EXPECT_EQ(p23.chi(MPart::zero(2)), Rational(1));
}

TEST(ChiTest, IsAHomomorphism) {
  const GroupParams params({2, 3, 10});
  Rng rng(1);
  for (int i = 0; i < 2000; ++i) {
    const MPart a = random_mpart(params, 6, rng), b = random_mpart(params, 6, rng);
    ASSERT_EQ(params.chi(a + b), params.chi(a) * params.chi(b));
    ASSERT_EQ(params.chi(a), oracle::chi_by_repeated_product(params, a));
  }
}

TEST(MembershipTest, Examples) {
  EXPECT_TRUE(GroupParams({6}).in_n(q(1, 2)));
  EXPECT_FALSE(GroupParams({2}).in_n(q(1, 3)));
  EXPECT_TRUE(GroupParams({2}).in_n(Rational(7)));
  EXPECT_TRUE(GroupParams({2, 3}).in_n(q(-35, 72)));
  EXPECT_FALSE(GroupParams({2, 3}).in_n(q(1, 10)));
}

TEST(MulTest, Examples) {
  const GroupParams p2({2});
  // q b q b = q^2 b^3 via b q = q b^2.
  EXPECT_EQ(mul(p2, el({1}, 1), el({1}, 1)), el({2}, 3));
  const GroupElement g = el({1}, q(5, 4));
  EXPECT_EQ(mul(p2, g, p2.identity()), g);
  EXPECT_EQ(mul(p2, p2.identity(), g), g);
  EXPECT_EQ(mul(p2, el({1}, 1), el({-1}, q(-1, 2))), p2.identity());
}

TEST(MulTest, MatchesAffineRepresentation) {
  const GroupParams params({2, 3});
  Rng rng(8);
  for (int i = 0; i < 2000; ++i) {
    const auto x = random_element(params, 4, Integer(50), rng);
    const auto y = random_element(params, 4, Integer(50), rng);
    const auto xy = mul(params, x, y);
    ASSERT_EQ(oracle::represent(params, xy), oracle::represent(params, x) * oracle::represent(params, y));
    ASSERT_EQ(xy.m_part, x.m_part + y.m_part);
  }
}

TEST(InvTest, Examples) {
  const GroupParams p2({2});
  EXPECT_EQ(inv(p2, p2.identity()), p2.identity());
  EXPECT_EQ(inv(p2, el({1}, 1)), el({-1}, q(-1, 2)));
  const GroupParams p23({2, 3});
  const GroupElement x = el({0, 1}, 9);
  EXPECT_EQ(inv(p23, x), el({0, -1}, -3));
  EXPECT_EQ(mul(p23, x, inv(p23, x)), p23.identity());
  EXPECT_EQ(oracle::represent(p23, inv(p23, x)), oracle::represent(p23, x).inverse());
}

TEST(PowerTest, MatchesRepeatedProduct) {
  const GroupParams params({3});
  const GroupElement x = el({1}, q(2, 3));
  GroupElement acc = params.identity();
  for (long k = 0; k <= 6; ++k) {
    EXPECT_EQ(power(params, x, k), acc);
    EXPECT_EQ(power(params, x, -k), inv(params, acc));
    acc = mul(params, acc, x);
  }
}

TEST(ConjTest, Examples) {
  const GroupParams p2({2});
  // b^{-1} (q b) b = q b^{-2} b^2 = q.
  EXPECT_EQ(conj(p2, el({1}, 1), el({0}, 1)), el({1}, 0));
  const GroupElement g = el({1}, q(3, 8));
  EXPECT_EQ(conj(p2, g, p2.identity()), g);
  // 5 (1 - 2) + 3 * 4 = 7.
  EXPECT_EQ(conj(p2, el({1}, 3), el({2}, 5)), el({1}, 7));
}

TEST(ConjTest, ClosedFormMatchesDefinition) {
  for (const auto& moduli : std::vector<std::vector<std::uint64_t>>{{2}, {2, 3}, {2, 4}, {6}}) {
    const GroupParams params(moduli);
    Rng rng(moduli.size() * 100 + moduli[0]);
    for (int i = 0; i < 1000; ++i) {
      const auto g = random_element(params, 3, Integer(30), rng);
      const auto x = random_element(params, 3, Integer(30), rng);
      const auto closed = conj(params, g, x);
      ASSERT_EQ(closed, mul(params, mul(params, inv(params, x), g), x));
      ASSERT_EQ(closed.m_part, g.m_part);
      const auto rx = oracle::represent(params, x);
      ASSERT_EQ(oracle::represent(params, closed), rx.inverse() * oracle::represent(params, g) * rx);
    }
  }
}

TEST(CommutatorTest, Examples) {
  const GroupParams p2({2});
  // [q, b] = q^{-1} b^{-1} q b = b^{-2} b = b^{-1}.
  EXPECT_EQ(commutator(p2, el({1}, 0), el({0}, 1)), el({0}, -1));
  const GroupElement a = el({3}, q(7, 4));
  EXPECT_EQ(commutator(p2, a, a), p2.identity());
  EXPECT_EQ(commutator(p2, a, p2.identity()), p2.identity());
}

TEST(CommutatorTest, LandsInN) {
  const GroupParams params({2, 4});
  Rng rng(12);
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_element(params, 3, Integer(20), rng);
    const auto b = random_element(params, 3, Integer(20), rng);
    const auto k = commutator(params, a, b);
    ASSERT_TRUE(k.m_part.is_zero());
    ASSERT_TRUE(params.in_n(k.n_part));
    const auto ra = oracle::represent(params, a), rb = oracle::represent(params, b);
    ASSERT_EQ(oracle::represent(params, k), ra.inverse() * rb.inverse() * ra * rb);
  }
}

TEST(RandomElementTest, DeterministicAndValid) {
  const GroupParams params({2, 3});
  Rng a(99), b(99);
  for (int i = 0; i < 500; ++i) {
    const auto x = random_element(params, 3, Integer(20), a);
    ASSERT_EQ(x, random_element(params, 3, Integer(20), b));
    ASSERT_NO_THROW(params.validate(x));
    for (const auto& e : x.m_part.alpha) ASSERT_LE(Integer(abs(e)), 3);
  }
  Rng c(5);
  EXPECT_EQ(random_element(params, 0, Integer(0), c), params.identity());
}

TEST(ValidateTest, RejectsForeignDenominatorsAndWrongArity) {
  const GroupParams params({2});
  expect_error(ErrorCode::InvalidElement, [&] { params.validate(el({1}, q(1, 3))); });
  expect_error(ErrorCode::InvalidElement, [&] { params.validate(el({1, 2}, 0)); });
}

}  // namespace
}  // namespace metabel
