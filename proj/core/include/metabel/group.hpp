#ifndef METABEL_GROUP_HPP
#define METABEL_GROUP_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "metabel/exact.hpp"
#include "metabel/random.hpp"

namespace metabel {

/// Exponent vector of q_1..q_n, i.e. an element of M = Z^n.
struct MPart {
  std::vector<Integer> alpha;

  static MPart zero(std::size_t n) { return MPart{std::vector<Integer>(n, Integer(0))}; }
  bool is_zero() const;
  std::size_t size() const { return alpha.size(); }

  friend bool operator==(const MPart&, const MPart&) = default;
};

MPart operator+(const MPart& a, const MPart& b);
MPart operator-(const MPart& a);

/// Element q_1^{a_1}...q_n^{a_n} b^d of G = M x| N, stored as the pair (alpha, d).
struct GroupElement {
  MPart m_part;
  Rational n_part;

  static GroupElement identity(std::size_t n) { return {MPart::zero(n), Rational(0)}; }
  bool is_identity() const { return m_part.is_zero() && n_part.is_zero(); }

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Lexicographic (alpha, d) order; only used to normalize result sets.
bool element_less(const GroupElement& a, const GroupElement& b);

inline constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 31;

/// Parameters of the generalized metabelian Baumslag-Solitar group
///   < q_1..q_n, b | [q_i, q_j] = 1, b^{q_i} = b^{m_i} >.
///
/// Construction factors every modulus by trial division, so the prime
/// support of N = Z[m_1^{+-1}, ..., m_n^{+-1}] and the valuation matrix are
/// available to membership tests and exponent recovery.
class GroupParams {
 public:
  /// Throws ErrorCode::ModulusOutOfRange unless 2 <= m_i <= 2^31, and
  /// ErrorCode::MalformedInput for an empty list.
  explicit GroupParams(std::span<const std::uint64_t> moduli);
  explicit GroupParams(std::initializer_list<std::uint64_t> moduli)
      : GroupParams(std::span<const std::uint64_t>(moduli.begin(), moduli.size())) {}
  /// Accepts arbitrary-precision input so oversized moduli are reported as
  /// ModulusOutOfRange rather than overflowing.
  static GroupParams from_integers(std::span<const Integer> moduli);

  std::size_t n() const { return moduli_.size(); }
  const std::vector<std::uint64_t>& moduli() const { return moduli_; }
  const PrimeSet& prime_support() const { return support_; }
  /// valuation(p_index, i) = multiplicity of prime_support()[p_index] in m_i.
  unsigned valuation(std::size_t p_index, std::size_t i) const { return valuations_[p_index][i]; }
  /// prod m_i.
  const Integer& modulus_product() const { return product_; }

  /// chi(alpha) = prod m_i^{alpha_i}, the rational by which alpha acts on N.
  Rational chi(const MPart& alpha) const;

  /// True iff every prime factor of v's denominator lies in the support.
  bool in_n(const Rational& v) const;

  /// Throws ErrorCode::InvalidElement if x has the wrong arity or n_part not in N.
  void validate(const GroupElement& x) const;

  GroupElement identity() const { return GroupElement::identity(n()); }

  friend bool operator==(const GroupParams& a, const GroupParams& b) { return a.moduli_ == b.moduli_; }

 private:
  std::vector<std::uint64_t> moduli_;
  PrimeSet support_;
  std::vector<std::vector<unsigned>> valuations_;
  Integer product_;
};

/// (a1, d1)(a2, d2) = (a1 + a2, d1 chi(a2) + d2).
GroupElement mul(const GroupParams& params, const GroupElement& x, const GroupElement& y);

/// (a, d)^{-1} = (-a, -d chi(-a)).
GroupElement inv(const GroupParams& params, const GroupElement& x);

/// x^k for an integer k (k may be negative).
GroupElement power(const GroupParams& params, const GroupElement& x, long k);

/// g^x = x^{-1} g x in closed form: with g = (s, c) and x = (t, d),
/// g^x = (s, d (1 - chi(s)) + c chi(t)).
GroupElement conj(const GroupParams& params, const GroupElement& g, const GroupElement& x);

/// [a, b] = a^{-1} b^{-1} a b. Always lands in N.
GroupElement commutator(const GroupParams& params, const GroupElement& a, const GroupElement& b);

/// alpha uniform in [-exp_bound, exp_bound]^n, d = w / chi(gamma) with
/// w uniform in [-num_bound, num_bound] and gamma uniform in [0, exp_bound]^n.
GroupElement random_element(const GroupParams& params, long exp_bound, const Integer& num_bound, Rng& rng);

/// Random exponent vector in [-exp_bound, exp_bound]^n.
MPart random_mpart(const GroupParams& params, long exp_bound, Rng& rng);

/// w / chi(gamma) with w, gamma sampled as in random_element.
Rational random_n_value(const GroupParams& params, long exp_bound, const Integer& num_bound, Rng& rng);

}  // namespace metabel

#endif  // METABEL_GROUP_HPP
