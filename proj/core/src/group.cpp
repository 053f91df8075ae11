#include "metabel/group.hpp"

#include <algorithm>
#include <string>

#include "metabel/error.hpp"

namespace metabel {

bool MPart::is_zero() const {
  return std::all_of(alpha.begin(), alpha.end(), [](const Integer& a) { return a == 0; });
}

MPart operator+(const MPart& a, const MPart& b) {
  MPart out;
  out.alpha.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.alpha.push_back(a.alpha[i] + b.alpha[i]);
  return out;
}

MPart operator-(const MPart& a) {
  MPart out;
  out.alpha.reserve(a.size());
  for (const auto& v : a.alpha) out.alpha.push_back(-v);
  return out;
}

bool element_less(const GroupElement& a, const GroupElement& b) {
  for (std::size_t i = 0; i < a.m_part.size(); ++i) {
    if (a.m_part.alpha[i] != b.m_part.alpha[i]) return a.m_part.alpha[i] < b.m_part.alpha[i];
  }
  return a.n_part < b.n_part;
}

GroupParams::GroupParams(std::span<const std::uint64_t> moduli) : moduli_(moduli.begin(), moduli.end()) {
  if (moduli_.empty()) throw Error(ErrorCode::MalformedInput, "at least one modulus is required");
  std::map<std::uint64_t, std::vector<unsigned>> table;
  product_ = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const std::uint64_t m = moduli_[i];
    if (m < 2 || m > kMaxModulus) {
      throw Error(ErrorCode::ModulusOutOfRange, "modulus " + std::to_string(m) + " outside [2, 2^31]");
    }
    product_ *= Integer(static_cast<unsigned long>(m));
    for (const auto& [p, e] : factorize(m)) {
      auto& row = table[p];
      row.resize(moduli_.size(), 0);
      row[i] = e;
    }
  }
  std::vector<std::uint64_t> primes;
  for (auto& [p, row] : table) {
    primes.push_back(p);
    valuations_.push_back(std::move(row));
  }
  support_ = PrimeSet(std::move(primes));
}

GroupParams GroupParams::from_integers(std::span<const Integer> moduli) {
  std::vector<std::uint64_t> values;
  for (const auto& m : moduli) {
    if (m < 2 || m > Integer(static_cast<unsigned long>(kMaxModulus))) {
      throw Error(ErrorCode::ModulusOutOfRange, "modulus " + m.get_str() + " outside [2, 2^31]");
    }
    values.push_back(m.get_ui());
  }
  return GroupParams(values);
}

Rational GroupParams::chi(const MPart& alpha) const {
  Integer num = 1;
  Integer den = 1;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    const Integer& a = alpha.alpha[i];
    if (a == 0) continue;
    if (!a.fits_slong_p()) throw Error(ErrorCode::MalformedInput, "exponent too large");
    const long e = a.get_si();
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(moduli_[i]),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    (e < 0 ? den : num) *= p;
  }
  return Rational(num, den);
}

bool GroupParams::in_n(const Rational& v) const { return strip_primes(v.den(), support_).remainder == 1; }

void GroupParams::validate(const GroupElement& x) const {
  if (x.m_part.size() != n()) {
    throw Error(ErrorCode::InvalidElement,
                "expected " + std::to_string(n()) + " exponents, got " + std::to_string(x.m_part.size()));
  }
  if (!in_n(x.n_part)) {
    throw Error(ErrorCode::InvalidElement, "n-part " + x.n_part.to_string() + " is not in N");
  }
}

GroupElement mul(const GroupParams& params, const GroupElement& x, const GroupElement& y) {
  return {x.m_part + y.m_part, x.n_part * params.chi(y.m_part) + y.n_part};
}

GroupElement inv(const GroupParams& params, const GroupElement& x) {
  MPart neg = -x.m_part;
  Rational d = -(x.n_part * params.chi(neg));
  return {std::move(neg), std::move(d)};
}

GroupElement power(const GroupParams& params, const GroupElement& x, long k) {
  GroupElement base = k < 0 ? inv(params, x) : x;
  unsigned long e = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  GroupElement acc = params.identity();
  while (e > 0) {
    if (e & 1UL) acc = mul(params, acc, base);
    e >>= 1;
    if (e > 0) base = mul(params, base, base);
  }
  return acc;
}

GroupElement conj(const GroupParams& params, const GroupElement& g, const GroupElement& x) {
  const Rational s = params.chi(g.m_part);
  const Rational t = params.chi(x.m_part);
  return {g.m_part, x.n_part * (Rational(1) - s) + g.n_part * t};
}

GroupElement commutator(const GroupParams& params, const GroupElement& a, const GroupElement& b) {
  // a^{-1} b^{-1} a b = a^{-1} a^b
  return mul(params, inv(params, a), conj(params, a, b));
}

MPart random_mpart(const GroupParams& params, long exp_bound, Rng& rng) {
  MPart out;
  out.alpha.reserve(params.n());
  for (std::size_t i = 0; i < params.n(); ++i) out.alpha.emplace_back(uniform_int(rng, -exp_bound, exp_bound));
  return out;
}

Rational random_n_value(const GroupParams& params, long exp_bound, const Integer& num_bound, Rng& rng) {
  Integer w = uniform_integer(rng, num_bound);
  MPart gamma;
  gamma.alpha.reserve(params.n());
  for (std::size_t i = 0; i < params.n(); ++i) gamma.alpha.emplace_back(uniform_int(rng, 0, exp_bound));
  return Rational(w) / params.chi(gamma);
}

GroupElement random_element(const GroupParams& params, long exp_bound, const Integer& num_bound, Rng& rng) {
  MPart alpha = random_mpart(params, exp_bound, rng);
  Rational d = random_n_value(params, exp_bound, num_bound, rng);
  return {std::move(alpha), std::move(d)};
}

}  // namespace metabel
