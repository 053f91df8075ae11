#ifndef METABEL_EXACT_HPP
#define METABEL_EXACT_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace metabel {

/// Arbitrary-precision signed integer (GMP).
using Integer = mpz_class;

Integer parse_integer(const std::string& text);

/// Exact rational number kept in lowest terms with a positive denominator.
///
/// Canonical form is established by every constructor and every operation,
/// so equality is structural.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)

  /// Normalizes num/den. Throws ErrorCode::ZeroDenominator when den == 0.
  Rational(const Integer& num, const Integer& den);

  static Rational from_mpq(mpq_class value);

  Integer num() const { return value_.get_num(); }
  Integer den() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return from_mpq(-value_); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws ErrorCode::DivisionByZero when rhs is zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "n" for integers, "n/d" otherwise.
  std::string to_string() const;
  /// Accepts "n" or "n/d" (d nonzero).
  static Rational parse(const std::string& text);

  const mpq_class& mpq() const { return value_; }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

/// Exact x^k. Throws ErrorCode::ZeroToNegativePower for x == 0, k < 0.
Rational pow(const Rational& x, long k);
Rational pow(const Rational& x, const Integer& k);

/// Sorted set of distinct primes (each >= 2).
class PrimeSet {
 public:
  PrimeSet() = default;
  /// Throws ErrorCode::InvalidPrimeSet unless the input is strictly increasing
  /// and every entry is prime.
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool contains(std::uint64_t p) const;

  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

 private:
  std::vector<std::uint64_t> primes_;
};

/// Deterministic trial-division primality test.
bool is_prime(std::uint64_t n);

/// Prime factorization by trial division: prime -> multiplicity.
std::map<std::uint64_t, unsigned> factorize(std::uint64_t n);

struct StrippedInteger {
  std::map<std::uint64_t, unsigned long> exponents;  // only primes that divide x
  Integer remainder;
};

/// Splits x = remainder * prod p^e over p in primes, with remainder coprime
/// to every p. Throws ErrorCode::NonPositiveInput if x < 1.
StrippedInteger strip_primes(const Integer& x, const PrimeSet& primes);

}  // namespace metabel

#endif  // METABEL_EXACT_HPP
