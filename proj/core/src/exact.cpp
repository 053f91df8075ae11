#include "metabel/exact.hpp"

#include <algorithm>
#include <climits>

#include "metabel/error.hpp"

namespace metabel {

namespace {

bool is_decimal_integer(const std::string& text) {
  std::size_t i = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (i == text.size()) return false;
  return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace

Integer parse_integer(const std::string& text) {
  if (!is_decimal_integer(text)) {
    throw Error(ErrorCode::MalformedInput, "not a decimal integer: '" + text + "'");
  }
  return Integer(text, 10);
}

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorCode::ZeroDenominator, "denominator is zero");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::from_mpq(mpq_class value) {
  Rational r;
  r.value_ = std::move(value);
  r.value_.canonicalize();
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero rational");
  value_ /= rhs.value_;
  return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Rational pow(const Rational& x, long k) {
  if (k == 0) return Rational(1);
  if (x.is_zero()) {
    if (k < 0) throw Error(ErrorCode::ZeroToNegativePower, "0 raised to a negative power");
    return Rational(0);
  }
  const unsigned long e = k < 0 ? 0UL - static_cast<unsigned long>(k) : static_cast<unsigned long>(k);
  mpz_class num;
  mpz_class den;
  mpz_pow_ui(num.get_mpz_t(), x.num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.den().get_mpz_t(), e);
  // Powers of a coprime pair stay coprime, so only the sign needs fixing.
  if (k < 0) std::swap(num, den);
  return Rational(num, den);
}

Rational pow(const Rational& x, const Integer& k) {
  if (!k.fits_slong_p()) throw Error(ErrorCode::MalformedInput, "exponent too large");
  return pow(x, k.get_si());
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

std::map<std::uint64_t, unsigned> factorize(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t d = 2; d <= n / d; d += (d == 2 ? 1 : 2)) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (!is_prime(primes_[i])) {
      throw Error(ErrorCode::InvalidPrimeSet, std::to_string(primes_[i]) + " is not prime");
    }
    if (i > 0 && primes_[i - 1] >= primes_[i]) {
      throw Error(ErrorCode::InvalidPrimeSet, "primes must be strictly increasing");
    }
  }
}

bool PrimeSet::contains(std::uint64_t p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

StrippedInteger strip_primes(const Integer& x, const PrimeSet& primes) {
  if (x < 1) throw Error(ErrorCode::NonPositiveInput, "strip_primes needs x >= 1");
  StrippedInteger out{{}, x};
  for (const std::uint64_t p : primes.primes()) {
    const mpz_class prime(static_cast<unsigned long>(p));
    const unsigned long e =
        mpz_remove(out.remainder.get_mpz_t(), out.remainder.get_mpz_t(), prime.get_mpz_t());
    if (e > 0) out.exponents[p] = e;
  }
  return out;
}

}  // namespace metabel
