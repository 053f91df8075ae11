#include "metabel/attacks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <set>

#include "metabel/error.hpp"

namespace metabel {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t micros_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start).count();
}

bool row_is_zero(const ConjRow& row) { return row.coeff_d.is_zero() && row.coeff_t.is_zero(); }

Rational minor(const ConjRow& a, const ConjRow& b) { return a.coeff_d * b.coeff_t - b.coeff_d * a.coeff_t; }

// Calls visit(alpha) for every integer vector of the given length and L1
// norm, in a fixed order. Stops early when visit returns true.
bool for_each_with_norm(std::size_t length, long norm, const std::function<bool(const MPart&)>& visit) {
  MPart alpha = MPart::zero(length);
  std::function<bool(std::size_t, long)> rec = [&](std::size_t i, long left) -> bool {
    if (i + 1 == length) {
      alpha.alpha[i] = left;
      if (visit(alpha)) return true;
      if (left != 0) {
        alpha.alpha[i] = -left;
        if (visit(alpha)) return true;
      }
      return false;
    }
    for (long k = 0; k <= left; ++k) {
      alpha.alpha[i] = k;
      if (rec(i + 1, left - k)) return true;
      if (k != 0) {
        alpha.alpha[i] = -k;
        if (rec(i + 1, left - k)) return true;
      }
    }
    return false;
  };
  return rec(0, norm);
}

// Bound on the rank-1 representative scan.
constexpr long kMaxScanNorm = 64;
constexpr std::uint64_t kMaxScanCandidates = 200'000;
// Bound on the residue box searched by recover_alpha.
constexpr std::uint64_t kMaxResidueBox = 10'000'000;

}  // namespace

ConjRow csp_row(const GroupParams& params, const GroupElement& g, const GroupElement& h) {
  if (g.m_part != h.m_part) {
    throw Error(ErrorCode::NotConjugate, "m-parts differ, so no conjugator exists");
  }
  return {Rational(1) - params.chi(g.m_part), g.n_part, h.n_part};
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::Unique: return "unique";
    case SolveStatus::AmbiguousLine: return "ambiguous-line";
    case SolveStatus::AmbiguousAll: return "ambiguous-all";
  }
  return "?";
}

SolveStatus parse_solve_status(std::string_view text) {
  if (text == "unique") return SolveStatus::Unique;
  if (text == "ambiguous-line") return SolveStatus::AmbiguousLine;
  if (text == "ambiguous-all") return SolveStatus::AmbiguousAll;
  throw Error(ErrorCode::MalformedInput, "unknown status '" + std::string(text) + "'");
}

MPart recover_alpha(const GroupParams& params, const Rational& t) {
  if (t.sign() <= 0) throw Error(ErrorCode::NoExponentVector, "t = " + t.to_string() + " is not positive");
  const PrimeSet& support = params.prime_support();
  const StrippedInteger num = strip_primes(t.num(), support);
  const StrippedInteger den = strip_primes(t.den(), support);
  if (num.remainder != 1 || den.remainder != 1) {
    throw Error(ErrorCode::NoExponentVector, "t = " + t.to_string() + " has a prime outside the support");
  }

  // Augmented valuation system  V alpha = v  (one row per prime).
  const std::size_t rows = support.size();
  const std::size_t cols = params.n();
  std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols + 1));
  for (std::size_t p = 0; p < rows; ++p) {
    const std::uint64_t prime = support.primes()[p];
    for (std::size_t i = 0; i < cols; ++i) a[p][i] = Rational(static_cast<long>(params.valuation(p, i)));
    Integer v = 0;
    if (auto it = num.exponents.find(prime); it != num.exponents.end()) v += it->second;
    if (auto it = den.exponents.find(prime); it != den.exponents.end()) v -= it->second;
    a[p][cols] = Rational(v);
  }

  // Reduced row echelon form over Q.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && a[pivot][c].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[r], a[pivot]);
    const Rational lead = a[r][c];
    for (auto& x : a[r]) x /= lead;
    for (std::size_t k = 0; k < rows; ++k) {
      if (k == r || a[k][c].is_zero()) continue;
      const Rational factor = a[k][c];
      for (std::size_t j = c; j <= cols; ++j) a[k][j] -= factor * a[r][j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t k = r; k < rows; ++k) {
    if (!a[k][cols].is_zero()) {
      throw Error(ErrorCode::NoExponentVector, "valuations of " + t.to_string() + " are not reachable");
    }
  }

  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c) {
    if (std::find(pivot_cols.begin(), pivot_cols.end(), c) == pivot_cols.end()) free_cols.push_back(c);
  }

  // Integrality of the pivot values only depends on the free values modulo
  // the common denominator of the free-column coefficients, so scanning
  // one residue box is a complete search.
  Integer modulus = 1;
  for (std::size_t k = 0; k < r; ++k) {
    for (const std::size_t c : free_cols) mpz_lcm(modulus.get_mpz_t(), modulus.get_mpz_t(), a[k][c].den().get_mpz_t());
  }
  Integer box = 1;
  for (std::size_t f = 0; f < free_cols.size(); ++f) box *= modulus;
  if (box > Integer(static_cast<unsigned long>(kMaxResidueBox))) {
    throw Error(ErrorCode::NoExponentVector, "valuation kernel too large to search");
  }

  std::vector<Integer> free_values(free_cols.size(), Integer(0));
  for (;;) {
    MPart alpha = MPart::zero(cols);
    for (std::size_t f = 0; f < free_cols.size(); ++f) alpha.alpha[free_cols[f]] = free_values[f];
    bool integral = true;
    for (std::size_t k = 0; k < r && integral; ++k) {
      Rational value = a[k][cols];
      for (std::size_t f = 0; f < free_cols.size(); ++f) value -= a[k][free_cols[f]] * Rational(free_values[f]);
      if (!value.is_integer()) {
        integral = false;
      } else {
        alpha.alpha[pivot_cols[k]] = value.num();
      }
    }
    if (integral) return alpha;

    std::size_t f = 0;
    while (f < free_values.size()) {
      if (++free_values[f] < modulus) break;
      free_values[f] = 0;
      ++f;
    }
    if (f == free_values.size()) break;
  }
  throw Error(ErrorCode::NoExponentVector, "no integral exponent vector for " + t.to_string());
}

ScspSolution solve_scsp(const GroupParams& params, const std::vector<ConjugacyPair>& pairs) {
  if (pairs.empty()) throw Error(ErrorCode::MalformedInput, "solve_scsp needs at least one pair");
  std::vector<ConjRow> rows;
  rows.reserve(pairs.size());
  for (const auto& [g, h] : pairs) rows.push_back(csp_row(params, g, h));

  const auto first = std::find_if(rows.begin(), rows.end(), [](const ConjRow& row) { return !row_is_zero(row); });
  const ConjRow* second = nullptr;
  if (first != rows.end()) {
    for (auto it = std::next(first); it != rows.end(); ++it) {
      if (!minor(*first, *it).is_zero()) {
        second = &*it;
        break;
      }
    }
  }

  ScspSolution sol;
  if (first == rows.end()) {
    sol = {Rational(1), Rational(0), MPart::zero(params.n()), SolveStatus::AmbiguousAll};
  } else if (second != nullptr) {
    const ConjRow& p = *first;
    const ConjRow& q = *second;
    const Rational det = minor(p, q);
    sol.d = (p.rhs * q.coeff_t - q.rhs * p.coeff_t) / det;
    sol.t = (p.coeff_d * q.rhs - q.coeff_d * p.rhs) / det;
    sol.status = SolveStatus::Unique;
    if (sol.t.sign() <= 0) throw Error(ErrorCode::Inconsistent, "solved t = " + sol.t.to_string() + " is not positive");
    sol.alpha = recover_alpha(params, sol.t);
  } else {
    const ConjRow& p = *first;
    sol.status = SolveStatus::AmbiguousLine;
    if (p.coeff_t.is_zero()) {
      sol.t = Rational(1);
      sol.alpha = MPart::zero(params.n());
      sol.d = p.rhs / p.coeff_d;
    } else if (p.coeff_d.is_zero()) {
      sol.t = p.rhs / p.coeff_t;
      sol.d = Rational(0);
      if (sol.t.sign() <= 0) throw Error(ErrorCode::Inconsistent, "solved t = " + sol.t.to_string() + " is not positive");
      sol.alpha = recover_alpha(params, sol.t);
    } else {
      // Walk exponent vectors by growing L1 norm until d = (rhs - coeff_t t) / coeff_d lands in N.
      bool found = false;
      std::uint64_t tried = 0;
      for (long norm = 0; norm <= kMaxScanNorm && !found && tried < kMaxScanCandidates; ++norm) {
        found = for_each_with_norm(params.n(), norm, [&](const MPart& alpha) {
          ++tried;
          const Rational t = params.chi(alpha);
          Rational d = (p.rhs - p.coeff_t * t) / p.coeff_d;
          if (!params.in_n(d)) return tried >= kMaxScanCandidates;
          sol.t = t;
          sol.d = std::move(d);
          sol.alpha = alpha;
          return true;
        });
        found = found && sol.alpha.size() == params.n();
      }
      if (!found) throw Error(ErrorCode::Inconsistent, "no point of the solution line lies in G within the scan bound");
    }
  }

  if (!params.in_n(sol.d)) throw Error(ErrorCode::Inconsistent, "solved d = " + sol.d.to_string() + " is not in N");
  for (const auto& row : rows) {
    if (row.coeff_d * sol.d + row.coeff_t * sol.t != row.rhs) {
      throw Error(ErrorCode::Inconsistent, "rows have no common solution");
    }
  }
  const GroupElement x = sol.element();
  for (const auto& [g, h] : pairs) {
    if (conj(params, g, x) != h) throw Error(ErrorCode::Inconsistent, "recovered conjugator fails verification");
  }
  return sol;
}

AagAttackResult aag_attack(const AagPublic& pub) {
  const auto start = Clock::now();
  const auto& params = pub.params;
  if (pub.b_tuple.size() != pub.conj_b_by_A.size() || pub.a_tuple.size() != pub.conj_a_by_B.size()) {
    throw Error(ErrorCode::MalformedInput, "tuple and conjugate tuple lengths differ");
  }
  std::vector<ConjugacyPair> system_A;
  std::vector<ConjugacyPair> system_B;
  for (std::size_t i = 0; i < pub.b_tuple.size(); ++i) system_A.emplace_back(pub.b_tuple[i], pub.conj_b_by_A[i]);
  for (std::size_t i = 0; i < pub.a_tuple.size(); ++i) system_B.emplace_back(pub.a_tuple[i], pub.conj_a_by_B[i]);

  AagAttackResult result{solve_scsp(params, system_A), solve_scsp(params, system_B), {}, 0};
  result.recovered_key = commutator(params, result.solution_A.element(), result.solution_B.element());
  result.wall_time_us = micros_since(start);
  return result;
}

SubgroupDescriptor derive_r(const GroupParams& params, const std::vector<GroupElement>& omega_generators) {
  if (omega_generators.empty()) throw Error(ErrorCode::MalformedInput, "derive_r needs at least one generator");
  const auto all = [&](auto pred) { return std::all_of(omega_generators.begin(), omega_generators.end(), pred); };
  if (all([](const GroupElement& x) { return x.m_part.is_zero(); })) return SubgroupDescriptor::sub_n();
  if (all([](const GroupElement& x) { return x.n_part.is_zero(); })) return SubgroupDescriptor::sub_m();

  const Rational one(1);
  const auto anchor = std::find_if(omega_generators.begin(), omega_generators.end(),
                                   [&](const GroupElement& x) { return params.chi(x.m_part) != one; });
  if (anchor == omega_generators.end()) {
    throw Error(ErrorCode::NotAComplement, "every generator acts trivially but some have nonzero n-part");
  }
  const Rational r = anchor->n_part / (one - params.chi(anchor->m_part));
  SubgroupDescriptor omega = SubgroupDescriptor::conj_m(r);
  for (const auto& x : omega_generators) {
    if (!in_subgroup(params, omega, x)) {
      throw Error(ErrorCode::NotAComplement, "generator does not lie in M^r for r = " + r.to_string());
    }
  }
  return omega;
}

KoLeeAttackResult kolee_attack(const GroupParams& params, const GroupElement& g, const GroupElement& g_a,
                               const SubgroupDescriptor& descriptor) {
  const ConjRow row = csp_row(params, g, g_a);
  const Rational& c = row.coeff_t;
  const Rational& c_prime = row.rhs;
  const Rational s = Rational(1) - row.coeff_d;

  KoLeeAttackResult out;
  switch (descriptor.kind) {
    case SubgroupKind::SubM: {
      if (c.is_zero()) throw Error(ErrorCode::DegeneratePublic, "n-part of g is zero");
      const Rational t = c_prime / c;
      out.recovered_secret = {recover_alpha(params, t), Rational(0)};
      out.note = "a in M: t = c'/c = " + t.to_string();
      break;
    }
    case SubgroupKind::SubN: {
      if (row.coeff_d.is_zero()) throw Error(ErrorCode::DegeneratePublic, "g acts trivially (1 - s = 0)");
      Rational d = (c_prime - c) / row.coeff_d;
      if (!params.in_n(d)) throw Error(ErrorCode::MembershipViolation, "d = " + d.to_string() + " is not in N");
      out.note = "a in N: d = (c' - c)/(1 - s) = " + d.to_string();
      out.recovered_secret = {MPart::zero(params.n()), std::move(d)};
      break;
    }
    case SubgroupKind::ConjM: {
      const Rational& r = descriptor.r;
      const Rational divisor = c - r + r * s;
      if (divisor.is_zero()) throw Error(ErrorCode::DegeneratePublic, "c - r + r s = 0");
      const Rational t = (c_prime - r + s * r) / divisor;
      MPart alpha = recover_alpha(params, t);
      Rational d = r * (Rational(1) - t);
      if (!params.in_n(d)) throw Error(ErrorCode::MembershipViolation, "d = " + d.to_string() + " is not in N");
      out.note = "a in M^r, r = " + r.to_string() + ": t = " + t.to_string();
      out.recovered_secret = {std::move(alpha), std::move(d)};
      break;
    }
  }
  if (conj(params, g, out.recovered_secret) != g_a) {
    throw Error(ErrorCode::Inconsistent, "recovered secret does not reproduce g^a");
  }
  return out;
}

GroupElement kolee_recover_key(const GroupParams& params, const GroupElement& g_b, const GroupElement& a_prime) {
  return conj(params, g_b, a_prime);
}

KoLeeFullAttack kolee_attack_public(const KoLeePublic& pub) {
  const auto start = Clock::now();
  KoLeeFullAttack out;
  out.attack = kolee_attack(pub.params, pub.g, pub.g_a, pub.descriptor);
  out.recovered_key = kolee_recover_key(pub.params, pub.g_b, out.attack.recovered_secret);
  out.wall_time_us = micros_since(start);
  return out;
}

std::vector<GroupElement> brute_force_conjugator(const GroupParams& params, const std::vector<ConjugacyPair>& pairs,
                                                 const BruteForceBounds& bounds) {
  const std::size_t n = params.n();
  const auto side_alpha = static_cast<std::uint64_t>(2 * bounds.exp_bound + 1);
  const auto side_gamma = static_cast<std::uint64_t>(bounds.denom_bound + 1);
  const auto side_w = static_cast<std::uint64_t>(2 * bounds.num_bound + 1);
  std::uint64_t total = side_w;
  for (std::size_t i = 0; i < n; ++i) {
    total *= side_alpha * side_gamma;
    if (total > kMaxBruteForceGrid) {
      throw Error(ErrorCode::SearchSpaceTooLarge, "grid exceeds " + std::to_string(kMaxBruteForceGrid) + " points");
    }
  }

  auto box = [n](long lo, long hi) {
    std::vector<MPart> out;
    MPart v = MPart::zero(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        out.push_back(v);
        return;
      }
      for (long k = lo; k <= hi; ++k) {
        v.alpha[i] = k;
        rec(i + 1);
      }
    };
    rec(0);
    return out;
  };

  std::set<Rational> n_values;
  for (const auto& gamma : box(0, bounds.denom_bound)) {
    const Rational scale = params.chi(gamma);
    for (long w = -bounds.num_bound; w <= bounds.num_bound; ++w) n_values.insert(Rational(w) / scale);
  }

  struct PairData {
    Rational one_minus_s;
    Rational c;
    Rational c_prime;
    bool conjugate_m;
  };
  std::vector<PairData> data;
  for (const auto& [g, h] : pairs) {
    data.push_back({Rational(1) - params.chi(g.m_part), g.n_part, h.n_part, g.m_part == h.m_part});
  }
  const bool feasible = std::all_of(data.begin(), data.end(), [](const PairData& p) { return p.conjugate_m; });

  std::vector<GroupElement> hits;
  if (!feasible) return hits;
  for (const auto& alpha : box(-bounds.exp_bound, bounds.exp_bound)) {
    const Rational t = params.chi(alpha);
    for (const auto& d : n_values) {
      const bool ok = std::all_of(data.begin(), data.end(), [&](const PairData& p) {
        return d * p.one_minus_s + p.c * t == p.c_prime;
      });
      if (ok) hits.push_back({alpha, d});
    }
  }
  std::sort(hits.begin(), hits.end(), element_less);
  return hits;
}

}  // namespace metabel
