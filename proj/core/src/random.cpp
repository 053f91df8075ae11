#include "metabel/random.hpp"

#include <cassert>

namespace metabel {

std::uint64_t uniform_below(Rng& rng, std::uint64_t n) {
  assert(n != 0);
  // Rejection on the top partial block keeps the result unbiased.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n + 1) % n;
  std::uint64_t v = rng();
  while (v > limit) v = rng();
  return v % n;
}

std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  assert(lo <= hi);
  const auto span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == UINT64_MAX) return static_cast<std::int64_t>(rng());
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + uniform_below(rng, span + 1));
}

Integer uniform_integer(Rng& rng, const Integer& bound) {
  assert(bound >= 0);
  const Integer range = 2 * bound + 1;
  const std::size_t bits = mpz_sizeinbase(range.get_mpz_t(), 2);
  const std::size_t words = (bits + 63) / 64;
  const unsigned top_bits = static_cast<unsigned>(bits - (words - 1) * 64);
  Integer candidate;
  do {
    candidate = 0;
    for (std::size_t w = 0; w < words; ++w) {
      std::uint64_t chunk = rng();
      if (w == 0 && top_bits < 64) chunk &= (std::uint64_t{1} << top_bits) - 1;
      candidate <<= 64;
      candidate += Integer(static_cast<unsigned long>(chunk));
    }
  } while (candidate >= range);
  return candidate - bound;
}

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index) {
  return mix64(master_seed ^ mix64(trial_index + 0x9e3779b97f4a7c15ULL));
}

}  // namespace metabel
