#ifndef METABEL_RANDOM_HPP
#define METABEL_RANDOM_HPP

#include <cstdint>
#include <random>

#include "metabel/exact.hpp"

namespace metabel {

/// All sampling in the library draws from this engine. The helpers below
/// avoid std::uniform_int_distribution so a seed gives the same stream on
/// every standard library.
using Rng = std::mt19937_64;

/// Uniform in [0, n). n must be nonzero.
std::uint64_t uniform_below(Rng& rng, std::uint64_t n);

/// Uniform in [lo, hi].
std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi);

/// Uniform in [-bound, bound]; bound >= 0.
Integer uniform_integer(Rng& rng, const Integer& bound);

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Per-trial seed: mix64(master ^ mix64(index + golden-ratio constant)).
/// Distinct indices map to distinct seeds for a fixed master.
std::uint64_t derive_trial_seed(std::uint64_t master_seed, std::uint64_t trial_index);

}  // namespace metabel

#endif  // METABEL_RANDOM_HPP
