#ifndef METABEL_CLI_COMMANDS_HPP
#define METABEL_CLI_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "metabel/error.hpp"
#include "metabel/json_io.hpp"

namespace metabel::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // key mismatch, I/O failure
inline constexpr int kExitUsage = 2;    // bad flags or malformed input
inline constexpr int kExitAttack = 3;   // attack rejected the public data

enum class Protocol { Aag, KoLee };

struct RunConfig {
  std::vector<std::uint64_t> moduli{2, 3};
  Protocol protocol = Protocol::Aag;
  SubgroupKind kolee_case = SubgroupKind::SubM;
  AagShape shape;
  std::size_t trials = 1000;
  std::uint64_t master_seed = 1;
  unsigned jobs = 1;
};

/// Attack outcome for one instance file, already scored if secrets were present.
struct AttackOutcome {
  Json report;
  int exit_code = kExitOk;
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool unique = false;
  bool failed = false;
  bool key_match = false;
  std::string detail;  // statuses, or the error code for failed trials
  std::int64_t wall_time_us = 0;
};

struct BatchSummary {
  std::size_t trials_total = 0;
  std::size_t unique_count = 0;
  std::size_t ambiguous_count = 0;
  std::size_t failed_count = 0;
  std::size_t key_match_count = 0;
  std::size_t key_match_unique_count = 0;
  std::size_t key_match_ambiguous_count = 0;
  double mean_time_us = 0;
  std::int64_t max_time_us = 0;
  std::vector<TrialRecord> trials;

  /// Every Unique-status trial matched the true key.
  bool unique_trials_all_match() const { return key_match_unique_count == unique_count; }
};

struct BenchConfig {
  std::vector<std::uint64_t> moduli{2, 3};
  std::vector<unsigned> bit_sizes{8, 16, 32, 64, 128, 256};
  std::size_t trials_per_size = 50;
  std::uint64_t master_seed = 1;
};

struct BenchRow {
  unsigned bit_size = 0;
  std::string protocol;
  double mean_time_us = 0;
  double max_time_us = 0;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::optional<double> slope_aag;    // absent with fewer than two sizes
  std::optional<double> slope_kolee;
};

std::string_view to_string(Protocol protocol);

/// eval: prints the element and its normal form. Returns the exit code.
int cmd_eval(const std::vector<std::uint64_t>& moduli, const std::string& word_text, bool as_json, std::ostream& out,
             std::ostream& err);

/// gen: one instance from the first trial seed of config (seed used directly).
Json generate_instance(const RunConfig& config);

/// attack: runs the matching attack on the public section and scores it
/// against the secret section when present.
AttackOutcome attack_instance(const Json& instance);

/// run: per-trial seeds derive_trial_seed(master, i); trials are
/// independent and spread over config.jobs threads.
BatchSummary run_batch(const RunConfig& config);
Json to_json(const BatchSummary& summary, const RunConfig& config);
void print_summary_table(const BatchSummary& summary, const RunConfig& config, std::ostream& out);

/// bench: attack wall time as the entry bit length grows.
BenchResult run_bench(const BenchConfig& config);
void write_bench_csv(const BenchResult& result, std::ostream& out);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

/// Maps a library error to the CLI exit code.
int exit_code_for(ErrorCode code);

}  // namespace metabel::cli

#endif  // METABEL_CLI_COMMANDS_HPP
