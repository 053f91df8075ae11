// metabel: instance generation, protocol runs, and attacks on generalized
// metabelian Baumslag-Solitar platform groups.
//
//   metabel eval --moduli 2 --word "q1 b q1^-1"
//   metabel gen aag --moduli 2,3 --n1 5 --n2 5 --l 4 --m 4 --len 8 --seed 7 --out inst.json
//   metabel attack inst.json --out report.json
//   metabel run kolee --case conj --trials 1000 --seed 1
//   metabel bench --sizes 8,16,32,64,128,256 --trials 50 --out bench.csv
//
// With --out, machine output goes to the file and a human summary to stdout;
// without it, the machine output itself is written to stdout.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/commands.hpp"

namespace {

using namespace metabel;
using namespace metabel::cli;

struct Flags {
  std::vector<std::uint64_t> moduli{2, 3};
  std::uint64_t seed = 1;
  std::string out;
  std::string kolee_case = "m";
  AagShape shape;
  std::size_t trials = 1000;
  unsigned jobs = 1;
};

void add_group_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--moduli", f.moduli, "Comma-separated moduli m_1..m_n")->delimiter(',');
  cmd->add_option("--seed", f.seed, "64-bit master seed");
  cmd->add_option("--out", f.out, "Output file (default: stdout)");
}

void add_aag_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--n1", f.shape.n1, "Length of Alice's public tuple")->check(CLI::PositiveNumber);
  cmd->add_option("--n2", f.shape.n2, "Length of Bob's public tuple")->check(CLI::PositiveNumber);
  cmd->add_option("--l", f.shape.l, "Factors in Alice's private element")->check(CLI::PositiveNumber);
  cmd->add_option("--m", f.shape.m, "Factors in Bob's private element")->check(CLI::PositiveNumber);
  cmd->add_option("--len", f.shape.word_len, "Letters per public tuple word")->check(CLI::PositiveNumber);
}

void add_kolee_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--case", f.kolee_case, "Commuting subgroup: m, n or conj")
      ->check(CLI::IsMember({"m", "n", "conj"}));
}

RunConfig to_config(const Flags& f, Protocol protocol) {
  RunConfig c;
  c.moduli = f.moduli;
  c.protocol = protocol;
  c.kolee_case = parse_subgroup_kind(f.kolee_case);
  c.shape = f.shape;
  c.trials = f.trials;
  c.master_seed = f.seed;
  c.jobs = f.jobs;
  return c;
}

// Writes machine output to --out or stdout. Returns false on I/O failure.
bool emit(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream file(path, std::ios::binary);
  file << text;
  return static_cast<bool>(file);
}

int do_gen(const Flags& f, Protocol protocol) {
  const RunConfig config = to_config(f, protocol);
  const Json instance = generate_instance(config);
  if (!emit(f.out, instance.dump(2) + "\n")) {
    std::cerr << "error: cannot write " << f.out << '\n';
    return kExitFailure;
  }
  if (!f.out.empty()) std::cout << "wrote " << to_string(protocol) << " instance to " << f.out << '\n';
  return kExitOk;
}

int do_attack(const std::string& path, const std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot read " << path << '\n';
    return kExitFailure;
  }
  Json instance;
  try {
    instance = Json::parse(in);
  } catch (const Json::parse_error& e) {
    std::cerr << "error: " << path << " is not valid JSON: " << e.what() << '\n';
    return kExitUsage;
  }
  const AttackOutcome outcome = attack_instance(instance);
  if (!emit(out, outcome.report.dump(2) + "\n")) {
    std::cerr << "error: cannot write " << out << '\n';
    return kExitFailure;
  }
  if (!out.empty()) {
    const auto& r = outcome.report;
    std::cout << "protocol  " << r["protocol"].get<std::string>() << '\n';
    if (r.contains("statuses")) {
      std::cout << "status A  " << r["statuses"]["A"].get<std::string>() << '\n';
      std::cout << "status B  " << r["statuses"]["B"].get<std::string>() << '\n';
    }
    if (r.contains("note")) std::cout << "note      " << r["note"].get<std::string>() << '\n';
    if (r.contains("error")) std::cout << "error     " << r["error"]["message"].get<std::string>() << '\n';
    std::cout << "success   " << r["success"].dump() << '\n';
  }
  if (outcome.exit_code == kExitAttack && outcome.report.contains("error")) {
    std::cerr << "attack failed: " << outcome.report["error"]["message"].get<std::string>() << '\n';
  }
  return outcome.exit_code;
}

int do_run(const Flags& f, Protocol protocol) {
  const RunConfig config = to_config(f, protocol);
  const BatchSummary summary = run_batch(config);
  if (!f.out.empty()) {
    if (!emit(f.out, to_json(summary, config).dump(2) + "\n")) {
      std::cerr << "error: cannot write " << f.out << '\n';
      return kExitFailure;
    }
    print_summary_table(summary, config, std::cout);
  } else {
    std::cout << to_json(summary, config).dump(2) << '\n';
  }
  if (!summary.unique_trials_all_match()) {
    std::cerr << "error: " << summary.unique_count - summary.key_match_unique_count
              << " unique-status trials recovered a wrong key\n";
    return kExitFailure;
  }
  return kExitOk;
}

int do_bench(const BenchConfig& config, const std::string& out) {
  const BenchResult result = run_bench(config);
  std::ostringstream csv;
  write_bench_csv(result, csv);
  if (!emit(out, csv.str())) {
    std::cerr << "error: cannot write " << out << '\n';
    return kExitFailure;
  }
  if (!out.empty()) {
    std::cout << "wrote " << result.rows.size() << " rows to " << out << '\n';
    if (result.slope_aag) {
      std::cout << "log-log slope  aag " << *result.slope_aag << "  kolee " << *result.slope_kolee << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized metabelian Baumslag-Solitar key exchange workbench"};
  app.require_subcommand(1);

  Flags flags;
  int exit_code = kExitOk;

  auto* eval = app.add_subcommand("eval", "Evaluate a word and print its normal form");
  std::string word;
  bool as_json = false;
  eval->add_option("--moduli", flags.moduli, "Comma-separated moduli")->delimiter(',');
  eval->add_option("--word", word, "Word such as \"q1^2 b^-3 q2\"")->required();
  eval->add_flag("--json", as_json, "Print JSON instead of text");
  eval->callback([&] { exit_code = cmd_eval(flags.moduli, word, as_json, std::cout, std::cerr); });

  auto* gen = app.add_subcommand("gen", "Generate a protocol instance (public + secret sections)");
  gen->require_subcommand(1);
  auto* gen_aag = gen->add_subcommand("aag", "Commutator key exchange instance");
  add_group_flags(gen_aag, flags);
  add_aag_flags(gen_aag, flags);
  gen_aag->callback([&] { exit_code = do_gen(flags, Protocol::Aag); });
  auto* gen_kolee = gen->add_subcommand("kolee", "Non-commutative Diffie-Hellman instance");
  add_group_flags(gen_kolee, flags);
  add_kolee_flags(gen_kolee, flags);
  gen_kolee->callback([&] { exit_code = do_gen(flags, Protocol::KoLee); });

  auto* attack = app.add_subcommand("attack", "Attack an instance file using its public section");
  std::string instance_path;
  attack->add_option("instance", instance_path, "Instance JSON file")->required();
  attack->add_option("--out", flags.out, "Report file (default: stdout)");
  attack->callback([&] { exit_code = do_attack(instance_path, flags.out); });

  auto* run = app.add_subcommand("run", "Generate and attack many instances");
  run->require_subcommand(1);
  auto* run_aag = run->add_subcommand("aag", "Batch of commutator key exchange trials");
  auto* run_kolee = run->add_subcommand("kolee", "Batch of Diffie-Hellman trials");
  for (auto* cmd : {run_aag, run_kolee}) {
    add_group_flags(cmd, flags);
    cmd->add_option("--trials", flags.trials, "Number of trials")->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", flags.jobs, "Worker threads")->check(CLI::PositiveNumber);
  }
  add_aag_flags(run_aag, flags);
  add_kolee_flags(run_kolee, flags);
  run_aag->callback([&] { exit_code = do_run(flags, Protocol::Aag); });
  run_kolee->callback([&] { exit_code = do_run(flags, Protocol::KoLee); });

  auto* bench = app.add_subcommand("bench", "Attack time against entry bit length (CSV)");
  BenchConfig bench_config;
  bench->add_option("--moduli", bench_config.moduli, "Comma-separated moduli")->delimiter(',');
  bench->add_option("--sizes", bench_config.bit_sizes, "Ascending bit lengths")->delimiter(',');
  bench->add_option("--trials", bench_config.trials_per_size, "Trials per bit size");
  bench->add_option("--seed", bench_config.master_seed, "64-bit master seed");
  bench->add_option("--out", flags.out, "CSV file (default: stdout)");
  bench->callback([&] { exit_code = do_bench(bench_config, flags.out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return exit_code;
}
