#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <thread>

#include "metabel/error.hpp"
#include "metabel/words.hpp"

namespace metabel::cli {

namespace {

using Clock = std::chrono::steady_clock;

Json error_json(const Error& e) {
  return Json{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
}

Json success_json(const std::optional<bool>& success) { return success ? Json(*success) : Json(nullptr); }

AttackOutcome attack_aag(const LoadedAag& loaded) {
  AttackOutcome out;
  out.report = Json{{"protocol", "aag"}};
  try {
    const AagAttackResult result = aag_attack(loaded.pub);
    out.report["statuses"] = Json{{"A", std::string(to_string(result.solution_A.status))},
                                  {"B", std::string(to_string(result.solution_B.status))}};
    out.report["solution_A"] = to_json(result.solution_A);
    out.report["solution_B"] = to_json(result.solution_B);
    out.report["recovered_key"] = to_json(result.recovered_key);
    out.report["wall_time_us"] = result.wall_time_us;
    std::optional<bool> success;
    if (loaded.secret) success = result.recovered_key == loaded.secret->true_key;
    out.report["success"] = success_json(success);
    out.exit_code = (success && !*success) ? kExitFailure : kExitOk;
  } catch (const Error& e) {
    out.report["error"] = error_json(e);
    out.report["success"] = loaded.secret ? Json(false) : Json(nullptr);
    out.exit_code = exit_code_for(e.code());
  }
  return out;
}

AttackOutcome attack_kolee(const LoadedKoLee& loaded) {
  AttackOutcome out;
  out.report = Json{{"protocol", "kolee"}, {"case", std::string(to_string(loaded.pub.descriptor.kind))}};
  try {
    const KoLeeFullAttack result = kolee_attack_public(loaded.pub);
    out.report["recovered_secret"] = to_json(result.attack.recovered_secret);
    out.report["note"] = result.attack.note;
    out.report["recovered_key"] = to_json(result.recovered_key);
    out.report["wall_time_us"] = result.wall_time_us;
    std::optional<bool> success;
    if (loaded.secret) success = result.recovered_key == loaded.secret->true_key;
    out.report["success"] = success_json(success);
    out.exit_code = (success && !*success) ? kExitFailure : kExitOk;
  } catch (const Error& e) {
    out.report["error"] = error_json(e);
    out.report["success"] = loaded.secret ? Json(false) : Json(nullptr);
    out.exit_code = exit_code_for(e.code());
  }
  return out;
}

TrialRecord run_trial(const RunConfig& config, const GroupParams& params, std::size_t index) {
  TrialRecord rec;
  rec.index = index;
  rec.seed = derive_trial_seed(config.master_seed, index);
  Rng rng(rec.seed);
  try {
    if (config.protocol == Protocol::Aag) {
      const AagInstance inst = aag_generate(params, config.shape, rng);
      const AagAttackResult result = aag_attack(inst.pub);
      rec.unique = result.solution_A.status == SolveStatus::Unique && result.solution_B.status == SolveStatus::Unique;
      rec.key_match = result.recovered_key == inst.secret.true_key;
      rec.detail = std::string(to_string(result.solution_A.status)) + "/" +
                   std::string(to_string(result.solution_B.status));
      rec.wall_time_us = result.wall_time_us;
    } else {
      const KoLeeInstance inst = kolee_generate(params, config.kolee_case, KoLeeBounds{}, rng);
      const KoLeeFullAttack result = kolee_attack_public(inst.pub);
      rec.unique = true;
      rec.key_match = result.recovered_key == inst.secret.true_key;
      rec.detail = std::string(to_string(config.kolee_case));
      rec.wall_time_us = result.wall_time_us;
    }
  } catch (const Error& e) {
    rec.failed = true;
    rec.detail = std::string(to_string(e.code()));
  }
  return rec;
}

}  // namespace

std::string_view to_string(Protocol protocol) { return protocol == Protocol::Aag ? "aag" : "kolee"; }

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotConjugate:
    case ErrorCode::Inconsistent:
    case ErrorCode::NoExponentVector:
    case ErrorCode::DegeneratePublic:
    case ErrorCode::MembershipViolation:
    case ErrorCode::NotAComplement:
      return kExitAttack;
    default:
      return kExitUsage;
  }
}

int cmd_eval(const std::vector<std::uint64_t>& moduli, const std::string& word_text, bool as_json, std::ostream& out,
             std::ostream& err) {
  try {
    const GroupParams params(moduli);
    const GroupElement g = evaluate(params, parse_word(word_text, params));
    const std::string normal = serialize(params, g);
    if (as_json) {
      out << Json{{"element", metabel::to_json(g)}, {"normal_form", normal}}.dump(2) << '\n';
    } else {
      std::string alpha;
      for (const auto& a : g.m_part.alpha) alpha += (alpha.empty() ? "" : ",") + a.get_str();
      out << "alpha       [" << alpha << "]\n";
      out << "d           " << g.n_part << '\n';
      out << "normal form " << (normal.empty() ? "(identity)" : normal) << '\n';
    }
    return kExitOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

Json generate_instance(const RunConfig& config) {
  const GroupParams params(config.moduli);
  Rng rng(config.master_seed);
  if (config.protocol == Protocol::Aag) return metabel::to_json(aag_generate(params, config.shape, rng));
  return metabel::to_json(kolee_generate(params, config.kolee_case, KoLeeBounds{}, rng));
}

AttackOutcome attack_instance(const Json& instance) {
  const LoadedInstance loaded = instance_from_json(instance);
  if (const auto* aag = std::get_if<LoadedAag>(&loaded)) return attack_aag(*aag);
  return attack_kolee(std::get<LoadedKoLee>(loaded));
}

BatchSummary run_batch(const RunConfig& config) {
  if (config.trials == 0) throw Error(ErrorCode::MalformedInput, "trials must be at least 1");
  const GroupParams params(config.moduli);
  BatchSummary summary;
  summary.trials.resize(config.trials);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < config.trials; i = next++) summary.trials[i] = run_trial(config, params, i);
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(config.jobs, static_cast<unsigned>(config.trials)));
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  summary.trials_total = config.trials;
  std::int64_t total_time = 0;
  for (const auto& rec : summary.trials) {
    if (rec.failed) {
      ++summary.failed_count;
      continue;
    }
    if (rec.unique) {
      ++summary.unique_count;
    } else {
      ++summary.ambiguous_count;
    }
    if (rec.key_match) {
      ++summary.key_match_count;
      ++(rec.unique ? summary.key_match_unique_count : summary.key_match_ambiguous_count);
    }
    total_time += rec.wall_time_us;
    summary.max_time_us = std::max(summary.max_time_us, rec.wall_time_us);
  }
  const std::size_t timed = summary.trials_total - summary.failed_count;
  summary.mean_time_us = timed == 0 ? 0.0 : static_cast<double>(total_time) / static_cast<double>(timed);
  return summary;
}

Json to_json(const BatchSummary& summary, const RunConfig& config) {
  Json moduli = Json::array();
  for (const auto m : config.moduli) moduli.push_back(std::to_string(m));
  Json cfg{{"protocol", std::string(to_string(config.protocol))}, {"moduli", moduli}};
  if (config.protocol == Protocol::Aag) {
    cfg["n1"] = config.shape.n1;
    cfg["n2"] = config.shape.n2;
    cfg["l"] = config.shape.l;
    cfg["m"] = config.shape.m;
    cfg["word_len"] = config.shape.word_len;
  } else {
    cfg["case"] = std::string(to_string(config.kolee_case));
  }
  cfg["trials"] = config.trials;
  cfg["seed"] = std::to_string(config.master_seed);

  Json trials = Json::array();
  for (const auto& rec : summary.trials) {
    trials.push_back(Json{{"index", rec.index},
                          {"seed", std::to_string(rec.seed)},
                          {"status", rec.failed ? "failed" : (rec.unique ? "unique" : "ambiguous")},
                          {"detail", rec.detail},
                          {"key_match", rec.key_match},
                          {"wall_time_us", rec.wall_time_us}});
  }
  return Json{{"config", cfg},
              {"trials_total", summary.trials_total},
              {"unique_count", summary.unique_count},
              {"ambiguous_count", summary.ambiguous_count},
              {"failed_count", summary.failed_count},
              {"key_match_count", summary.key_match_count},
              {"key_match_unique_count", summary.key_match_unique_count},
              {"key_match_ambiguous_count", summary.key_match_ambiguous_count},
              {"mean_time_us", summary.mean_time_us},
              {"max_time_us", summary.max_time_us},
              {"trials", trials}};
}

void print_summary_table(const BatchSummary& summary, const RunConfig& config, std::ostream& out) {
  auto row = [&](const std::string& label, const std::string& value) {
    out << "  " << std::left << std::setw(26) << label << value << '\n';
  };
  out << "run " << to_string(config.protocol) << " (seed " << config.master_seed << ")\n";
  row("trials", std::to_string(summary.trials_total));
  row("unique", std::to_string(summary.unique_count));
  row("ambiguous", std::to_string(summary.ambiguous_count));
  row("failed", std::to_string(summary.failed_count));
  row("key match (all)", std::to_string(summary.key_match_count));
  row("key match (unique)", std::to_string(summary.key_match_unique_count) + " / " +
                                std::to_string(summary.unique_count));
  row("key match (ambiguous)", std::to_string(summary.key_match_ambiguous_count) + " / " +
                                   std::to_string(summary.ambiguous_count));
  std::ostringstream mean;
  mean << std::fixed << std::setprecision(1) << summary.mean_time_us;
  row("mean attack time (us)", mean.str());
  row("max attack time (us)", std::to_string(summary.max_time_us));
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

BenchResult run_bench(const BenchConfig& config) {
  if (config.trials_per_size == 0) throw Error(ErrorCode::MalformedInput, "trials per size must be at least 1");
  if (config.bit_sizes.empty()) throw Error(ErrorCode::MalformedInput, "at least one bit size is required");
  for (std::size_t i = 0; i < config.bit_sizes.size(); ++i) {
    if (config.bit_sizes[i] == 0 || (i > 0 && config.bit_sizes[i - 1] >= config.bit_sizes[i])) {
      throw Error(ErrorCode::MalformedInput, "bit sizes must be positive and strictly ascending");
    }
  }
  const GroupParams params(config.moduli);
  BenchResult result;
  std::vector<double> xs;
  std::vector<double> aag_means;
  std::vector<double> kolee_means;

  std::uint64_t trial = 0;
  for (const unsigned bits : config.bit_sizes) {
    // Numerators carry `bits` bits; exponents grow linearly so the
    // denominators chi(gamma) also scale with the bit size.
    Integer num_bound;
    mpz_ui_pow_ui(num_bound.get_mpz_t(), 2, bits);
    num_bound -= 1;
    const long exp_bound = std::max(1L, static_cast<long>(bits / 8));

    double aag_total = 0, aag_max = 0, kolee_total = 0, kolee_max = 0;
    for (std::size_t k = 0; k < config.trials_per_size; ++k, ++trial) {
      Rng rng(derive_trial_seed(config.master_seed, trial));
      const AagInstance aag = aag_generate_from_elements(params, AagShape{}, exp_bound, num_bound, rng);
      auto start = Clock::now();
      const AagAttackResult aag_result = aag_attack(aag.pub);
      double us = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
      if (aag_result.recovered_key != aag.secret.true_key &&
          aag_result.solution_A.status == SolveStatus::Unique && aag_result.solution_B.status == SolveStatus::Unique) {
        throw Error(ErrorCode::Inconsistent, "bench AAG attack recovered a wrong key");
      }
      aag_total += us;
      aag_max = std::max(aag_max, us);

      const KoLeeInstance kolee = kolee_generate(params, SubgroupKind::ConjM, KoLeeBounds{exp_bound, num_bound}, rng);
      start = Clock::now();
      const KoLeeFullAttack kolee_result = kolee_attack_public(kolee.pub);
      us = std::chrono::duration<double, std::micro>(Clock::now() - start).count();
      if (kolee_result.recovered_key != kolee.secret.true_key) {
        throw Error(ErrorCode::Inconsistent, "bench Ko-Lee attack recovered a wrong key");
      }
      kolee_total += us;
      kolee_max = std::max(kolee_max, us);
    }
    const auto trials = static_cast<double>(config.trials_per_size);
    result.rows.push_back({bits, "aag", aag_total / trials, aag_max});
    result.rows.push_back({bits, "kolee", kolee_total / trials, kolee_max});
    xs.push_back(bits);
    aag_means.push_back(aag_total / trials);
    kolee_means.push_back(kolee_total / trials);
  }
  if (xs.size() >= 2) {
    result.slope_aag = loglog_slope(xs, aag_means);
    result.slope_kolee = loglog_slope(xs, kolee_means);
  }
  return result;
}

void write_bench_csv(const BenchResult& result, std::ostream& out) {
  char buf[128];
  out << "bit_size,protocol,mean_time_us,max_time_us\n";
  for (const auto& row : result.rows) {
    std::snprintf(buf, sizeof buf, "%u,%s,%.3f,%.3f\n", row.bit_size, row.protocol.c_str(), row.mean_time_us,
                  row.max_time_us);
    out << buf;
  }
  if (result.slope_aag && result.slope_kolee) {
    std::snprintf(buf, sizeof buf, "# loglog_slope,aag=%.4f,kolee=%.4f\n", *result.slope_aag, *result.slope_kolee);
    out << buf;
  }
}

}  // namespace metabel::cli
