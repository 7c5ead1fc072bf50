// riclab CLI: scenario-driven experiment runner.
//   run     -- simulate one scenario, write the artifact bundle
//   learn   -- epsilon-greedy priority learning, write policy + reward trace
//   compare -- side-by-side totals of two completed runs
// Exit codes: 0 ok, 2 invalid config, 3 io error, 4 missing artifact.

#include <cstdio>
#include <filesystem>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "riclab/mitigate/bandit.hpp"
#include "riclab/runner/runner.hpp"

namespace {

constexpr int kExitConfigInvalid = 2;
constexpr int kExitIoError = 3;
constexpr int kExitMissingArtifact = 4;

struct RunArgs {
  std::string config_path;
  std::string out_dir = "out";
  std::optional<std::uint64_t> seed_override;
  bool quiet = false;
};

riclab::cfg::ScenarioConfig load_with_override(const RunArgs& args) {
  auto config = riclab::cfg::load_scenario(args.config_path);
  if (args.seed_override) config.seed = *args.seed_override;
  return config;
}

int do_run(const RunArgs& args) {
  const auto config = load_with_override(args);
  const auto result = riclab::runner::run_scenario_with_reward(config);
  riclab::runner::write_artifacts(result, args.out_dir);
  if (!args.quiet) {
    fmt::print("run complete: {} ticks, {} windows, seed {}\n", config.time.horizon_ticks,
               result.totals.windows, config.seed);
    fmt::print("  handovers {}  ping-pongs {}  rlf {}  call-blocks {}\n",
               result.totals.ho_count, result.totals.pingpong_count, result.totals.rlf_count,
               result.totals.call_blocks);
    for (const auto& [type, count] : result.totals.conflicts_by_type) {
      fmt::print("  conflicts[{}] = {}\n", type, count);
    }
    fmt::print("  reward {:.4f}\n", result.reward);
    fmt::print("artifacts in {}\n", args.out_dir);
  }
  return 0;
}

int do_learn(const RunArgs& args) {
  const auto config = load_with_override(args);
  const auto result = riclab::runner::run_learning(config);
  riclab::runner::write_learning_artifacts(result, args.out_dir);
  if (!args.quiet) {
    const auto& outcome = result.outcome;
    fmt::print("learning complete: {} episodes over {} arms\n", outcome.trace.size(),
               outcome.arms.size());
    if (!outcome.arms.empty()) {
      fmt::print("best ordering: {}\n",
                 riclab::mitigate::arm_label(outcome.arms[outcome.best_arm]));
    }
    fmt::print("artifacts in {}\n", args.out_dir);
  }
  return 0;
}

int do_compare(const std::string& dir_a, const std::string& dir_b, bool as_json) {
  const auto rows = riclab::runner::compare_runs(dir_a, dir_b);
  if (as_json) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& row : rows) {
      j[row.key] = {{"a", row.a}, {"b", row.b}, {"ratio", row.ratio}};
    }
    fmt::print("{}\n", j.dump(2));
    return 0;
  }
  fmt::print("{:<22}{:>14}{:>14}{:>10}\n", "kpi", "run A", "run B", "B/A");
  for (const auto& row : rows) {
    fmt::print("{:<22}{:>14.6g}{:>14.6g}{:>10.3f}\n", row.key, row.a, row.b, row.ratio);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"riclab: multi-cell handover simulator with xApp conflict detection"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "run a scenario, write the artifact bundle");
  run->add_option("--config", run_args.config_path, "scenario config (JSON)")->required();
  run->add_option("--out", run_args.out_dir, "output directory");
  run->add_option("--seed", run_args.seed_override, "override the scenario seed");
  run->add_flag("--quiet", run_args.quiet, "suppress progress output");

  RunArgs learn_args;
  auto* learn = app.add_subcommand("learn", "learn a priority ordering (epsilon-greedy)");
  learn->add_option("--config", learn_args.config_path, "scenario config (JSON)")->required();
  learn->add_option("--out", learn_args.out_dir, "output directory");
  learn->add_option("--seed", learn_args.seed_override, "override the scenario seed");
  learn->add_flag("--quiet", learn_args.quiet, "suppress progress output");

  std::string compare_a, compare_b;
  bool compare_json = false;
  auto* compare = app.add_subcommand("compare", "compare two run directories");
  compare->add_option("runA", compare_a, "first run directory")->required();
  compare->add_option("runB", compare_b, "second run directory")->required();
  compare->add_flag("--json", compare_json, "machine-readable output");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return do_run(run_args);
    if (learn->parsed()) return do_learn(learn_args);
    if (compare->parsed()) return do_compare(compare_a, compare_b, compare_json);
  } catch (const riclab::cfg::ConfigError& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return kExitConfigInvalid;
  } catch (const riclab::runner::TooManyXapps& e) {
    fmt::print(stderr, "config error: {}\n", e.what());
    return kExitConfigInvalid;
  } catch (const riclab::runner::MissingArtifact& e) {
    fmt::print(stderr, "{}\n", e.what());
    return kExitMissingArtifact;
  } catch (const riclab::runner::IoError& e) {
    fmt::print(stderr, "io error: {}\n", e.what());
    return kExitIoError;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return 1;
  }
  return 0;
}
