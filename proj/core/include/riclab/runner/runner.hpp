#pragma once

// Experiment harness: wires simulator, RIC, xApps, detection and mitigation
// per the scenario config, runs the horizon, and aggregates results. The
// CLI and the test suites both drive experiments through this layer.

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "riclab/cfg/scenario.hpp"
#include "riclab/detect/conflict.hpp"
#include "riclab/mitigate/bandit.hpp"
#include "riclab/mitigate/reward.hpp"
#include "riclab/ric/ledger.hpp"
#include "riclab/sim/kpi.hpp"
#include "riclab/sim/types.hpp"

namespace riclab::runner {

struct RunTotals {
  long windows = 0;
  long ho_count = 0;
  long pingpong_count = 0;
  long rlf_count = 0;
  long call_blocks = 0;
  double load_stddev_timeavg = 0.0;  // mean over windows of cross-cell stddev
  double late_load_stddev = 0.0;     // same, over the last 25% of windows
  std::map<std::string, long> conflicts_by_type;
  std::map<std::string, long> events_by_kind;
};

struct RunResult {
  cfg::ScenarioConfig config;
  std::vector<sim::SimEvent> events;
  std::vector<sim::KpiSample> kpi_samples;
  ric::ActionLedger ledger;
  std::vector<detect::ConflictReport> reports;
  RunTotals totals;
  mitigate::EpisodeAggregate aggregate;
  double reward = 0.0;
  bool reward_computed = false;
};

RunResult run_scenario(const cfg::ScenarioConfig& config);

// Strips xApps/CM/detection off a scenario; the seed-matched reference for
// reward computation.
cfg::ScenarioConfig baseline_config(cfg::ScenarioConfig config);

// Runs the scenario and, when any xApp is enabled, the seed-matched no-xApp
// baseline, filling `reward`.
RunResult run_scenario_with_reward(const cfg::ScenarioConfig& config);

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MissingArtifact : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// events.csv, kpis.csv, xnib.jsonl, conflicts.jsonl, summary.json.
void write_artifacts(const RunResult& result, const std::filesystem::path& out_dir);

nlohmann::ordered_json summary_json(const RunResult& result);

struct CompareRow {
  std::string key;
  double a = 0.0;
  double b = 0.0;
  double ratio = 1.0;  // b / a, 0/0 reads as 1
};

// Reads summary.json from both run directories. Throws MissingArtifact.
std::vector<CompareRow> compare_runs(const std::filesystem::path& run_a,
                                     const std::filesystem::path& run_b);

struct LearnResult {
  mitigate::BanditOutcome outcome;
  std::vector<std::uint64_t> seed_schedule;
};

class TooManyXapps : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Epsilon-greedy priority learning over the scenario's enabled xApps.
// Requires mitigation mode "learn". Throws TooManyXapps above 5 xApps.
LearnResult run_learning(const cfg::ScenarioConfig& config);

// policy.json + rewards.csv.
void write_learning_artifacts(const LearnResult& result,
                              const std::filesystem::path& out_dir);

}  // namespace riclab::runner
