#pragma once

// Scenario configuration: one structured file holding every constant the
// laboratory uses, with explicit defaults. Unknown keys are hard errors --
// a misconfiguration lab should not silently ignore typos.

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "riclab/detect/conflict.hpp"
#include "riclab/mitigate/reward.hpp"
#include "riclab/sim/engine.hpp"
#include "riclab/xapps/policies.hpp"

namespace riclab::cfg {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TimeConfig {
  int tick_ms = 100;
  long horizon_ticks = 10000;
  int kpi_window_ticks = 10;
};

struct HandoverConfig {
  double default_hysteresis_db = 3.0;
  int default_ttt_ms = 100;
  int t_pp_ms = 2000;
  int t_early_ms = 500;
};

struct UeConfig {
  int count = 150;
  sim::MobilityConfig mobility;
};

struct InjectorSpec {
  std::string xapp_id;
  std::string target;  // "3" or "3->5"
  std::string param_id = "CIO";
  double value = 0.0;
  int period_windows = 1;
  int phase = 0;
};

struct XAppsConfig {
  bool mlb_enabled = false;
  xapps::MlbConfig mlb;
  bool mro_enabled = false;
  xapps::MroConfig mro;
  bool stealth_enabled = false;
  sim::CellId stealth_victim_cell = 0;
  double stealth_power_step_db = 6.0;
  int stealth_epoch_windows = 50;
  std::vector<InjectorSpec> injectors;
};

struct DetectionConfig {
  bool enabled = true;
  detect::AdConfig ad;
  detect::ImplicitConfig implicit;
};

enum class MitigationMode { Off, Static, Learn };

struct MitigationCfg {
  bool cm_enabled = false;
  int cooldown_windows = 10;
  double tau_hard = 0.8;
  MitigationMode mode = MitigationMode::Static;
  std::vector<std::string> priorities;  // empty = registration order
};

struct LearnConfig {
  int episodes = 200;
  double epsilon = 0.1;
  int seed_schedule_size = 10;
};

struct ScenarioConfig {
  std::uint64_t seed = 1;
  sim::TopologyConfig topology;
  UeConfig ues;
  sim::RadioConfig radio;
  TimeConfig time;
  HandoverConfig handover;
  XAppsConfig xapps;
  DetectionConfig detection;
  MitigationCfg mitigation;
  mitigate::RewardConfig reward;
  LearnConfig learn;

  sim::EngineConfig engine_config() const;
  std::vector<std::string> enabled_xapp_ids() const;
};

// Parse + validate. Throws ConfigError with a human-readable diagnostic.
ScenarioConfig load_scenario(const std::filesystem::path& path);
ScenarioConfig parse_scenario(const nlohmann::json& json);

// Fully resolved echo (defaults expanded), embeddable in summary.json.
nlohmann::ordered_json to_json(const ScenarioConfig& cfg);

void validate(const ScenarioConfig& cfg);

}  // namespace riclab::cfg
