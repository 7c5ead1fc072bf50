#include "riclab/cfg/scenario.hpp"

#include <fstream>
#include <set>

#include <fmt/format.h>

namespace riclab::cfg {

namespace {

using nlohmann::json;

void check_keys(const json& node, const std::set<std::string>& allowed,
                const std::string& path) {
  if (!node.is_object()) {
    throw ConfigError(fmt::format("{}: expected an object", path));
  }
  for (const auto& [key, _] : node.items()) {
    if (allowed.count(key) == 0) {
      throw ConfigError(fmt::format("{}: unknown key '{}'", path, key));
    }
  }
}

template <typename T>
T get_or(const json& node, const std::string& key, T fallback, const std::string& path) {
  if (!node.contains(key)) return fallback;
  try {
    return node.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(fmt::format("{}.{}: wrong type", path, key));
  }
}

sim::MobilityMode mobility_mode_from(const std::string& name, const std::string& path) {
  if (name == "random_waypoint") return sim::MobilityMode::RandomWaypoint;
  if (name == "scripted") return sim::MobilityMode::Scripted;
  throw ConfigError(fmt::format("{}: unknown mobility mode '{}'", path, name));
}

const char* mobility_mode_name(sim::MobilityMode mode) {
  return mode == sim::MobilityMode::RandomWaypoint ? "random_waypoint" : "scripted";
}

const char* mitigation_mode_name(MitigationMode mode) {
  switch (mode) {
    case MitigationMode::Off: return "off";
    case MitigationMode::Static: return "static";
    case MitigationMode::Learn: return "learn";
  }
  return "?";
}

}  // namespace

ScenarioConfig parse_scenario(const json& root) {
  ScenarioConfig cfg;
  check_keys(root,
             {"seed", "topology", "ues", "radio", "time", "handover", "xapps", "detection",
              "mitigation", "reward", "learn"},
             "config");
  cfg.seed = get_or<std::uint64_t>(root, "seed", cfg.seed, "config");

  if (root.contains("topology")) {
    const auto& node = root.at("topology");
    check_keys(node, {"cell_count", "spacing_m", "capacity", "tx_power_dbm"}, "topology");
    cfg.topology.cell_count = get_or(node, "cell_count", cfg.topology.cell_count, "topology");
    cfg.topology.spacing_m = get_or(node, "spacing_m", cfg.topology.spacing_m, "topology");
    cfg.topology.capacity = get_or(node, "capacity", cfg.topology.capacity, "topology");
    cfg.topology.tx_power_dbm =
        get_or(node, "tx_power_dbm", cfg.topology.tx_power_dbm, "topology");
  }

  if (root.contains("ues")) {
    const auto& node = root.at("ues");
    check_keys(node,
               {"count", "mobility", "speed_min_mps", "speed_max_mps", "box_scale",
                "hotspot_ue_count", "hotspot_cell", "hotspot_radius_m"},
               "ues");
    cfg.ues.count = get_or(node, "count", cfg.ues.count, "ues");
    cfg.ues.mobility.mode = mobility_mode_from(
        get_or<std::string>(node, "mobility", "random_waypoint", "ues"), "ues.mobility");
    cfg.ues.mobility.speed_min_mps =
        get_or(node, "speed_min_mps", cfg.ues.mobility.speed_min_mps, "ues");
    cfg.ues.mobility.speed_max_mps =
        get_or(node, "speed_max_mps", cfg.ues.mobility.speed_max_mps, "ues");
    cfg.ues.mobility.box_scale = get_or(node, "box_scale", cfg.ues.mobility.box_scale, "ues");
    cfg.ues.mobility.hotspot_ue_count =
        get_or(node, "hotspot_ue_count", cfg.ues.mobility.hotspot_ue_count, "ues");
    cfg.ues.mobility.hotspot_cell =
        get_or(node, "hotspot_cell", cfg.ues.mobility.hotspot_cell, "ues");
    cfg.ues.mobility.hotspot_radius_m =
        get_or(node, "hotspot_radius_m", cfg.ues.mobility.hotspot_radius_m, "ues");
  }

  if (root.contains("radio")) {
    const auto& node = root.at("radio");
    check_keys(node,
               {"pl0_db", "ref_distance_m", "pl_exponent", "min_distance_m", "shadow_sigma_db",
                "shadow_rho", "rlf_floor_dbm", "t_rlf_ms"},
               "radio");
    cfg.radio.pl0_db = get_or(node, "pl0_db", cfg.radio.pl0_db, "radio");
    cfg.radio.ref_distance_m = get_or(node, "ref_distance_m", cfg.radio.ref_distance_m, "radio");
    cfg.radio.pl_exponent = get_or(node, "pl_exponent", cfg.radio.pl_exponent, "radio");
    cfg.radio.min_distance_m = get_or(node, "min_distance_m", cfg.radio.min_distance_m, "radio");
    cfg.radio.shadow_sigma_db =
        get_or(node, "shadow_sigma_db", cfg.radio.shadow_sigma_db, "radio");
    cfg.radio.shadow_rho = get_or(node, "shadow_rho", cfg.radio.shadow_rho, "radio");
    cfg.radio.rlf_floor_dbm = get_or(node, "rlf_floor_dbm", cfg.radio.rlf_floor_dbm, "radio");
    cfg.radio.t_rlf_ms = get_or(node, "t_rlf_ms", cfg.radio.t_rlf_ms, "radio");
  }

  if (root.contains("time")) {
    const auto& node = root.at("time");
    check_keys(node, {"tick_ms", "horizon_ticks", "kpi_window_ticks"}, "time");
    cfg.time.tick_ms = get_or(node, "tick_ms", cfg.time.tick_ms, "time");
    cfg.time.horizon_ticks = get_or(node, "horizon_ticks", cfg.time.horizon_ticks, "time");
    cfg.time.kpi_window_ticks =
        get_or(node, "kpi_window_ticks", cfg.time.kpi_window_ticks, "time");
  }

  if (root.contains("handover")) {
    const auto& node = root.at("handover");
    check_keys(node, {"default_hysteresis_db", "default_ttt_ms", "t_pp_ms", "t_early_ms"},
               "handover");
    cfg.handover.default_hysteresis_db =
        get_or(node, "default_hysteresis_db", cfg.handover.default_hysteresis_db, "handover");
    cfg.handover.default_ttt_ms =
        get_or(node, "default_ttt_ms", cfg.handover.default_ttt_ms, "handover");
    cfg.handover.t_pp_ms = get_or(node, "t_pp_ms", cfg.handover.t_pp_ms, "handover");
    cfg.handover.t_early_ms = get_or(node, "t_early_ms", cfg.handover.t_early_ms, "handover");
  }

  if (root.contains("xapps")) {
    const auto& node = root.at("xapps");
    check_keys(node, {"mlb", "mro", "stealth", "injectors"}, "xapps");
    if (node.contains("mlb")) {
      const auto& mlb = node.at("mlb");
      check_keys(mlb, {"enabled", "load_imbalance_threshold", "cio_step_db"}, "xapps.mlb");
      cfg.xapps.mlb_enabled = get_or(mlb, "enabled", false, "xapps.mlb");
      cfg.xapps.mlb.load_imbalance_threshold = get_or(
          mlb, "load_imbalance_threshold", cfg.xapps.mlb.load_imbalance_threshold, "xapps.mlb");
      cfg.xapps.mlb.cio_step_db =
          get_or(mlb, "cio_step_db", cfg.xapps.mlb.cio_step_db, "xapps.mlb");
    }
    if (node.contains("mro")) {
      const auto& mro = node.at("mro");
      check_keys(mro,
                 {"enabled", "pingpong_rate_threshold", "rlf_threshold", "h_step_db",
                  "ttt_step"},
                 "xapps.mro");
      cfg.xapps.mro_enabled = get_or(mro, "enabled", false, "xapps.mro");
      cfg.xapps.mro.pingpong_rate_threshold = get_or(
          mro, "pingpong_rate_threshold", cfg.xapps.mro.pingpong_rate_threshold, "xapps.mro");
      cfg.xapps.mro.rlf_threshold =
          get_or(mro, "rlf_threshold", cfg.xapps.mro.rlf_threshold, "xapps.mro");
      cfg.xapps.mro.h_step_db = get_or(mro, "h_step_db", cfg.xapps.mro.h_step_db, "xapps.mro");
      cfg.xapps.mro.ttt_step = get_or(mro, "ttt_step", cfg.xapps.mro.ttt_step, "xapps.mro");
    }
    if (node.contains("stealth")) {
      const auto& st = node.at("stealth");
      check_keys(st, {"enabled", "victim_cell", "power_step_db", "epoch_windows"},
                 "xapps.stealth");
      cfg.xapps.stealth_enabled = get_or(st, "enabled", false, "xapps.stealth");
      cfg.xapps.stealth_victim_cell =
          get_or(st, "victim_cell", cfg.xapps.stealth_victim_cell, "xapps.stealth");
      cfg.xapps.stealth_power_step_db =
          get_or(st, "power_step_db", cfg.xapps.stealth_power_step_db, "xapps.stealth");
      cfg.xapps.stealth_epoch_windows =
          get_or(st, "epoch_windows", cfg.xapps.stealth_epoch_windows, "xapps.stealth");
    }
    if (node.contains("injectors")) {
      const auto& list = node.at("injectors");
      if (!list.is_array()) throw ConfigError("xapps.injectors: expected an array");
      for (const auto& entry : list) {
        check_keys(entry, {"xapp_id", "target", "param_id", "value", "period_windows", "phase"},
                   "xapps.injectors[]");
        InjectorSpec spec;
        spec.xapp_id = get_or<std::string>(entry, "xapp_id", "", "xapps.injectors[]");
        spec.target = get_or<std::string>(entry, "target", "", "xapps.injectors[]");
        spec.param_id = get_or<std::string>(entry, "param_id", "CIO", "xapps.injectors[]");
        spec.value = get_or(entry, "value", 0.0, "xapps.injectors[]");
        spec.period_windows = get_or(entry, "period_windows", 1, "xapps.injectors[]");
        spec.phase = get_or(entry, "phase", 0, "xapps.injectors[]");
        cfg.xapps.injectors.push_back(std::move(spec));
      }
    }
  }

  if (root.contains("detection")) {
    const auto& node = root.at("detection");
    check_keys(node, {"enabled", "baseline_window", "k", "lag_max", "tau"}, "detection");
    cfg.detection.enabled = get_or(node, "enabled", cfg.detection.enabled, "detection");
    cfg.detection.ad.baseline_window =
        get_or(node, "baseline_window", cfg.detection.ad.baseline_window, "detection");
    cfg.detection.ad.k = get_or(node, "k", cfg.detection.ad.k, "detection");
    cfg.detection.implicit.lag_max =
        get_or(node, "lag_max", cfg.detection.implicit.lag_max, "detection");
    cfg.detection.implicit.tau = get_or(node, "tau", cfg.detection.implicit.tau, "detection");
  }

  if (root.contains("mitigation")) {
    const auto& node = root.at("mitigation");
    check_keys(node, {"cm_enabled", "cooldown_windows", "tau_hard", "priorities"}, "mitigation");
    cfg.mitigation.cm_enabled =
        get_or(node, "cm_enabled", cfg.mitigation.cm_enabled, "mitigation");
    cfg.mitigation.cooldown_windows =
        get_or(node, "cooldown_windows", cfg.mitigation.cooldown_windows, "mitigation");
    cfg.mitigation.tau_hard = get_or(node, "tau_hard", cfg.mitigation.tau_hard, "mitigation");
    if (node.contains("priorities")) {
      const auto& prio = node.at("priorities");
      if (prio.is_string()) {
        if (prio.get<std::string>() != "learn") {
          throw ConfigError("mitigation.priorities: must be a list of xapp ids or \"learn\"");
        }
        cfg.mitigation.mode = MitigationMode::Learn;
      } else if (prio.is_array()) {
        cfg.mitigation.mode = MitigationMode::Static;
        for (const auto& id : prio) cfg.mitigation.priorities.push_back(id.get<std::string>());
      } else {
        throw ConfigError("mitigation.priorities: must be a list of xapp ids or \"learn\"");
      }
    }
    if (!cfg.mitigation.cm_enabled && cfg.mitigation.mode != MitigationMode::Learn) {
      cfg.mitigation.mode = MitigationMode::Off;
    }
  }

  if (root.contains("reward")) {
    const auto& node = root.at("reward");
    check_keys(node, {"w_load", "w_rlf", "w_pp"}, "reward");
    cfg.reward.w_load = get_or(node, "w_load", cfg.reward.w_load, "reward");
    cfg.reward.w_rlf = get_or(node, "w_rlf", cfg.reward.w_rlf, "reward");
    cfg.reward.w_pp = get_or(node, "w_pp", cfg.reward.w_pp, "reward");
  }

  if (root.contains("learn")) {
    const auto& node = root.at("learn");
    check_keys(node, {"episodes", "epsilon", "seed_schedule_size"}, "learn");
    cfg.learn.episodes = get_or(node, "episodes", cfg.learn.episodes, "learn");
    cfg.learn.epsilon = get_or(node, "epsilon", cfg.learn.epsilon, "learn");
    cfg.learn.seed_schedule_size =
        get_or(node, "seed_schedule_size", cfg.learn.seed_schedule_size, "learn");
  }

  validate(cfg);
  return cfg;
}

ScenarioConfig load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("cannot open config file '{}'", path.string()));
  nlohmann::json root;
  try {
    in >> root;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(fmt::format("{}: {}", path.string(), e.what()));
  }
  return parse_scenario(root);
}

void validate(const ScenarioConfig& cfg) {
  const auto fail = [](const std::string& message) { throw ConfigError(message); };

  if (cfg.topology.cell_count < 1) fail("topology.cell_count must be >= 1");
  if (cfg.topology.spacing_m <= 0.0) fail("topology.spacing_m must be > 0");
  if (cfg.topology.capacity < 1) fail("topology.capacity must be >= 1");
  if (cfg.ues.count < 0) fail("ues.count must be >= 0");
  if (cfg.ues.mobility.speed_min_mps < 0.0 ||
      cfg.ues.mobility.speed_max_mps < cfg.ues.mobility.speed_min_mps) {
    fail("ues speed range invalid");
  }
  if (cfg.ues.mobility.box_scale <= 0.0 || cfg.ues.mobility.box_scale > 1.0) {
    fail("ues.box_scale must be in (0, 1]");
  }
  if (cfg.ues.mobility.hotspot_ue_count > 0 &&
      (cfg.ues.mobility.hotspot_cell < 0 ||
       cfg.ues.mobility.hotspot_cell >= cfg.topology.cell_count)) {
    fail("ues.hotspot_cell does not exist");
  }
  if (cfg.time.tick_ms < 1) fail("time.tick_ms must be >= 1");
  if (cfg.time.horizon_ticks < 1) fail("time.horizon_ticks must be >= 1");
  if (cfg.time.kpi_window_ticks < 1) fail("time.kpi_window_ticks must be >= 1");
  if (cfg.radio.shadow_rho < 0.0 || cfg.radio.shadow_rho >= 1.0) {
    fail("radio.shadow_rho must be in [0, 1)");
  }
  if (cfg.radio.shadow_sigma_db < 0.0) fail("radio.shadow_sigma_db must be >= 0");
  if (cfg.handover.default_hysteresis_db < sim::kHysteresisMinDb ||
      cfg.handover.default_hysteresis_db > sim::kHysteresisMaxDb) {
    fail("handover.default_hysteresis_db out of [0, 10]");
  }
  if (!sim::is_valid_ttt(cfg.handover.default_ttt_ms)) {
    fail(fmt::format("handover.default_ttt_ms {} not in the TTT value set",
                     cfg.handover.default_ttt_ms));
  }
  if (cfg.detection.enabled) {
    const long required = 2L * cfg.detection.ad.baseline_window * cfg.time.kpi_window_ticks;
    if (cfg.time.horizon_ticks < required) {
      fail(fmt::format(
          "time.horizon_ticks {} too short for detection: need >= 2*baseline_window*"
          "kpi_window_ticks = {}",
          cfg.time.horizon_ticks, required));
    }
    if (cfg.detection.ad.baseline_window < 2) fail("detection.baseline_window must be >= 2");
    if (cfg.detection.ad.k <= 0.0) fail("detection.k must be > 0");
    if (cfg.detection.implicit.lag_max < 0) fail("detection.lag_max must be >= 0");
  }
  if (cfg.xapps.stealth_enabled) {
    if (cfg.xapps.stealth_victim_cell < 0 ||
        cfg.xapps.stealth_victim_cell >= cfg.topology.cell_count) {
      fail("xapps.stealth.victim_cell does not exist");
    }
    if (cfg.xapps.stealth_epoch_windows < 1) fail("xapps.stealth.epoch_windows must be >= 1");
  }
  for (const auto& spec : cfg.xapps.injectors) {
    if (spec.xapp_id.empty()) fail("xapps.injectors[].xapp_id must be set");
    if (!ric::param_from_string(spec.param_id)) {
      fail(fmt::format("xapps.injectors[].param_id '{}' unknown", spec.param_id));
    }
    const auto target = ric::Target::from_string(spec.target);
    if (!target) fail(fmt::format("xapps.injectors[].target '{}' unparseable", spec.target));
    if (target->cell < 0 || target->cell >= cfg.topology.cell_count ||
        (target->is_pair() &&
         (target->neighbor < 0 || target->neighbor >= cfg.topology.cell_count))) {
      fail(fmt::format("xapps.injectors[].target '{}' does not exist", spec.target));
    }
    if (spec.period_windows < 1) fail("xapps.injectors[].period_windows must be >= 1");
  }
  if (cfg.mitigation.cooldown_windows < 1) fail("mitigation.cooldown_windows must be >= 1");

  const auto ids = cfg.enabled_xapp_ids();
  std::set<std::string> seen;
  for (const auto& id : ids) {
    if (!seen.insert(id).second) fail(fmt::format("duplicate xapp id '{}'", id));
  }
  for (const auto& id : cfg.mitigation.priorities) {
    if (seen.count(id) == 0) {
      fail(fmt::format("mitigation.priorities names unknown xapp '{}'", id));
    }
  }
  if (cfg.mitigation.mode == MitigationMode::Learn && !cfg.detection.enabled) {
    fail("priority learning requires detection.enabled");
  }
  if (cfg.learn.episodes < 1) fail("learn.episodes must be >= 1");
  if (cfg.learn.epsilon < 0.0 || cfg.learn.epsilon > 1.0) fail("learn.epsilon must be in [0,1]");
  if (cfg.learn.seed_schedule_size < 1) fail("learn.seed_schedule_size must be >= 1");
}

std::vector<std::string> ScenarioConfig::enabled_xapp_ids() const {
  std::vector<std::string> ids;
  if (xapps.mlb_enabled) ids.push_back("mlb");
  if (xapps.mro_enabled) ids.push_back("mro");
  if (xapps.stealth_enabled) ids.push_back("stealth-power");
  for (const auto& spec : xapps.injectors) ids.push_back(spec.xapp_id);
  return ids;
}

sim::EngineConfig ScenarioConfig::engine_config() const {
  sim::EngineConfig engine;
  engine.topology = topology;
  engine.mobility = ues.mobility;
  engine.radio = radio;
  engine.ue_count = ues.count;
  engine.tick_ms = time.tick_ms;
  engine.t_pp_ms = handover.t_pp_ms;
  engine.t_early_ms = handover.t_early_ms;
  engine.default_hysteresis_db = handover.default_hysteresis_db;
  engine.default_ttt_ms = handover.default_ttt_ms;
  engine.seed = seed;
  return engine;
}

nlohmann::ordered_json to_json(const ScenarioConfig& cfg) {
  nlohmann::ordered_json j;
  j["seed"] = cfg.seed;
  j["topology"] = {{"cell_count", cfg.topology.cell_count},
                   {"spacing_m", cfg.topology.spacing_m},
                   {"capacity", cfg.topology.capacity},
                   {"tx_power_dbm", cfg.topology.tx_power_dbm}};
  j["ues"] = {{"count", cfg.ues.count},
              {"mobility", mobility_mode_name(cfg.ues.mobility.mode)},
              {"speed_min_mps", cfg.ues.mobility.speed_min_mps},
              {"speed_max_mps", cfg.ues.mobility.speed_max_mps},
              {"box_scale", cfg.ues.mobility.box_scale},
              {"hotspot_ue_count", cfg.ues.mobility.hotspot_ue_count},
              {"hotspot_cell", cfg.ues.mobility.hotspot_cell},
              {"hotspot_radius_m", cfg.ues.mobility.hotspot_radius_m}};
  j["radio"] = {{"pl0_db", cfg.radio.pl0_db},
                {"ref_distance_m", cfg.radio.ref_distance_m},
                {"pl_exponent", cfg.radio.pl_exponent},
                {"min_distance_m", cfg.radio.min_distance_m},
                {"shadow_sigma_db", cfg.radio.shadow_sigma_db},
                {"shadow_rho", cfg.radio.shadow_rho},
                {"rlf_floor_dbm", cfg.radio.rlf_floor_dbm},
                {"t_rlf_ms", cfg.radio.t_rlf_ms}};
  j["time"] = {{"tick_ms", cfg.time.tick_ms},
               {"horizon_ticks", cfg.time.horizon_ticks},
               {"kpi_window_ticks", cfg.time.kpi_window_ticks}};
  j["handover"] = {{"default_hysteresis_db", cfg.handover.default_hysteresis_db},
                   {"default_ttt_ms", cfg.handover.default_ttt_ms},
                   {"t_pp_ms", cfg.handover.t_pp_ms},
                   {"t_early_ms", cfg.handover.t_early_ms}};
  nlohmann::ordered_json injectors = nlohmann::ordered_json::array();
  for (const auto& spec : cfg.xapps.injectors) {
    injectors.push_back({{"xapp_id", spec.xapp_id},
                         {"target", spec.target},
                         {"param_id", spec.param_id},
                         {"value", spec.value},
                         {"period_windows", spec.period_windows},
                         {"phase", spec.phase}});
  }
  j["xapps"] = {
      {"mlb",
       {{"enabled", cfg.xapps.mlb_enabled},
        {"load_imbalance_threshold", cfg.xapps.mlb.load_imbalance_threshold},
        {"cio_step_db", cfg.xapps.mlb.cio_step_db}}},
      {"mro",
       {{"enabled", cfg.xapps.mro_enabled},
        {"pingpong_rate_threshold", cfg.xapps.mro.pingpong_rate_threshold},
        {"rlf_threshold", cfg.xapps.mro.rlf_threshold},
        {"h_step_db", cfg.xapps.mro.h_step_db},
        {"ttt_step", cfg.xapps.mro.ttt_step}}},
      {"stealth",
       {{"enabled", cfg.xapps.stealth_enabled},
        {"victim_cell", cfg.xapps.stealth_victim_cell},
        {"power_step_db", cfg.xapps.stealth_power_step_db},
        {"epoch_windows", cfg.xapps.stealth_epoch_windows}}},
      {"injectors", std::move(injectors)}};
  j["detection"] = {{"enabled", cfg.detection.enabled},
                    {"baseline_window", cfg.detection.ad.baseline_window},
                    {"k", cfg.detection.ad.k},
                    {"lag_max", cfg.detection.implicit.lag_max},
                    {"tau", cfg.detection.implicit.tau}};
  nlohmann::ordered_json mitigation = {{"cm_enabled", cfg.mitigation.cm_enabled},
                                       {"cooldown_windows", cfg.mitigation.cooldown_windows},
                                       {"tau_hard", cfg.mitigation.tau_hard},
                                       {"mode", mitigation_mode_name(cfg.mitigation.mode)}};
  if (cfg.mitigation.mode == MitigationMode::Learn) {
    mitigation["priorities"] = "learn";
  } else {
    mitigation["priorities"] = cfg.mitigation.priorities;
  }
  j["mitigation"] = std::move(mitigation);
  j["reward"] = {{"w_load", cfg.reward.w_load},
                 {"w_rlf", cfg.reward.w_rlf},
                 {"w_pp", cfg.reward.w_pp}};
  j["learn"] = {{"episodes", cfg.learn.episodes},
                {"epsilon", cfg.learn.epsilon},
                {"seed_schedule_size", cfg.learn.seed_schedule_size}};
  return j;
}

}  // namespace riclab::cfg
