#include "riclab/runner/runner.hpp"

#include <cmath>
#include <memory>

#include "riclab/mitigate/policy.hpp"
#include "riclab/ric/controller.hpp"
#include "riclab/ric/kpi_bus.hpp"
#include "riclab/ric/registry.hpp"
#include "riclab/sim/engine.hpp"
#include "riclab/util/rng.hpp"
#include "riclab/xapps/policies.hpp"

namespace riclab::runner {

namespace {

double cross_cell_load_stddev(const std::vector<sim::KpiSample>& samples) {
  if (samples.size() < 2) return 0.0;
  double sum = 0.0;
  for (const auto& s : samples) sum += s.mean_load;
  const double mean = sum / static_cast<double>(samples.size());
  double sq = 0.0;
  for (const auto& s : samples) sq += (s.mean_load - mean) * (s.mean_load - mean);
  return std::sqrt(sq / static_cast<double>(samples.size()));
}

struct XAppInstance {
  ric::XAppHandle handle;
  std::unique_ptr<xapps::XApp> xapp;
};

std::vector<XAppInstance> build_xapps(const cfg::ScenarioConfig& config,
                                      const sim::Simulator& simulator,
                                      ric::RicController& controller) {
  std::vector<XAppInstance> instances;
  const auto add = [&](std::unique_ptr<xapps::XApp> xapp) {
    const auto handle = controller.register_xapp(xapp->descriptor());
    if (!handle) {
      throw cfg::ConfigError("duplicate xapp id '" + xapp->descriptor().xapp_id + "'");
    }
    instances.push_back({*handle, std::move(xapp)});
  };

  if (config.xapps.mlb_enabled) {
    add(std::make_unique<xapps::MlbXApp>(config.xapps.mlb, simulator.neighbors()));
  }
  if (config.xapps.mro_enabled) {
    std::vector<double> h(config.topology.cell_count, config.handover.default_hysteresis_db);
    std::vector<int> ttt(config.topology.cell_count, config.handover.default_ttt_ms);
    add(std::make_unique<xapps::MroXApp>(config.xapps.mro, std::move(h), std::move(ttt)));
  }
  if (config.xapps.stealth_enabled) {
    xapps::StealthConfig stealth;
    stealth.victim_cell = config.xapps.stealth_victim_cell;
    stealth.power_step_db = config.xapps.stealth_power_step_db;
    stealth.epoch_windows = config.xapps.stealth_epoch_windows;
    stealth.base_tx_dbm = config.topology.tx_power_dbm;
    add(std::make_unique<xapps::StealthPowerXApp>(stealth));
  }
  for (const auto& spec : config.xapps.injectors) {
    xapps::InjectorConfig injector;
    injector.xapp_id = spec.xapp_id;
    injector.target = *ric::Target::from_string(spec.target);
    injector.param = *ric::param_from_string(spec.param_id);
    injector.value = spec.value;
    injector.period_windows = spec.period_windows;
    injector.phase = spec.phase;
    add(std::make_unique<xapps::InjectorXApp>(injector));
  }
  return instances;
}

}  // namespace

cfg::ScenarioConfig baseline_config(cfg::ScenarioConfig config) {
  config.xapps.mlb_enabled = false;
  config.xapps.mro_enabled = false;
  config.xapps.stealth_enabled = false;
  config.xapps.injectors.clear();
  config.mitigation.cm_enabled = false;
  config.mitigation.mode = cfg::MitigationMode::Off;
  config.mitigation.priorities.clear();
  config.detection.enabled = false;
  return config;
}

RunResult run_scenario(const cfg::ScenarioConfig& config) {
  cfg::validate(config);

  RunResult result;
  result.config = config;

  sim::Simulator simulator(config.engine_config());
  ric::RicController controller(simulator, ric::ParameterRegistry::standard());
  auto instances = build_xapps(config, simulator, controller);

  std::unique_ptr<detect::ConflictDetector> detector;
  if (config.detection.enabled) {
    detect::DetectorConfig det;
    det.ad = config.detection.ad;
    det.implicit = config.detection.implicit;
    detector = std::make_unique<detect::ConflictDetector>(det);
  }

  std::unique_ptr<mitigate::Mitigator> mitigator;
  if (config.mitigation.cm_enabled) {
    mitigate::PriorityPolicy policy;
    policy.ordering = config.mitigation.priorities.empty() ? config.enabled_xapp_ids()
                                                           : config.mitigation.priorities;
    mitigate::MitigationConfig mit;
    mit.cooldown_ticks =
        static_cast<ric::Tick>(config.mitigation.cooldown_windows) * config.time.kpi_window_ticks;
    mit.tau_hard = config.mitigation.tau_hard;
    mitigator = std::make_unique<mitigate::Mitigator>(std::move(policy), mit);
    controller.set_gate(mitigator.get());
  }

  ric::KpiBus bus;
  // Detection and mitigation run before the xApps act on the same boundary,
  // so fresh blocks gate this boundary's submissions.
  bus.subscribe([&](const sim::KpiWindow& window) {
    if (!detector) return;
    const auto records =
        controller.ledger().query(window.window_start_tick, window.window_end_tick - 1);
    auto reports = detector->process_window(window, records, controller.descriptors());
    if (mitigator) mitigator->on_reports(reports, simulator.tick());
    for (auto& report : reports) result.reports.push_back(std::move(report));
  });
  for (auto& instance : instances) {
    auto* xapp = instance.xapp.get();
    const auto handle = instance.handle;
    bus.subscribe([&controller, xapp, handle](const sim::KpiWindow& window) {
      for (const auto& request : xapp->decide(window)) {
        controller.submit_action(handle, request.target, request.param, request.value);
      }
    });
  }

  sim::KpiCollector collector(config.topology.cell_count);
  std::vector<double> window_stddevs;
  sim::Tick window_start = 0;

  for (long t = 0; t < config.time.horizon_ticks; ++t) {
    for (const auto& event : simulator.step()) {
      collector.on_event(event);
      result.events.push_back(event);
      result.totals.events_by_kind[sim::to_string(event.kind)] += 1;
    }
    collector.on_tick_loads(simulator.loads());
    if ((t + 1) % config.time.kpi_window_ticks == 0) {
      const auto window = collector.close_window(window_start, t + 1, simulator.loads());
      window_start = t + 1;
      for (const auto& sample : window.samples) result.kpi_samples.push_back(sample);
      window_stddevs.push_back(cross_cell_load_stddev(window.samples));
      bus.publish(window);
    }
  }

  result.ledger = controller.ledger();

  // Totals and episode aggregate.
  auto& totals = result.totals;
  totals.windows = static_cast<long>(window_stddevs.size());
  for (const auto& sample : result.kpi_samples) {
    totals.ho_count += sample.ho_count;
    totals.pingpong_count += sample.pingpong_count;
    totals.rlf_count += sample.rlf_count;
    totals.call_blocks += sample.call_blocks;
  }
  for (const auto& report : result.reports) {
    totals.conflicts_by_type[detect::to_string(report.conflict_type)] += 1;
  }
  if (!window_stddevs.empty()) {
    double sum = 0.0;
    for (const double v : window_stddevs) sum += v;
    totals.load_stddev_timeavg = sum / static_cast<double>(window_stddevs.size());
    const std::size_t late_from = window_stddevs.size() - window_stddevs.size() / 4;
    double late_sum = 0.0;
    std::size_t late_n = 0;
    for (std::size_t i = late_from; i < window_stddevs.size(); ++i) {
      late_sum += window_stddevs[i];
      ++late_n;
    }
    totals.late_load_stddev = late_n > 0 ? late_sum / static_cast<double>(late_n) : 0.0;
  }
  result.aggregate.load_stddev = totals.load_stddev_timeavg;
  if (totals.windows > 0) {
    result.aggregate.rlf_rate =
        static_cast<double>(totals.rlf_count) / static_cast<double>(totals.windows);
    result.aggregate.pingpong_rate =
        static_cast<double>(totals.pingpong_count) / static_cast<double>(totals.windows);
  }
  return result;
}

RunResult run_scenario_with_reward(const cfg::ScenarioConfig& config) {
  RunResult result = run_scenario(config);
  if (!config.enabled_xapp_ids().empty()) {
    const RunResult baseline = run_scenario(baseline_config(config));
    result.reward = mitigate::compute_reward(result.aggregate, baseline.aggregate, config.reward);
    result.reward_computed = true;
  } else {
    result.reward = 0.0;
    result.reward_computed = true;
  }
  return result;
}

LearnResult run_learning(const cfg::ScenarioConfig& config) {
  cfg::validate(config);
  if (config.mitigation.mode != cfg::MitigationMode::Learn) {
    throw cfg::ConfigError("run_learning requires mitigation.priorities = \"learn\"");
  }
  const auto xapp_ids = config.enabled_xapp_ids();
  if (static_cast<int>(xapp_ids.size()) > mitigate::kMaxBanditXapps) {
    throw TooManyXapps("priority learning supports at most 5 xApps");
  }

  LearnResult result;
  for (int i = 0; i < config.learn.seed_schedule_size; ++i) {
    result.seed_schedule.push_back(util::derive_seed(config.seed, 0x5eedULL, i));
  }

  // Seed-matched no-xApp baselines, one per scheduled seed.
  std::map<std::uint64_t, mitigate::EpisodeAggregate> baselines;
  for (const auto seed : result.seed_schedule) {
    cfg::ScenarioConfig base = baseline_config(config);
    base.seed = seed;
    baselines[seed] = run_scenario(base).aggregate;
  }

  const auto run_episode = [&](const std::vector<std::string>& ordering,
                               std::uint64_t seed) -> double {
    cfg::ScenarioConfig episode = config;
    episode.seed = seed;
    episode.mitigation.cm_enabled = true;
    episode.mitigation.mode = cfg::MitigationMode::Static;
    episode.mitigation.priorities = ordering;
    const RunResult run = run_scenario(episode);
    return mitigate::compute_reward(run.aggregate, baselines.at(seed), config.reward);
  };

  mitigate::BanditConfig bandit;
  bandit.episodes = config.learn.episodes;
  bandit.epsilon = config.learn.epsilon;
  bandit.seed_schedule = result.seed_schedule;
  bandit.exploration_seed = util::derive_seed(config.seed, 0xE7ULL);

  auto outcome = mitigate::learn_priorities(xapp_ids, bandit, run_episode);
  if (!outcome) throw TooManyXapps("priority learning supports at most 5 xApps");
  result.outcome = std::move(*outcome);
  return result;
}

}  // namespace riclab::runner
