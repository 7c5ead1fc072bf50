#include "riclab/detect/conflict.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <nlohmann/json.hpp>

namespace riclab::detect {

namespace {

const XAppDescriptor* find_descriptor(const std::vector<XAppDescriptor>& descriptors,
                                      const std::string& xapp_id) {
  for (const auto& d : descriptors) {
    if (d.xapp_id == xapp_id) return &d;
  }
  return nullptr;
}

// Ledger window -> per-xApp set of operated (target, param) keys.
std::map<std::string, ParamKeySet> keys_by_xapp(const std::vector<ActionRecord>& records,
                                                bool include_blocked) {
  std::map<std::string, ParamKeySet> result;
  for (const auto& record : records) {
    if (record.outcome == ric::ActionOutcome::Rejected) continue;
    if (!include_blocked && record.outcome == ric::ActionOutcome::BlockedByPriority) continue;
    result[record.xapp_id].insert({record.target, record.param_id});
  }
  return result;
}

bool disjoint(const ParamKeySet& a, const ParamKeySet& b) {
  for (const auto& key : a) {
    if (b.count(key) > 0) return false;
  }
  return true;
}

// Reports sort by detection tick, then type, then xApp set.
void sort_reports(std::vector<ConflictReport>& reports) {
  std::sort(reports.begin(), reports.end(), [](const ConflictReport& a, const ConflictReport& b) {
    if (a.detected_at_tick != b.detected_at_tick) return a.detected_at_tick < b.detected_at_tick;
    if (a.conflict_type != b.conflict_type) return a.conflict_type < b.conflict_type;
    return a.xapps < b.xapps;
  });
}

}  // namespace

const char* to_string(ConflictType type) {
  switch (type) {
    case ConflictType::Direct: return "Direct";
    case ConflictType::Indirect: return "Indirect";
    case ConflictType::Implicit: return "Implicit";
  }
  return "?";
}

std::vector<ConflictReport> detect_direct(const std::vector<ActionRecord>& window_records,
                                          const std::vector<XAppDescriptor>& descriptors,
                                          Tick detected_at_tick) {
  // Group by operated key; any key with >= 2 distinct writers is one report.
  std::map<ParamKey, std::set<std::string>> writers;
  for (const auto& record : window_records) {
    if (record.outcome == ric::ActionOutcome::Rejected) continue;
    writers[{record.target, record.param_id}].insert(record.xapp_id);
  }

  std::vector<ConflictReport> reports;
  for (const auto& [key, xapps] : writers) {
    if (xapps.size() < 2) continue;
    ConflictReport report;
    report.detected_at_tick = detected_at_tick;
    report.conflict_type = ConflictType::Direct;
    report.xapps = xapps;
    bool first = true;
    for (const auto& xapp : xapps) {
      report.parameters[xapp] = {key};
      // Shared impact of a direct conflict: what all writers declare.
      if (const auto* desc = find_descriptor(descriptors, xapp)) {
        if (first) {
          report.impacted_kpis = desc->declared_impacts;
          first = false;
        } else {
          std::set<KpiId> intersection;
          std::set_intersection(report.impacted_kpis.begin(), report.impacted_kpis.end(),
                                desc->declared_impacts.begin(), desc->declared_impacts.end(),
                                std::inserter(intersection, intersection.begin()));
          report.impacted_kpis = std::move(intersection);
        }
      }
    }
    reports.push_back(std::move(report));
  }
  sort_reports(reports);
  return reports;
}

std::vector<ConflictReport> detect_indirect(const std::vector<AnomalyFlag>& degradation_flags,
                                            const std::vector<ActionRecord>& window_records,
                                            const std::vector<XAppDescriptor>& descriptors,
                                            Tick detected_at_tick) {
  std::vector<ConflictReport> reports;
  if (degradation_flags.empty()) return reports;

  const auto applied_keys = keys_by_xapp(window_records, /*include_blocked=*/false);

  std::set<KpiId> anomalous_kpis;
  for (const auto& flag : degradation_flags) {
    if (flag.direction == Direction::Degradation) anomalous_kpis.insert(flag.kpi);
  }

  // Implicated set per anomalous KPI; KPIs sharing a set merge into one report.
  std::map<std::set<std::string>, std::set<KpiId>> by_actor_set;
  for (const KpiId kpi : anomalous_kpis) {
    std::vector<std::string> actors;
    for (const auto& [xapp, keys] : applied_keys) {
      const auto* desc = find_descriptor(descriptors, xapp);
      if (desc == nullptr || desc->declared_impacts.count(kpi) == 0) continue;
      actors.push_back(xapp);
    }
    if (actors.size() < 2) continue;

    // Drop actors that overlap on a key with another actor: that contention
    // is direct, not indirect.
    std::set<std::string> clean;
    for (const auto& a : actors) {
      bool overlapping = false;
      for (const auto& b : actors) {
        if (a != b && !disjoint(applied_keys.at(a), applied_keys.at(b))) {
          overlapping = true;
          break;
        }
      }
      if (!overlapping) clean.insert(a);
    }
    if (clean.size() < 2) continue;
    by_actor_set[clean].insert(kpi);
  }

  for (const auto& [actors, kpis] : by_actor_set) {
    ConflictReport report;
    report.detected_at_tick = detected_at_tick;
    report.conflict_type = ConflictType::Indirect;
    report.xapps = actors;
    report.impacted_kpis = kpis;
    for (const auto& xapp : actors) report.parameters[xapp] = applied_keys.at(xapp);
    for (const auto& flag : degradation_flags) {
      if (flag.direction == Direction::Degradation && kpis.count(flag.kpi) > 0) {
        report.anomalies.push_back(flag);
      }
    }
    reports.push_back(std::move(report));
  }
  sort_reports(reports);
  return reports;
}

std::optional<double> LaggedCorrelationScorer::score(const std::vector<char>& actions,
                                                     const std::vector<char>& degradations,
                                                     int lag_max) const {
  const int n = static_cast<int>(std::min(actions.size(), degradations.size()));
  std::optional<double> best;
  for (int lag = 0; lag <= lag_max; ++lag) {
    const int len = n - lag;
    if (len < 2) break;
    double sum_a = 0.0, sum_d = 0.0;
    for (int t = lag; t < n; ++t) {
      sum_a += actions[t - lag];
      sum_d += degradations[t];
    }
    const double mean_a = sum_a / len;
    const double mean_d = sum_d / len;
    double cov = 0.0, var_a = 0.0, var_d = 0.0;
    for (int t = lag; t < n; ++t) {
      const double da = actions[t - lag] - mean_a;
      const double dd = degradations[t] - mean_d;
      cov += da * dd;
      var_a += da * da;
      var_d += dd * dd;
    }
    if (var_a <= 0.0 || var_d <= 0.0) continue;  // degenerate at this lag
    const double r = cov / std::sqrt(var_a * var_d);
    if (!best || r > *best) best = r;
  }
  return best;
}

std::vector<ConflictReport> detect_implicit(
    const std::vector<AnomalyFlag>& uncovered_degradation_flags, const WindowHistory& history,
    const std::vector<XAppDescriptor>& descriptors, const ImplicitConfig& cfg,
    const EvidenceScorer& scorer, Tick detected_at_tick) {
  std::vector<ConflictReport> reports;
  if (uncovered_degradation_flags.empty()) return reports;

  const int windows = static_cast<int>(history.applied_by_window.size());
  if (windows <= cfg.lag_max) return reports;  // insufficient history

  const int current = windows - 1;
  const int lookback_start = std::max(0, current - cfg.lag_max);

  // Candidates: xApps that applied something within the lookback.
  std::map<std::string, ParamKeySet> lookback_keys;
  for (int w = lookback_start; w <= current; ++w) {
    for (const auto& [xapp, keys] : history.applied_by_window[w]) {
      lookback_keys[xapp].insert(keys.begin(), keys.end());
    }
  }
  if (lookback_keys.empty()) return reports;

  // Binary action series per candidate over the full history.
  std::map<std::string, std::vector<char>> action_series;
  for (const auto& [xapp, _] : lookback_keys) {
    auto& series = action_series[xapp];
    series.resize(windows, 0);
    for (int w = 0; w < windows; ++w) {
      const auto it = history.applied_by_window[w].find(xapp);
      series[w] = (it != history.applied_by_window[w].end() && !it->second.empty()) ? 1 : 0;
    }
  }

  for (const auto& flag : uncovered_degradation_flags) {
    if (flag.direction != Direction::Degradation) continue;

    std::vector<char> degradation_series(windows, 0);
    for (int w = 0; w < windows; ++w) {
      degradation_series[w] =
          history.degraded_by_window[w].count({flag.cell_id, flag.kpi}) > 0 ? 1 : 0;
    }

    // Score every candidate; implicate those above tau.
    std::vector<std::pair<std::string, double>> implicated;
    for (const auto& [xapp, series] : action_series) {
      const auto s = scorer.score(series, degradation_series, cfg.lag_max);
      if (s && *s > cfg.tau) implicated.emplace_back(xapp, *s);
    }
    if (implicated.empty()) continue;

    // The report is implicit only if somebody never declared this KPI;
    // a lone declaring actor is just doing its declared job.
    bool someone_undeclared = false;
    for (const auto& [xapp, _] : implicated) {
      const auto* desc = find_descriptor(descriptors, xapp);
      if (desc == nullptr || desc->declared_impacts.count(flag.kpi) == 0) {
        someone_undeclared = true;
        break;
      }
    }
    if (!someone_undeclared) continue;

    // Keep parameter sets pairwise disjoint (overlaps belong to Direct):
    // strongest evidence wins, ties to the lexicographically first id.
    std::sort(implicated.begin(), implicated.end(), [](const auto& a, const auto& b) {
      if (a.second != b.second) return a.second > b.second;
      return a.first < b.first;
    });
    ConflictReport report;
    report.detected_at_tick = detected_at_tick;
    report.conflict_type = ConflictType::Implicit;
    for (const auto& [xapp, score] : implicated) {
      const auto& keys = lookback_keys.at(xapp);
      bool clashes = false;
      for (const auto& [kept, _] : report.parameters) {
        if (!disjoint(report.parameters.at(kept), keys)) {
          clashes = true;
          break;
        }
      }
      if (clashes) continue;
      report.xapps.insert(xapp);
      report.parameters[xapp] = keys;
      report.evidence[xapp] = score;
    }
    report.impacted_kpis = {flag.kpi};
    report.anomalies.push_back(flag);
    reports.push_back(std::move(report));
  }
  sort_reports(reports);
  return reports;
}

ConflictDetector::ConflictDetector(DetectorConfig cfg) : cfg_(cfg), ad_(cfg.ad) {}

std::vector<ConflictReport> ConflictDetector::process_window(
    const sim::KpiWindow& window, const std::vector<ActionRecord>& window_records,
    const std::vector<XAppDescriptor>& descriptors) {
  const Tick detected_at = window.window_end_tick;
  const auto flags = ad_.process_window(window);

  std::vector<AnomalyFlag> degradation_flags;
  std::set<std::pair<CellId, KpiId>> degraded_now;
  for (const auto& flag : flags) {
    if (flag.direction != Direction::Degradation) continue;
    degradation_flags.push_back(flag);
    degraded_now.insert({flag.cell_id, flag.kpi});
  }

  history_.applied_by_window.push_back(keys_by_xapp(window_records, /*include_blocked=*/false));
  history_.degraded_by_window.push_back(std::move(degraded_now));

  std::vector<ConflictReport> reports =
      detect_direct(window_records, descriptors, detected_at);
  auto indirect = detect_indirect(degradation_flags, window_records, descriptors, detected_at);

  // Anything indirect explained is off the implicit path.
  std::set<KpiId> covered;
  for (const auto& report : indirect) {
    covered.insert(report.impacted_kpis.begin(), report.impacted_kpis.end());
  }
  std::vector<AnomalyFlag> uncovered;
  for (const auto& flag : degradation_flags) {
    if (covered.count(flag.kpi) == 0) uncovered.push_back(flag);
  }

  const int windows = static_cast<int>(history_.applied_by_window.size());
  if (!uncovered.empty() && windows <= cfg_.implicit.lag_max) {
    ++insufficient_history_;  // anomaly noted, no report possible yet
  }
  auto implicit = detect_implicit(uncovered, history_, descriptors, cfg_.implicit, scorer_,
                                  detected_at);

  for (auto& report : indirect) reports.push_back(std::move(report));
  for (auto& report : implicit) reports.push_back(std::move(report));
  sort_reports(reports);
  return reports;
}

void export_jsonl(const std::vector<ConflictReport>& reports, std::ostream& out) {
  for (const auto& report : reports) {
    nlohmann::ordered_json line;
    line["detected_at_tick"] = report.detected_at_tick;
    line["conflict_type"] = to_string(report.conflict_type);
    line["xapps"] = report.xapps;
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [xapp, keys] : report.parameters) {
      nlohmann::ordered_json list = nlohmann::ordered_json::array();
      for (const auto& [target, param] : keys) {
        list.push_back({{"target", target.to_string()}, {"param_id", ric::to_string(param)}});
      }
      params[xapp] = std::move(list);
    }
    line["parameters"] = std::move(params);
    nlohmann::ordered_json kpis = nlohmann::ordered_json::array();
    for (const auto kpi : report.impacted_kpis) kpis.push_back(ric::to_string(kpi));
    line["impacted_kpis"] = std::move(kpis);
    nlohmann::ordered_json evidence = nlohmann::ordered_json::object();
    for (const auto& [xapp, score] : report.evidence) evidence[xapp] = score;
    line["evidence"] = std::move(evidence);
    out << line.dump() << '\n';
  }
}

}  // namespace riclab::detect
