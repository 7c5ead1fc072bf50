#include "riclab/sim/engine.hpp"

#include <algorithm>
#include <cmath>

#include "riclab/sim/classifier.hpp"

namespace riclab::sim {

Simulator::Simulator(const EngineConfig& cfg)
    : cfg_(cfg),
      cells_(make_hex_topology(cfg.topology)),
      neighbors_(neighbor_lists(cells_, cfg.topology.spacing_m)),
      mobility_(cfg.mobility, bounding_box(cells_, cfg.topology.spacing_m), cells_, cfg.seed),
      shadowing_(cfg.ue_count, cfg.topology.cell_count, cfg.radio, cfg.seed) {
  staged_params_.hysteresis_db.assign(cells_.size(), cfg.default_hysteresis_db);
  staged_params_.ttt_ms.assign(cells_.size(), cfg.default_ttt_ms);
  active_params_ = staged_params_;
  staged_tx_dbm_.resize(cells_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c) staged_tx_dbm_[c] = cells_[c].tx_power_dbm;

  ues_.resize(cfg.ue_count);
  for (int u = 0; u < cfg.ue_count; ++u) {
    auto& ue = ues_[u];
    ue.ue_id = u;
    ue.rsrp_dbm.assign(cells_.size(), 0.0);
    ue.a3_timer_ms.assign(cells_.size(), 0);
    ue.shadow_db.assign(cells_.size(), 0.0);
    mobility_.place(ue);
  }
  refresh_rsrp();
  attach_initial();
}

void Simulator::commit_staged() {
  active_params_ = staged_params_;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    cells_[c].tx_power_dbm = staged_tx_dbm_[c];
  }
  // A lowered TTT must not leave stale timers above the new cap.
  for (auto& ue : ues_) {
    if (ue.serving_cell == kNoCell) continue;
    const int cap = active_params_.ttt_ms[ue.serving_cell];
    for (auto& timer : ue.a3_timer_ms) timer = std::min(timer, cap);
  }
}

void Simulator::refresh_rsrp() {
  for (auto& ue : ues_) {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      ue.shadow_db[c] = shadowing_.shadow_db(ue.ue_id, static_cast<CellId>(c));
      ue.rsrp_dbm[c] = compute_rsrp(cells_[c].tx_power_dbm,
                                    distance(ue.position, cells_[c].position), cfg_.radio,
                                    ue.shadow_db[c]);
    }
  }
}

CellId Simulator::strongest_cell(const UeState& ue, CellId exclude) const {
  CellId best = kNoCell;
  double best_rsrp = 0.0;
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    if (static_cast<CellId>(c) == exclude) continue;
    if (best == kNoCell || ue.rsrp_dbm[c] > best_rsrp) {
      best = static_cast<CellId>(c);
      best_rsrp = ue.rsrp_dbm[c];
    }
  }
  return best;
}

void Simulator::attach_initial() {
  for (auto& ue : ues_) {
    // Strongest cell with free capacity; UEs that find none start in outage.
    CellId best = kNoCell;
    double best_rsrp = 0.0;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (cells_[c].at_capacity()) continue;
      if (best == kNoCell || ue.rsrp_dbm[c] > best_rsrp) {
        best = static_cast<CellId>(c);
        best_rsrp = ue.rsrp_dbm[c];
      }
    }
    if (best != kNoCell) {
      ue.serving_cell = best;
      cells_[best].connected_ues.insert(ue.ue_id);
    }
  }
}

void Simulator::reattach_outage() {
  for (auto& ue : ues_) {
    if (ue.serving_cell != kNoCell) continue;
    CellId best = kNoCell;
    double best_rsrp = 0.0;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      if (cells_[c].at_capacity()) continue;
      if (best == kNoCell || ue.rsrp_dbm[c] > best_rsrp) {
        best = static_cast<CellId>(c);
        best_rsrp = ue.rsrp_dbm[c];
      }
    }
    if (best != kNoCell) {
      ue.serving_cell = best;
      cells_[best].connected_ues.insert(ue.ue_id);
      ue.rlf_timer_ms = 0;
      std::fill(ue.a3_timer_ms.begin(), ue.a3_timer_ms.end(), 0);
    }
  }
}

void Simulator::run_rlf_checks(std::vector<SimEvent>& events) {
  for (auto& ue : ues_) {
    if (ue.serving_cell == kNoCell) continue;
    if (ue.rsrp_dbm[ue.serving_cell] < cfg_.radio.rlf_floor_dbm) {
      ue.rlf_timer_ms += cfg_.tick_ms;
    } else {
      ue.rlf_timer_ms = 0;
      continue;
    }
    if (ue.rlf_timer_ms < cfg_.radio.t_rlf_ms) continue;

    const CellId failed = ue.serving_cell;
    events.push_back({tick_, EventKind::Rlf, ue.ue_id, failed, kNoCell});
    // Too-late attribution: a stronger cell existed while the link died.
    const CellId best_other = strongest_cell(ue, failed);
    if (best_other != kNoCell && ue.rsrp_dbm[best_other] > ue.rsrp_dbm[failed]) {
      events.push_back({tick_, EventKind::TooLateHo, ue.ue_id, failed, best_other});
    }
    // Too-early attribution: the previous handover led straight into a failure.
    if (is_too_early(ue.last_handover_tick, tick_, cfg_.tick_ms, cfg_.t_early_ms)) {
      events.push_back(
          {tick_, EventKind::TooEarlyHo, ue.ue_id, ue.last_serving_cell, failed});
    }

    cells_[failed].connected_ues.erase(ue.ue_id);
    ue.serving_cell = kNoCell;
    ue.rlf_timer_ms = 0;
    std::fill(ue.a3_timer_ms.begin(), ue.a3_timer_ms.end(), 0);
    // Outage breaks the ping-pong chain.
    ue.last_serving_cell = kNoCell;
    ue.last_handover_tick = -1;
  }
}

void Simulator::run_a3(std::vector<SimEvent>& events) {
  for (auto& ue : ues_) {
    const CellId serving = ue.serving_cell;
    if (serving == kNoCell) continue;
    const double hysteresis = active_params_.hysteresis_db[serving];
    const int ttt = active_params_.ttt_ms[serving];
    const double serving_level = ue.rsrp_dbm[serving] + hysteresis;

    CellId target = kNoCell;
    double target_rsrp = 0.0;
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      const CellId n = static_cast<CellId>(c);
      if (n == serving) {
        ue.a3_timer_ms[c] = 0;
        continue;
      }
      const bool condition = ue.rsrp_dbm[c] + active_params_.cio(serving, n) > serving_level;
      if (!condition) {
        ue.a3_timer_ms[c] = 0;
        continue;
      }
      ue.a3_timer_ms[c] = std::min(ue.a3_timer_ms[c] + cfg_.tick_ms, ttt);
      if (ue.a3_timer_ms[c] < ttt) continue;
      // Highest-RSRP qualifying candidate; ties break to the lowest cell id
      // because iteration is ascending and the comparison is strict.
      if (target == kNoCell || ue.rsrp_dbm[c] > target_rsrp) {
        target = n;
        target_rsrp = ue.rsrp_dbm[c];
      }
    }
    if (target == kNoCell) continue;

    if (cells_[target].at_capacity()) {
      events.push_back({tick_, EventKind::CallBlock, ue.ue_id, serving, target});
      ue.a3_timer_ms[target] = 0;  // must re-sustain TTT before retrying
      continue;
    }

    const HoClass cls = classify_handover(ue.last_serving_cell, ue.last_handover_tick, target,
                                          tick_, cfg_.tick_ms, cfg_.t_pp_ms);
    events.push_back({tick_,
                      cls == HoClass::PingPong ? EventKind::PingPongHandover
                                               : EventKind::Handover,
                      ue.ue_id, serving, target});
    cells_[serving].connected_ues.erase(ue.ue_id);
    cells_[target].connected_ues.insert(ue.ue_id);
    ue.last_serving_cell = serving;
    ue.last_handover_tick = tick_;
    ue.serving_cell = target;
    ue.rlf_timer_ms = 0;
    std::fill(ue.a3_timer_ms.begin(), ue.a3_timer_ms.end(), 0);
  }
}

std::vector<SimEvent> Simulator::step() {
  std::vector<SimEvent> events;
  commit_staged();

  const double tick_seconds = cfg_.tick_ms / 1000.0;
  for (auto& ue : ues_) mobility_.move(ue, tick_seconds);

  shadowing_.step();
  refresh_rsrp();

  reattach_outage();
  run_rlf_checks(events);

  if (trace_enabled_) {
    TickTrace entry;
    entry.tick = tick_;
    entry.params = active_params_;
    entry.tx_power_dbm.resize(cells_.size());
    for (std::size_t c = 0; c < cells_.size(); ++c) entry.tx_power_dbm[c] = cells_[c].tx_power_dbm;
    entry.rsrp.resize(ues_.size());
    entry.serving_before_a3.resize(ues_.size());
    for (std::size_t u = 0; u < ues_.size(); ++u) {
      entry.rsrp[u] = ues_[u].rsrp_dbm;
      entry.serving_before_a3[u] = ues_[u].serving_cell;
    }
    trace_.push_back(std::move(entry));
  }

  run_a3(events);
  ++tick_;
  return events;
}

bool Simulator::param_in_range(ParamId param, double value) const {
  switch (param) {
    case ParamId::Hysteresis:
      return value >= kHysteresisMinDb && value <= kHysteresisMaxDb;
    case ParamId::Cio:
      return value >= kCioMinDb && value <= kCioMaxDb;
    case ParamId::TxPower:
      return value >= kTxPowerMinDbm && value <= kTxPowerMaxDbm;
    case ParamId::Ttt:
      return value == std::floor(value) && is_valid_ttt(static_cast<int>(value));
  }
  return false;
}

ApplyResult Simulator::apply_param_change(const ParamRef& ref, double value) {
  const CellId n_cells = static_cast<CellId>(cells_.size());
  if (ref.cell < 0 || ref.cell >= n_cells) {
    return {ApplyResult::Status::UnknownTarget, 0.0};
  }
  if (ref.param == ParamId::Cio && (ref.neighbor < 0 || ref.neighbor >= n_cells ||
                                    ref.neighbor == ref.cell)) {
    return {ApplyResult::Status::UnknownTarget, 0.0};
  }
  const double old_value = read_param(ref);
  if (!param_in_range(ref.param, value)) {
    return {ApplyResult::Status::OutOfRange, old_value};
  }
  switch (ref.param) {
    case ParamId::Hysteresis:
      staged_params_.hysteresis_db[ref.cell] = value;
      break;
    case ParamId::Ttt:
      staged_params_.ttt_ms[ref.cell] = static_cast<int>(value);
      break;
    case ParamId::Cio:
      staged_params_.cio_db[{ref.cell, ref.neighbor}] = value;
      break;
    case ParamId::TxPower:
      staged_tx_dbm_[ref.cell] = value;
      break;
  }
  return {ApplyResult::Status::Applied, old_value};
}

double Simulator::read_param(const ParamRef& ref) const {
  switch (ref.param) {
    case ParamId::Hysteresis:
      return staged_params_.hysteresis_db[ref.cell];
    case ParamId::Ttt:
      return static_cast<double>(staged_params_.ttt_ms[ref.cell]);
    case ParamId::Cio:
      return staged_params_.cio(ref.cell, ref.neighbor);
    case ParamId::TxPower:
      return staged_tx_dbm_[ref.cell];
  }
  return 0.0;
}

std::vector<double> Simulator::loads() const {
  std::vector<double> result(cells_.size());
  for (std::size_t c = 0; c < cells_.size(); ++c) result[c] = cells_[c].load();
  return result;
}

int Simulator::outage_count() const {
  int count = 0;
  for (const auto& ue : ues_) count += ue.serving_cell == kNoCell ? 1 : 0;
  return count;
}

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::Handover: return "Handover";
    case EventKind::PingPongHandover: return "PingPongHandover";
    case EventKind::TooLateHo: return "TooLateHo";
    case EventKind::TooEarlyHo: return "TooEarlyHo";
    case EventKind::Rlf: return "Rlf";
    case EventKind::CallBlock: return "CallBlock";
  }
  return "?";
}

}  // namespace riclab::sim
