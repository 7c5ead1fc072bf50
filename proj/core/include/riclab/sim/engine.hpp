#pragma once

// Deterministic discrete-time radio simulator: cells, moving UEs, A3-style
// handovers with hysteresis/TTT/CIO, radio-link failures, call blocking.
// Identical (config, seed) replays tick-for-tick identically.

#include <cstdint>
#include <vector>

#include "riclab/sim/mobility.hpp"
#include "riclab/sim/radio.hpp"
#include "riclab/sim/topology.hpp"
#include "riclab/sim/types.hpp"

namespace riclab::sim {

enum class ParamId { Hysteresis, Ttt, Cio, TxPower };

// Addresses one settable parameter: Cio is pair-scoped (cell -> neighbor),
// the rest are cell-scoped.
struct ParamRef {
  ParamId param = ParamId::Hysteresis;
  CellId cell = 0;
  CellId neighbor = kNoCell;
};

struct ApplyResult {
  enum class Status { Applied, OutOfRange, UnknownTarget };
  Status status = Status::Applied;
  double old_value = 0.0;

  bool applied() const { return status == Status::Applied; }
};

struct EngineConfig {
  TopologyConfig topology;
  MobilityConfig mobility;
  RadioConfig radio;
  int ue_count = 50;
  int tick_ms = 100;
  int t_pp_ms = 2000;
  int t_early_ms = 500;
  double default_hysteresis_db = 3.0;
  int default_ttt_ms = 100;
  std::uint64_t seed = 1;
};

class Simulator {
 public:
  explicit Simulator(const EngineConfig& cfg);

  // Advance one tick: commit staged parameters, move UEs, refresh RSRP,
  // reattach outage UEs, run RLF checks, evaluate A3, in that order.
  // Returns the events of this tick.
  std::vector<SimEvent> step();

  // Staged write; takes effect at the next tick boundary. Out-of-range or
  // unknown targets are rejected without state change.
  ApplyResult apply_param_change(const ParamRef& ref, double value);

  // Latest staged value (what a subsequent read-modify-write would see).
  double read_param(const ParamRef& ref) const;

  Tick tick() const { return tick_; }
  int tick_ms() const { return cfg_.tick_ms; }
  const EngineConfig& config() const { return cfg_; }
  const std::vector<CellState>& cells() const { return cells_; }
  const std::vector<UeState>& ues() const { return ues_; }
  const std::vector<std::vector<CellId>>& neighbors() const { return neighbors_; }
  std::vector<double> loads() const;
  int outage_count() const;

  // Per-tick capture of the inputs the A3 rule saw; used by replay oracles.
  struct TickTrace {
    Tick tick = 0;
    HandoverParams params;
    std::vector<double> tx_power_dbm;
    std::vector<std::vector<double>> rsrp;     // [ue][cell]
    std::vector<CellId> serving_before_a3;     // post-reattach, post-RLF
  };
  void enable_tick_trace(bool on) { trace_enabled_ = on; }
  const std::vector<TickTrace>& tick_trace() const { return trace_; }

 private:
  void commit_staged();
  void refresh_rsrp();
  void attach_initial();
  void reattach_outage();
  void run_rlf_checks(std::vector<SimEvent>& events);
  void run_a3(std::vector<SimEvent>& events);
  CellId strongest_cell(const UeState& ue, CellId exclude = kNoCell) const;
  bool param_in_range(ParamId param, double value) const;

  EngineConfig cfg_;
  std::vector<CellState> cells_;
  std::vector<UeState> ues_;
  std::vector<std::vector<CellId>> neighbors_;
  MobilityModel mobility_;
  ShadowingField shadowing_;

  HandoverParams staged_params_;
  HandoverParams active_params_;
  std::vector<double> staged_tx_dbm_;

  Tick tick_ = 0;
  bool trace_enabled_ = false;
  std::vector<TickTrace> trace_;
};

}  // namespace riclab::sim
