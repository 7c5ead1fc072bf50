#pragma once

#include <vector>

#include "riclab/sim/types.hpp"

namespace riclab::sim {

struct KpiSample {
  Tick window_end_tick = 0;
  CellId cell_id = 0;
  double mean_load = 0.0;
  int call_blocks = 0;
  int rlf_count = 0;
  int ho_count = 0;      // includes ping-pong handovers
  int pingpong_count = 0;

  bool operator==(const KpiSample&) const = default;
};

// One closed KPI window: the per-cell samples, plus the per-cell handover
// attribution tallies that do not appear in the exported KPI schema but
// drive robustness policies.
struct KpiWindow {
  Tick window_start_tick = 0;  // inclusive
  Tick window_end_tick = 0;    // exclusive: covers [start, end)
  std::vector<KpiSample> samples;
  std::vector<int> toolate_count;
  std::vector<int> tooearly_count;
};

// Per-cell aggregation of an event span plus time-averaged loads.
// Events are attributed to the source (from) cell. `loads_by_tick` holds one
// per-cell load vector for every tick in the window; an empty span yields
// counts of zero and mean_load = current_loads.
KpiWindow collect_kpis(const std::vector<SimEvent>& events, Tick window_start_tick,
                       Tick window_end_tick,
                       const std::vector<std::vector<double>>& loads_by_tick,
                       const std::vector<double>& current_loads);

// Incremental form used by the engine: feed events and loads tick by tick,
// close windows on the boundary.
class KpiCollector {
 public:
  explicit KpiCollector(int cell_count) : cell_count_(cell_count) {}

  void on_event(const SimEvent& event);
  void on_tick_loads(const std::vector<double>& loads);
  KpiWindow close_window(Tick window_start_tick, Tick window_end_tick,
                         const std::vector<double>& current_loads);

 private:
  int cell_count_;
  std::vector<SimEvent> events_;
  std::vector<std::vector<double>> loads_by_tick_;
};

}  // namespace riclab::sim
