#include "riclab/sim/kpi.hpp"

namespace riclab::sim {

KpiWindow collect_kpis(const std::vector<SimEvent>& events, Tick window_start_tick,
                       Tick window_end_tick,
                       const std::vector<std::vector<double>>& loads_by_tick,
                       const std::vector<double>& current_loads) {
  const int cell_count = static_cast<int>(current_loads.size());
  KpiWindow window;
  window.window_start_tick = window_start_tick;
  window.window_end_tick = window_end_tick;
  window.samples.resize(cell_count);
  window.toolate_count.assign(cell_count, 0);
  window.tooearly_count.assign(cell_count, 0);

  for (int c = 0; c < cell_count; ++c) {
    auto& s = window.samples[c];
    s.window_end_tick = window_end_tick;
    s.cell_id = c;
    if (loads_by_tick.empty()) {
      s.mean_load = current_loads[c];
    } else {
      double sum = 0.0;
      for (const auto& tick_loads : loads_by_tick) sum += tick_loads[c];
      s.mean_load = sum / static_cast<double>(loads_by_tick.size());
    }
  }

  for (const auto& event : events) {
    if (event.tick < window_start_tick || event.tick >= window_end_tick) continue;
    if (event.from_cell < 0 || event.from_cell >= cell_count) continue;
    auto& s = window.samples[event.from_cell];
    switch (event.kind) {
      case EventKind::Handover:
        s.ho_count += 1;
        break;
      case EventKind::PingPongHandover:
        s.ho_count += 1;
        s.pingpong_count += 1;
        break;
      case EventKind::Rlf:
        s.rlf_count += 1;
        break;
      case EventKind::CallBlock:
        s.call_blocks += 1;
        break;
      case EventKind::TooLateHo:
        window.toolate_count[event.from_cell] += 1;
        break;
      case EventKind::TooEarlyHo:
        window.tooearly_count[event.from_cell] += 1;
        break;
    }
  }
  return window;
}

void KpiCollector::on_event(const SimEvent& event) { events_.push_back(event); }

void KpiCollector::on_tick_loads(const std::vector<double>& loads) {
  loads_by_tick_.push_back(loads);
}

KpiWindow KpiCollector::close_window(Tick window_start_tick, Tick window_end_tick,
                                     const std::vector<double>& current_loads) {
  KpiWindow window =
      collect_kpis(events_, window_start_tick, window_end_tick, loads_by_tick_, current_loads);
  events_.clear();
  loads_by_tick_.clear();
  return window;
}

}  // namespace riclab::sim
