#include "riclab/sim/classifier.hpp"

namespace riclab::sim {

HoClass classify_handover(CellId previous_serving, Tick previous_handover_tick, CellId target,
                          Tick now, int tick_ms, int t_pp_ms) {
  if (previous_serving == kNoCell || previous_handover_tick < 0) return HoClass::Normal;
  if (target != previous_serving) return HoClass::Normal;
  const Tick elapsed_ms = (now - previous_handover_tick) * tick_ms;
  return elapsed_ms < t_pp_ms ? HoClass::PingPong : HoClass::Normal;
}

bool is_too_early(Tick handover_tick, Tick rlf_tick, int tick_ms, int t_early_ms) {
  if (handover_tick < 0) return false;
  return (rlf_tick - handover_tick) * tick_ms <= t_early_ms;
}

}  // namespace riclab::sim
