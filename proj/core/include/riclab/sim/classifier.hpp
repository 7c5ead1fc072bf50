#pragma once

#include "riclab/sim/types.hpp"

namespace riclab::sim {

enum class HoClass { Normal, PingPong, TooEarly };

// Immediate classification of a handover that is about to execute:
// PingPong iff the UE returns to its previous serving cell and the hop away
// happened less than t_pp ago. TooEarly can only be assigned retroactively
// (see is_too_early).
HoClass classify_handover(CellId previous_serving, Tick previous_handover_tick, CellId target,
                          Tick now, int tick_ms, int t_pp_ms);

// A radio-link failure within t_early of the last handover marks that
// handover as too early.
bool is_too_early(Tick handover_tick, Tick rlf_tick, int tick_ms, int t_early_ms);

}  // namespace riclab::sim
