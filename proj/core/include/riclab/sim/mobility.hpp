#pragma once

// UE mobility: random-waypoint inside the bounding box (seeded), or a
// scripted straight-line mode whose trajectories depend only on the UE
// index. The scripted mode exists so oracle tests can vary the seed or
// handover parameters without changing where anybody walks.

#include <cstdint>
#include <vector>

#include "riclab/sim/topology.hpp"
#include "riclab/sim/types.hpp"
#include "riclab/util/rng.hpp"

namespace riclab::sim {

enum class MobilityMode { RandomWaypoint, Scripted };

struct MobilityConfig {
  MobilityMode mode = MobilityMode::RandomWaypoint;
  double speed_min_mps = 1.0;
  double speed_max_mps = 10.0;
  // Shrinks the roaming box around its center; 1.0 roams the full
  // topology extent, smaller values concentrate UEs on the inner sites.
  double box_scale = 1.0;
  // Optional hotspot: the first `hotspot_ue_count` UEs start near and roam
  // around `hotspot_cell` within `hotspot_radius_m`.
  int hotspot_ue_count = 0;
  CellId hotspot_cell = 0;
  double hotspot_radius_m = 200.0;
};

class MobilityModel {
 public:
  MobilityModel(MobilityConfig cfg, BoundingBox box, std::vector<CellState> const& cells,
                std::uint64_t scenario_seed);

  // Initial position/velocity for ue_id; fills the UE's mobility scratch.
  void place(UeState& ue);

  // Advance one tick. Reflects at the bounding box in scripted mode; the
  // random-waypoint walk stays inside by construction.
  void move(UeState& ue, double tick_seconds);

 private:
  bool in_hotspot(UeId ue) const { return ue < cfg_.hotspot_ue_count; }
  BoundingBox roam_box(UeId ue) const;
  void pick_waypoint(UeState& ue);

  MobilityConfig cfg_;
  BoundingBox box_;
  Vec2 hotspot_center_;
  std::vector<util::Rng> streams_;  // one per UE, lazily grown
  std::uint64_t seed_;
};

}  // namespace riclab::sim
