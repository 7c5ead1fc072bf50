#include "riclab/sim/mobility.hpp"

#include <cmath>

namespace riclab::sim {

MobilityModel::MobilityModel(MobilityConfig cfg, BoundingBox box,
                             std::vector<CellState> const& cells, std::uint64_t scenario_seed)
    : cfg_(cfg), box_(box), seed_(scenario_seed) {
  if (cfg_.box_scale > 0.0 && cfg_.box_scale < 1.0) {
    const double cx = 0.5 * (box_.min_x + box_.max_x);
    const double cy = 0.5 * (box_.min_y + box_.max_y);
    const double hw = 0.5 * box_.width() * cfg_.box_scale;
    const double hh = 0.5 * box_.height() * cfg_.box_scale;
    box_ = {cx - hw, cy - hh, cx + hw, cy + hh};
  }
  if (cfg_.hotspot_ue_count > 0 && cfg_.hotspot_cell >= 0 &&
      cfg_.hotspot_cell < static_cast<CellId>(cells.size())) {
    hotspot_center_ = cells[cfg_.hotspot_cell].position;
  } else {
    cfg_.hotspot_ue_count = 0;
  }
}

BoundingBox MobilityModel::roam_box(UeId ue) const {
  if (!in_hotspot(ue)) return box_;
  BoundingBox hot{hotspot_center_.x - cfg_.hotspot_radius_m,
                  hotspot_center_.y - cfg_.hotspot_radius_m,
                  hotspot_center_.x + cfg_.hotspot_radius_m,
                  hotspot_center_.y + cfg_.hotspot_radius_m};
  hot.min_x = std::max(hot.min_x, box_.min_x);
  hot.min_y = std::max(hot.min_y, box_.min_y);
  hot.max_x = std::min(hot.max_x, box_.max_x);
  hot.max_y = std::min(hot.max_y, box_.max_y);
  return hot;
}

void MobilityModel::place(UeState& ue) {
  while (static_cast<std::size_t>(ue.ue_id) >= streams_.size()) {
    streams_.emplace_back(
        util::derive_seed(seed_, 0x3072ULL, static_cast<int>(streams_.size())));
  }
  const BoundingBox roam = roam_box(ue.ue_id);
  if (cfg_.mode == MobilityMode::RandomWaypoint) {
    auto& rng = streams_[ue.ue_id];
    ue.position = {rng.uniform(roam.min_x, roam.max_x), rng.uniform(roam.min_y, roam.max_y)};
    ue.velocity = {0.0, 0.0};
    ue.has_waypoint = false;
    pick_waypoint(ue);
    return;
  }

  // Scripted: lattice start positions and a heading that depends only on
  // the UE index, so two runs with different seeds share trajectories.
  const int idx = ue.ue_id;
  const int cols = 8;
  const double fx = ((idx % cols) + 0.5) / cols;
  const double fy = ((idx / cols) % cols + 0.5) / cols;
  ue.position = {roam.min_x + fx * roam.width(), roam.min_y + fy * roam.height()};
  const double speed = 0.5 * (cfg_.speed_min_mps + cfg_.speed_max_mps);
  constexpr double golden_angle = 2.399963229728653;
  const double heading = idx * golden_angle;
  ue.velocity = {speed * std::cos(heading), speed * std::sin(heading)};
  ue.has_waypoint = false;
}

void MobilityModel::pick_waypoint(UeState& ue) {
  auto& rng = streams_[ue.ue_id];
  const BoundingBox roam = roam_box(ue.ue_id);
  ue.waypoint = {rng.uniform(roam.min_x, roam.max_x), rng.uniform(roam.min_y, roam.max_y)};
  ue.waypoint_speed = rng.uniform(cfg_.speed_min_mps, cfg_.speed_max_mps);
  ue.has_waypoint = true;
}

void MobilityModel::move(UeState& ue, double tick_seconds) {
  if (cfg_.mode == MobilityMode::RandomWaypoint) {
    double budget = ue.waypoint_speed * tick_seconds;
    // Walk toward the waypoint, chaining to the next one on arrival.
    for (int hop = 0; budget > 0.0 && hop < 16; ++hop) {
      const double dist = distance(ue.position, ue.waypoint);
      if (dist <= budget) {
        ue.position = ue.waypoint;
        budget -= dist;
        pick_waypoint(ue);
        if (ue.waypoint_speed <= 0.0) break;
      } else {
        const double scale = budget / dist;
        ue.velocity = {(ue.waypoint.x - ue.position.x) / dist * ue.waypoint_speed,
                       (ue.waypoint.y - ue.position.y) / dist * ue.waypoint_speed};
        ue.position.x += (ue.waypoint.x - ue.position.x) * scale;
        ue.position.y += (ue.waypoint.y - ue.position.y) * scale;
        budget = 0.0;
      }
    }
    return;
  }

  // Scripted straight line with reflecting box walls.
  ue.position.x += ue.velocity.x * tick_seconds;
  ue.position.y += ue.velocity.y * tick_seconds;
  if (ue.position.x < box_.min_x) {
    ue.position.x = 2.0 * box_.min_x - ue.position.x;
    ue.velocity.x = -ue.velocity.x;
  } else if (ue.position.x > box_.max_x) {
    ue.position.x = 2.0 * box_.max_x - ue.position.x;
    ue.velocity.x = -ue.velocity.x;
  }
  if (ue.position.y < box_.min_y) {
    ue.position.y = 2.0 * box_.min_y - ue.position.y;
    ue.velocity.y = -ue.velocity.y;
  } else if (ue.position.y > box_.max_y) {
    ue.position.y = 2.0 * box_.max_y - ue.position.y;
    ue.velocity.y = -ue.velocity.y;
  }
}

}  // namespace riclab::sim
