#pragma once

#include <vector>

#include "riclab/sim/types.hpp"

namespace riclab::sim {

struct TopologyConfig {
  int cell_count = 19;
  double spacing_m = 500.0;     // inter-site distance
  int capacity = 16;            // per cell
  double tx_power_dbm = 30.0;   // per cell
};

struct BoundingBox {
  double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
  double width() const { return max_x - min_x; }
  double height() const { return max_y - min_y; }
};

// Hex-spiral site layout: cell 0 at the origin, then ring 1 (6 sites),
// ring 2 (12 sites), ... until cell_count sites are placed. 19 cells is
// exactly the center plus the first two rings.
std::vector<CellState> make_hex_topology(const TopologyConfig& cfg);

// Simulation area: topology extent padded by half the inter-site distance.
BoundingBox bounding_box(const std::vector<CellState>& cells, double spacing_m);

// Neighbor relation used by load-balancing policies: sites within
// 1.5 * spacing of each other.
std::vector<std::vector<CellId>> neighbor_lists(const std::vector<CellState>& cells,
                                                double spacing_m);

}  // namespace riclab::sim
