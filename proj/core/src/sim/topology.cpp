#include "riclab/sim/topology.hpp"

#include <cmath>

namespace riclab::sim {
namespace {

// Axial hex coordinates -> cartesian with unit inter-site distance.
Vec2 hex_to_xy(int q, int r) {
  return {q + r * 0.5, r * std::sqrt(3.0) * 0.5};
}

}  // namespace

std::vector<CellState> make_hex_topology(const TopologyConfig& cfg) {
  // Spiral enumeration of axial coordinates: origin, then each ring walked
  // in a fixed direction order, so cell ids are stable for any count.
  static constexpr int dirs[6][2] = {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
  std::vector<std::pair<int, int>> coords;
  coords.emplace_back(0, 0);
  for (int ring = 1; static_cast<int>(coords.size()) < cfg.cell_count; ++ring) {
    int q = ring, r = 0;  // start east of center
    for (int side = 0; side < 6 && static_cast<int>(coords.size()) < cfg.cell_count; ++side) {
      for (int i = 0; i < ring && static_cast<int>(coords.size()) < cfg.cell_count; ++i) {
        coords.emplace_back(q, r);
        q += dirs[(side + 2) % 6][0];
        r += dirs[(side + 2) % 6][1];
      }
    }
  }

  std::vector<CellState> cells(cfg.cell_count);
  for (int i = 0; i < cfg.cell_count; ++i) {
    const Vec2 unit = hex_to_xy(coords[i].first, coords[i].second);
    cells[i].cell_id = i;
    cells[i].position = {unit.x * cfg.spacing_m, unit.y * cfg.spacing_m};
    cells[i].capacity = cfg.capacity;
    cells[i].tx_power_dbm = cfg.tx_power_dbm;
  }
  return cells;
}

BoundingBox bounding_box(const std::vector<CellState>& cells, double spacing_m) {
  BoundingBox box;
  if (cells.empty()) return box;
  box.min_x = box.max_x = cells[0].position.x;
  box.min_y = box.max_y = cells[0].position.y;
  for (const auto& cell : cells) {
    box.min_x = std::min(box.min_x, cell.position.x);
    box.max_x = std::max(box.max_x, cell.position.x);
    box.min_y = std::min(box.min_y, cell.position.y);
    box.max_y = std::max(box.max_y, cell.position.y);
  }
  const double pad = spacing_m * 0.25;
  box.min_x -= pad;
  box.max_x += pad;
  box.min_y -= pad;
  box.max_y += pad;
  return box;
}

std::vector<std::vector<CellId>> neighbor_lists(const std::vector<CellState>& cells,
                                                double spacing_m) {
  const double limit = 1.5 * spacing_m;
  std::vector<std::vector<CellId>> neighbors(cells.size());
  for (std::size_t a = 0; a < cells.size(); ++a) {
    for (std::size_t b = 0; b < cells.size(); ++b) {
      if (a == b) continue;
      if (distance(cells[a].position, cells[b].position) <= limit) {
        neighbors[a].push_back(static_cast<CellId>(b));
      }
    }
  }
  return neighbors;
}

}  // namespace riclab::sim
