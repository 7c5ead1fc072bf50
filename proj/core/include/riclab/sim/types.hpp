#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace riclab::sim {

using CellId = int;
using UeId = int;
using Tick = std::int64_t;

constexpr CellId kNoCell = -1;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline double distance(const Vec2& a, const Vec2& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

struct CellState {
  CellId cell_id = 0;
  Vec2 position;
  double tx_power_dbm = 30.0;
  int capacity = 16;
  std::set<UeId> connected_ues;

  double load() const {
    return capacity > 0 ? static_cast<double>(connected_ues.size()) / capacity : 0.0;
  }
  bool at_capacity() const {
    return static_cast<int>(connected_ues.size()) >= capacity;
  }
};

struct UeState {
  UeId ue_id = 0;
  Vec2 position;
  Vec2 velocity;
  CellId serving_cell = kNoCell;  // kNoCell while in outage
  std::vector<double> rsrp_dbm;   // indexed by cell_id
  std::vector<int> a3_timer_ms;   // per candidate cell, capped at serving TTT
  CellId last_serving_cell = kNoCell;
  Tick last_handover_tick = -1;
  int rlf_timer_ms = 0;

  // Mobility scratch state (random-waypoint target, scripted heading).
  Vec2 waypoint;
  double waypoint_speed = 0.0;
  bool has_waypoint = false;

  // AR(1) shadowing state per cell, in dB.
  std::vector<double> shadow_db;
};

// The 3GPP-style discrete TTT domain, in ms.
inline constexpr std::array<int, 16> kTttValuesMs = {
    0, 40, 64, 80, 100, 128, 160, 256, 320, 480, 512, 640, 1024, 1280, 2560, 5120};

inline bool is_valid_ttt(int ms) {
  return std::find(kTttValuesMs.begin(), kTttValuesMs.end(), ms) != kTttValuesMs.end();
}

inline int ttt_index(int ms) {
  const auto it = std::find(kTttValuesMs.begin(), kTttValuesMs.end(), ms);
  return it == kTttValuesMs.end() ? -1 : static_cast<int>(it - kTttValuesMs.begin());
}

constexpr double kHysteresisMinDb = 0.0;
constexpr double kHysteresisMaxDb = 10.0;
constexpr double kCioMinDb = -6.0;
constexpr double kCioMaxDb = 6.0;
constexpr double kTxPowerMinDbm = 10.0;
constexpr double kTxPowerMaxDbm = 46.0;

// The contested control surface: per-cell hysteresis and TTT, per ordered
// cell pair CIO. Missing CIO entries read as 0 dB.
struct HandoverParams {
  std::vector<double> hysteresis_db;
  std::vector<int> ttt_ms;
  std::map<std::pair<CellId, CellId>, double> cio_db;

  double cio(CellId serving, CellId neighbor) const {
    const auto it = cio_db.find({serving, neighbor});
    return it == cio_db.end() ? 0.0 : it->second;
  }
};

enum class EventKind { Handover, PingPongHandover, TooLateHo, TooEarlyHo, Rlf, CallBlock };

const char* to_string(EventKind kind);

struct SimEvent {
  Tick tick = 0;
  EventKind kind = EventKind::Handover;
  UeId ue_id = 0;
  CellId from_cell = kNoCell;
  CellId to_cell = kNoCell;

  bool operator==(const SimEvent&) const = default;
};

struct RadioConfig {
  double pl0_db = 30.0;          // path loss at reference distance
  double ref_distance_m = 1.0;
  double pl_exponent = 3.5;
  double min_distance_m = 1.0;   // clamp below this
  double shadow_sigma_db = 4.0;
  double shadow_rho = 0.9;       // AR(1) smoothing per tick
  double rlf_floor_dbm = -100.0;
  int t_rlf_ms = 300;
};

}  // namespace riclab::sim
