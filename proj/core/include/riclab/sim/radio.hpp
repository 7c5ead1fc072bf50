#pragma once

// Log-distance path loss with temporally smoothed lognormal shadowing.
// Shadowing is an independent AR(1) stream per (ue, cell), so the radio
// environment replays bit-identically for a fixed scenario seed.

#include <cstdint>
#include <vector>

#include "riclab/sim/types.hpp"
#include "riclab/util/rng.hpp"

namespace riclab::sim {

double path_loss_db(double distance_m, const RadioConfig& radio);

// rsrp = tx - PL(d) + shadow. Distance below radio.min_distance_m clamps.
double compute_rsrp(double tx_power_dbm, double distance_m, const RadioConfig& radio,
                    double shadow_db = 0.0);

// Per-(ue, cell) AR(1) shadowing processes. step() advances every stream by
// one tick and keeps the stationary marginal at shadow_sigma_db.
class ShadowingField {
 public:
  ShadowingField(int ue_count, int cell_count, const RadioConfig& radio,
                 std::uint64_t scenario_seed);

  void step();
  double shadow_db(UeId ue, CellId cell) const {
    return values_[static_cast<std::size_t>(ue) * cell_count_ + cell];
  }

 private:
  int cell_count_;
  double sigma_;
  double rho_;
  double innovation_scale_;  // sqrt(1 - rho^2) * sigma
  std::vector<util::Rng> streams_;
  std::vector<double> values_;
};

}  // namespace riclab::sim
