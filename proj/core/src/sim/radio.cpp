#include "riclab/sim/radio.hpp"

#include <cmath>

namespace riclab::sim {

double path_loss_db(double distance_m, const RadioConfig& radio) {
  const double d = std::max(distance_m, radio.min_distance_m);
  return radio.pl0_db + 10.0 * radio.pl_exponent * std::log10(d / radio.ref_distance_m);
}

double compute_rsrp(double tx_power_dbm, double distance_m, const RadioConfig& radio,
                    double shadow_db) {
  return tx_power_dbm - path_loss_db(distance_m, radio) + shadow_db;
}

ShadowingField::ShadowingField(int ue_count, int cell_count, const RadioConfig& radio,
                               std::uint64_t scenario_seed)
    : cell_count_(cell_count),
      sigma_(radio.shadow_sigma_db),
      rho_(radio.shadow_rho),
      innovation_scale_(std::sqrt(std::max(0.0, 1.0 - radio.shadow_rho * radio.shadow_rho)) *
                        radio.shadow_sigma_db) {
  streams_.reserve(static_cast<std::size_t>(ue_count) * cell_count);
  values_.resize(static_cast<std::size_t>(ue_count) * cell_count, 0.0);
  for (int ue = 0; ue < ue_count; ++ue) {
    for (int cell = 0; cell < cell_count; ++cell) {
      streams_.emplace_back(util::derive_seed(scenario_seed, 0x51adULL, ue, cell));
    }
  }
  // Draw the stationary initial value for each stream.
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] = sigma_ * streams_[i].next_gaussian();
  }
}

void ShadowingField::step() {
  if (sigma_ <= 0.0) return;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    values_[i] = rho_ * values_[i] + innovation_scale_ * streams_[i].next_gaussian();
  }
}

}  // namespace riclab::sim
