#include "riclab/detect/anomaly.hpp"

#include <cmath>

namespace riclab::detect {

double AnomalyDetector::Baseline::mean() const {
  if (accepted.empty()) return 0.0;
  double sum = 0.0;
  for (const double v : accepted) sum += v;
  return sum / static_cast<double>(accepted.size());
}

double AnomalyDetector::Baseline::stddev() const {
  if (accepted.size() < 2) return 0.0;
  const double m = mean();
  double sq = 0.0;
  for (const double v : accepted) sq += (v - m) * (v - m);
  return std::sqrt(sq / static_cast<double>(accepted.size() - 1));
}

Direction AnomalyDetector::classify_direction(KpiId kpi, double value, double mean,
                                              double imbalance_now) {
  if (kpi == KpiId::MeanLoad) {
    // Level shifts are not inherently bad; widening cross-cell imbalance is.
    return imbalance_now > imbalance_baseline_.mean() ? Direction::Degradation
                                                      : Direction::Improvement;
  }
  return value > mean ? Direction::Degradation : Direction::Improvement;
}

void AnomalyDetector::evaluate(Baseline& baseline, CellId cell, KpiId kpi, double value,
                               Tick tick, double imbalance_now,
                               std::vector<AnomalyFlag>& out) {
  const bool warm = static_cast<int>(baseline.accepted.size()) >= cfg_.baseline_window;
  bool flagged = false;
  if (warm) {
    const double mean = baseline.mean();
    const double std = baseline.stddev();
    double z = 0.0;
    if (std > 0.0) {
      z = std::abs(value - mean) / std;
    } else if (value != mean) {
      z = std::numeric_limits<double>::infinity();
    }
    if (z > cfg_.k) {
      flagged = true;
      out.push_back({tick, cell, kpi, value, mean, std, z,
                     classify_direction(kpi, value, mean, imbalance_now)});
    }
  }
  if (!flagged) {
    baseline.accepted.push_back(value);
    while (static_cast<int>(baseline.accepted.size()) > cfg_.baseline_window) {
      baseline.accepted.pop_front();
    }
  }
}

std::vector<AnomalyFlag> AnomalyDetector::process_window(const sim::KpiWindow& window) {
  std::vector<AnomalyFlag> flags;

  // Cross-cell load imbalance of this window, fed to the load polarity rule.
  double imbalance = 0.0;
  if (window.samples.size() > 1) {
    double sum = 0.0;
    for (const auto& s : window.samples) sum += s.mean_load;
    const double mean = sum / static_cast<double>(window.samples.size());
    double sq = 0.0;
    for (const auto& s : window.samples) sq += (s.mean_load - mean) * (s.mean_load - mean);
    imbalance = std::sqrt(sq / static_cast<double>(window.samples.size()));
  }

  for (const auto& sample : window.samples) {
    const Tick tick = sample.window_end_tick;
    evaluate(baselines_[{sample.cell_id, KpiId::MeanLoad}], sample.cell_id, KpiId::MeanLoad,
             sample.mean_load, tick, imbalance, flags);
    evaluate(baselines_[{sample.cell_id, KpiId::CallBlocks}], sample.cell_id,
             KpiId::CallBlocks, sample.call_blocks, tick, imbalance, flags);
    evaluate(baselines_[{sample.cell_id, KpiId::RlfCount}], sample.cell_id, KpiId::RlfCount,
             sample.rlf_count, tick, imbalance, flags);
    evaluate(baselines_[{sample.cell_id, KpiId::HoCount}], sample.cell_id, KpiId::HoCount,
             sample.ho_count, tick, imbalance, flags);
    evaluate(baselines_[{sample.cell_id, KpiId::PingpongCount}], sample.cell_id,
             KpiId::PingpongCount, sample.pingpong_count, tick, imbalance, flags);
  }

  imbalance_baseline_.accepted.push_back(imbalance);
  while (static_cast<int>(imbalance_baseline_.accepted.size()) > cfg_.baseline_window) {
    imbalance_baseline_.accepted.pop_front();
  }
  ++windows_processed_;
  return flags;
}

std::vector<AnomalyFlag> AnomalyDetector::process_sample(CellId cell, KpiId kpi, double value,
                                                         Tick window_end_tick) {
  std::vector<AnomalyFlag> flags;
  evaluate(baselines_[{cell, kpi}], cell, kpi, value, window_end_tick, 0.0, flags);
  return flags;
}

}  // namespace riclab::detect
