#pragma once

// Mean/standard-deviation anomaly detection over per-(cell, kpi) rolling
// baselines. Flagged samples are excluded from the baseline, so a KPI that
// jumps and stays up keeps flagging against its pre-jump history instead of
// absorbing the shift.

#include <deque>
#include <limits>
#include <map>
#include <set>
#include <vector>

#include "riclab/ric/ids.hpp"
#include "riclab/sim/kpi.hpp"

namespace riclab::detect {

using ric::CellId;
using ric::KpiId;
using ric::Tick;

struct AdConfig {
  int baseline_window = 20;  // samples required before flagging starts
  double k = 3.0;            // z-score threshold
};

enum class Direction { Degradation, Improvement };

struct AnomalyFlag {
  Tick window_end_tick = 0;
  CellId cell_id = 0;
  KpiId kpi = KpiId::MeanLoad;
  double value = 0.0;
  double baseline_mean = 0.0;
  double baseline_std = 0.0;
  double z_score = 0.0;  // +infinity when baseline_std == 0 and value != mean
  Direction direction = Direction::Degradation;
};

class AnomalyDetector {
 public:
  explicit AnomalyDetector(AdConfig cfg) : cfg_(cfg) {}

  std::vector<AnomalyFlag> process_window(const sim::KpiWindow& window);

  // Scalar entry point used by calibration tests: one synthetic series.
  std::vector<AnomalyFlag> process_sample(CellId cell, KpiId kpi, double value,
                                          Tick window_end_tick);

  long windows_processed() const { return windows_processed_; }

 private:
  struct Baseline {
    std::deque<double> accepted;
    double mean() const;
    double stddev() const;  // sample (n-1) denominator
  };

  // Degradation polarity: counts are worse when higher; load is judged by
  // cross-cell imbalance, not by the level itself.
  Direction classify_direction(KpiId kpi, double value, double mean, double imbalance_now);
  void evaluate(Baseline& baseline, CellId cell, KpiId kpi, double value, Tick tick,
                double imbalance_now, std::vector<AnomalyFlag>& out);

  AdConfig cfg_;
  std::map<std::pair<CellId, KpiId>, Baseline> baselines_;
  Baseline imbalance_baseline_;
  long windows_processed_ = 0;
};

}  // namespace riclab::detect
