#pragma once

// Conflict classification over the xNIB window and the anomaly flags:
//   Direct   -- two or more xApps operated the same (target, param).
//   Indirect -- disjoint parameters, but every implicated xApp declared the
//               degraded KPI.
//   Implicit -- disjoint parameters and at least one implicated xApp never
//               declared the degraded KPI; implication comes from lagged
//               action/KPI correlation instead of declarations.
// The three cases partition: each emitted report satisfies exactly one.

#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "riclab/detect/anomaly.hpp"
#include "riclab/ric/descriptor.hpp"
#include "riclab/ric/ledger.hpp"

namespace riclab::detect {

using ric::ActionRecord;
using ric::ParamId;
using ric::Target;
using ric::XAppDescriptor;

using ParamKey = std::pair<Target, ParamId>;
using ParamKeySet = std::set<ParamKey>;

enum class ConflictType { Direct, Indirect, Implicit };

const char* to_string(ConflictType type);

struct ConflictReport {
  Tick detected_at_tick = 0;
  ConflictType conflict_type = ConflictType::Direct;
  std::set<std::string> xapps;
  std::map<std::string, ParamKeySet> parameters;
  std::set<KpiId> impacted_kpis;
  std::map<std::string, double> evidence;  // implicit only
  std::vector<AnomalyFlag> anomalies;      // supporting flags, not exported
};

void export_jsonl(const std::vector<ConflictReport>& reports, std::ostream& out);

// Direct detection runs on the ledger window alone, before any anomaly
// check: contention is visible from the operations themselves. Applied and
// BlockedByPriority records both count as operating the parameter.
std::vector<ConflictReport> detect_direct(const std::vector<ActionRecord>& window_records,
                                          const std::vector<XAppDescriptor>& descriptors,
                                          Tick detected_at_tick);

// Indirect detection: anomaly-triggered. Only Applied records matter (a
// blocked write cannot have caused the degradation).
std::vector<ConflictReport> detect_indirect(const std::vector<AnomalyFlag>& degradation_flags,
                                            const std::vector<ActionRecord>& window_records,
                                            const std::vector<XAppDescriptor>& descriptors,
                                            Tick detected_at_tick);

// Evidence scorer behind the implicit detector. The baseline is lagged
// Pearson correlation of binary action/degradation series; an MDP or
// Bayesian scorer can replace it without touching the detector.
class EvidenceScorer {
 public:
  virtual ~EvidenceScorer() = default;
  // Series are window-indexed, oldest first, equal length. Returns the best
  // score over lags 0..lag_max, or nullopt when every lag is degenerate.
  virtual std::optional<double> score(const std::vector<char>& actions,
                                      const std::vector<char>& degradations,
                                      int lag_max) const = 0;
};

class LaggedCorrelationScorer final : public EvidenceScorer {
 public:
  std::optional<double> score(const std::vector<char>& actions,
                              const std::vector<char>& degradations,
                              int lag_max) const override;
};

struct ImplicitConfig {
  int lag_max = 10;   // windows
  double tau = 0.6;   // implication threshold on the evidence score
};

// Per-window history the implicit detector correlates over. Index = window
// number, oldest first; the last entry is the window under analysis.
struct WindowHistory {
  std::vector<std::map<std::string, ParamKeySet>> applied_by_window;
  std::vector<std::set<std::pair<CellId, KpiId>>> degraded_by_window;
};

std::vector<ConflictReport> detect_implicit(
    const std::vector<AnomalyFlag>& uncovered_degradation_flags, const WindowHistory& history,
    const std::vector<XAppDescriptor>& descriptors, const ImplicitConfig& cfg,
    const EvidenceScorer& scorer, Tick detected_at_tick);

struct DetectorConfig {
  AdConfig ad;
  ImplicitConfig implicit;
};

// The KPIMON -> AD -> CD pipeline driven window by window. Owns the anomaly
// detector and the histories the implicit stage needs.
class ConflictDetector {
 public:
  explicit ConflictDetector(DetectorConfig cfg);

  std::vector<ConflictReport> process_window(const sim::KpiWindow& window,
                                             const std::vector<ActionRecord>& window_records,
                                             const std::vector<XAppDescriptor>& descriptors);

  const AnomalyDetector& anomaly_detector() const { return ad_; }
  long insufficient_history_count() const { return insufficient_history_; }

 private:
  DetectorConfig cfg_;
  AnomalyDetector ad_;
  LaggedCorrelationScorer scorer_;
  WindowHistory history_;
  long insufficient_history_ = 0;
};

}  // namespace riclab::detect
