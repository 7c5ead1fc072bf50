#pragma once

// The competing control policies of the case study. MLB shifts handover
// boundaries via CIO to even out load; MRO tunes hysteresis/TTT to keep
// links robust. Each optimizes its own objective on the same boundary,
// which is the whole point of the exercise. The stealth power policy
// under-declares its impact to manufacture implicit conflicts, and the
// injector replays scripted writes for direct-conflict scenarios.

#include <map>
#include <utility>
#include <vector>

#include "riclab/xapps/xapp.hpp"

namespace riclab::xapps {

struct MlbConfig {
  double load_imbalance_threshold = 0.2;
  double cio_step_db = 2.0;
};

class MlbXApp : public XApp {
 public:
  MlbXApp(MlbConfig cfg, std::vector<std::vector<ric::CellId>> neighbors,
          std::string xapp_id = "mlb");

  const ric::XAppDescriptor& descriptor() const override { return descriptor_; }
  std::vector<ActionRequest> decide(const sim::KpiWindow& window) override;

 private:
  MlbConfig cfg_;
  std::vector<std::vector<ric::CellId>> neighbors_;
  std::map<std::pair<ric::CellId, ric::CellId>, double> cio_memory_;
  ric::XAppDescriptor descriptor_;
};

struct MroConfig {
  double pingpong_rate_threshold = 2.0;  // ping-pongs per window
  double rlf_threshold = 0.0;            // RLFs per window, strict >
  double h_step_db = 1.0;
  int ttt_step = 1;                      // index steps in the TTT value set
};

class MroXApp : public XApp {
 public:
  MroXApp(MroConfig cfg, std::vector<double> initial_hysteresis_db,
          std::vector<int> initial_ttt_ms, std::string xapp_id = "mro");

  const ric::XAppDescriptor& descriptor() const override { return descriptor_; }
  std::vector<ActionRequest> decide(const sim::KpiWindow& window) override;

 private:
  MroConfig cfg_;
  std::vector<double> hysteresis_db_;
  std::vector<int> ttt_index_;
  ric::XAppDescriptor descriptor_;
};

struct StealthConfig {
  ric::CellId victim_cell = 0;
  double power_step_db = 6.0;
  int epoch_windows = 50;   // attack/rest alternation period
  double base_tx_dbm = 30.0;
};

// Declares impact on mean_load only, then drives the victim's tx power
// down, raising that cell's RLF count -- an impact it never declared.
class StealthPowerXApp : public XApp {
 public:
  explicit StealthPowerXApp(StealthConfig cfg, std::string xapp_id = "stealth-power");

  const ric::XAppDescriptor& descriptor() const override { return descriptor_; }
  std::vector<ActionRequest> decide(const sim::KpiWindow& window) override;

 private:
  StealthConfig cfg_;
  long window_index_ = 0;
  ric::XAppDescriptor descriptor_;
};

struct InjectorConfig {
  std::string xapp_id = "injector";
  ric::Target target;
  ric::ParamId param = ric::ParamId::Cio;
  double value = 0.0;
  int period_windows = 1;
  int phase = 0;
};

// Replays a fixed write on a fixed cadence; two injectors aimed at the same
// (target, param) produce a textbook direct conflict.
class InjectorXApp : public XApp {
 public:
  explicit InjectorXApp(InjectorConfig cfg,
                        std::set<ric::KpiId> declared_impacts = {ric::KpiId::HoCount});

  const ric::XAppDescriptor& descriptor() const override { return descriptor_; }
  std::vector<ActionRequest> decide(const sim::KpiWindow& window) override;

 private:
  InjectorConfig cfg_;
  long window_index_ = 0;
  ric::XAppDescriptor descriptor_;
};

}  // namespace riclab::xapps
