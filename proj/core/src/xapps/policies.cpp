#include "riclab/xapps/policies.hpp"

#include <algorithm>
#include <cmath>

namespace riclab::xapps {

using ric::KpiId;
using ric::ParamId;
using ric::Target;

MlbXApp::MlbXApp(MlbConfig cfg, std::vector<std::vector<ric::CellId>> neighbors,
                 std::string xapp_id)
    : cfg_(cfg), neighbors_(std::move(neighbors)) {
  descriptor_.xapp_id = std::move(xapp_id);
  descriptor_.declared_params = {ParamId::Cio};
  descriptor_.declared_impacts = {KpiId::MeanLoad, KpiId::HoCount, KpiId::PingpongCount};
}

std::vector<ActionRequest> MlbXApp::decide(const sim::KpiWindow& window) {
  std::vector<ActionRequest> actions;
  if (window.samples.empty()) return actions;

  // Most-loaded cell, ties to the lowest id.
  int hot = 0;
  for (int c = 1; c < static_cast<int>(window.samples.size()); ++c) {
    if (window.samples[c].mean_load > window.samples[hot].mean_load) hot = c;
  }
  if (hot >= static_cast<int>(neighbors_.size()) || neighbors_[hot].empty()) return actions;

  // Its least-loaded neighbor.
  ric::CellId cool = neighbors_[hot][0];
  for (const ric::CellId n : neighbors_[hot]) {
    if (window.samples[n].mean_load < window.samples[cool].mean_load) cool = n;
  }
  if (window.samples[hot].mean_load - window.samples[cool].mean_load <=
      cfg_.load_imbalance_threshold) {
    return actions;
  }

  // Make the cool neighbor attractive from the hot cell and unattractive the
  // other way. Steps already clamped away are suppressed rather than
  // submitted as no-ops.
  auto& forward = cio_memory_[{hot, cool}];
  const double forward_next = std::min(forward + cfg_.cio_step_db, sim::kCioMaxDb);
  if (forward_next != forward) {
    forward = forward_next;
    actions.push_back({Target::for_pair(hot, cool), ParamId::Cio, forward_next});
  }
  auto& reverse = cio_memory_[{cool, hot}];
  const double reverse_next = std::max(reverse - cfg_.cio_step_db, sim::kCioMinDb);
  if (reverse_next != reverse) {
    reverse = reverse_next;
    actions.push_back({Target::for_pair(cool, hot), ParamId::Cio, reverse_next});
  }
  return actions;
}

MroXApp::MroXApp(MroConfig cfg, std::vector<double> initial_hysteresis_db,
                 std::vector<int> initial_ttt_ms, std::string xapp_id)
    : cfg_(cfg), hysteresis_db_(std::move(initial_hysteresis_db)) {
  ttt_index_.reserve(initial_ttt_ms.size());
  for (const int ms : initial_ttt_ms) {
    const int idx = sim::ttt_index(ms);
    ttt_index_.push_back(idx < 0 ? 0 : idx);
  }
  descriptor_.xapp_id = std::move(xapp_id);
  descriptor_.declared_params = {ParamId::Hysteresis, ParamId::Ttt};
  descriptor_.declared_impacts = {KpiId::RlfCount, KpiId::HoCount, KpiId::PingpongCount};
}

std::vector<ActionRequest> MroXApp::decide(const sim::KpiWindow& window) {
  std::vector<ActionRequest> actions;
  const int max_ttt_index = static_cast<int>(sim::kTttValuesMs.size()) - 1;

  for (const auto& sample : window.samples) {
    const int cell = sample.cell_id;
    if (cell < 0 || cell >= static_cast<int>(hysteresis_db_.size())) continue;

    const bool pingpong_hot = sample.pingpong_count > cfg_.pingpong_rate_threshold;
    const bool toolate_rlf =
        sample.rlf_count > cfg_.rlf_threshold &&
        cell < static_cast<int>(window.toolate_count.size()) && window.toolate_count[cell] > 0;

    // Ping-pong correction wins when both fire in the same window.
    if (pingpong_hot) {
      if (hysteresis_db_[cell] < sim::kHysteresisMaxDb) {
        hysteresis_db_[cell] =
            std::min(hysteresis_db_[cell] + cfg_.h_step_db, sim::kHysteresisMaxDb);
        actions.push_back({Target::for_cell(cell), ParamId::Hysteresis, hysteresis_db_[cell]});
      } else if (ttt_index_[cell] < max_ttt_index) {
        ttt_index_[cell] = std::min(ttt_index_[cell] + cfg_.ttt_step, max_ttt_index);
        actions.push_back({Target::for_cell(cell), ParamId::Ttt,
                           static_cast<double>(sim::kTttValuesMs[ttt_index_[cell]])});
      }
    } else if (toolate_rlf) {
      if (hysteresis_db_[cell] > sim::kHysteresisMinDb) {
        hysteresis_db_[cell] =
            std::max(hysteresis_db_[cell] - cfg_.h_step_db, sim::kHysteresisMinDb);
        actions.push_back({Target::for_cell(cell), ParamId::Hysteresis, hysteresis_db_[cell]});
      } else if (ttt_index_[cell] > 0) {
        ttt_index_[cell] = std::max(ttt_index_[cell] - cfg_.ttt_step, 0);
        actions.push_back({Target::for_cell(cell), ParamId::Ttt,
                           static_cast<double>(sim::kTttValuesMs[ttt_index_[cell]])});
      }
    }
  }
  return actions;
}

StealthPowerXApp::StealthPowerXApp(StealthConfig cfg, std::string xapp_id) : cfg_(cfg) {
  descriptor_.xapp_id = std::move(xapp_id);
  descriptor_.declared_params = {ParamId::TxPower};
  descriptor_.declared_impacts = {KpiId::MeanLoad};  // deliberately incomplete
}

std::vector<ActionRequest> StealthPowerXApp::decide(const sim::KpiWindow& window) {
  (void)window;
  const long w = window_index_++;
  if (cfg_.epoch_windows <= 0) return {};
  const long epoch = w / cfg_.epoch_windows;
  const bool attacking = (epoch % 2) == 1;  // first epoch is quiet
  if (attacking) {
    // Re-asserted every window while the attack epoch lasts.
    return {{Target::for_cell(cfg_.victim_cell), ParamId::TxPower,
             cfg_.base_tx_dbm - cfg_.power_step_db}};
  }
  const bool epoch_start = (w % cfg_.epoch_windows) == 0;
  if (epoch_start && epoch > 0) {
    return {{Target::for_cell(cfg_.victim_cell), ParamId::TxPower, cfg_.base_tx_dbm}};
  }
  return {};
}

InjectorXApp::InjectorXApp(InjectorConfig cfg, std::set<ric::KpiId> declared_impacts)
    : cfg_(std::move(cfg)) {
  descriptor_.xapp_id = cfg_.xapp_id;
  descriptor_.declared_params = {cfg_.param};
  descriptor_.declared_impacts = std::move(declared_impacts);
}

std::vector<ActionRequest> InjectorXApp::decide(const sim::KpiWindow& window) {
  (void)window;
  const long w = window_index_++;
  if (cfg_.period_windows <= 0) return {};
  if ((w % cfg_.period_windows) != cfg_.phase % cfg_.period_windows) return {};
  return {{cfg_.target, cfg_.param, cfg_.value}};
}

}  // namespace riclab::xapps
