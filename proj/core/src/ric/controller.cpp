#include "riclab/ric/controller.hpp"

namespace riclab::ric {

std::optional<XAppHandle> RicController::register_xapp(XAppDescriptor descriptor) {
  if (descriptor.xapp_id.empty() || descriptor.declared_params.empty()) return std::nullopt;
  if (find(descriptor.xapp_id) != nullptr) return std::nullopt;
  if (descriptor.priority < 0) descriptor.priority = static_cast<int>(descriptors_.size());
  descriptors_.push_back(std::move(descriptor));
  return static_cast<XAppHandle>(descriptors_.size()) - 1;
}

const XAppDescriptor* RicController::find(const std::string& xapp_id) const {
  for (const auto& descriptor : descriptors_) {
    if (descriptor.xapp_id == xapp_id) return &descriptor;
  }
  return nullptr;
}

SubmitStatus RicController::submit_action(XAppHandle handle, const Target& target,
                                          ParamId param, double value) {
  const auto& xapp = descriptors_.at(static_cast<std::size_t>(handle));
  const Tick now = simulator_->tick();

  const CellId n_cells = static_cast<CellId>(simulator_->cells().size());
  const bool target_known =
      target.cell >= 0 && target.cell < n_cells &&
      (!target.is_pair() || (target.neighbor >= 0 && target.neighbor < n_cells));
  const double old_value = target_known ? simulator_->read_param(target.ref(param)) : 0.0;

  ActionRecord record{now, xapp.xapp_id, target, param, old_value, value,
                      ActionOutcome::Rejected};

  if (!registry_.contains(param)) {
    ledger_.append(record);
    return SubmitStatus::RejectedUnknownParam;
  }
  if (registry_.spec(param).pair_scoped != target.is_pair()) {
    ledger_.append(record);
    return SubmitStatus::RejectedUnknownTarget;
  }
  if (gate_ != nullptr && !gate_->allows(xapp.xapp_id, target, param, now)) {
    record.outcome = ActionOutcome::BlockedByPriority;
    ledger_.append(record);
    return SubmitStatus::BlockedByPriority;
  }

  const auto result = simulator_->apply_param_change(target.ref(param), value);
  switch (result.status) {
    case sim::ApplyResult::Status::Applied:
      record.outcome = ActionOutcome::Applied;
      ledger_.append(record);
      return SubmitStatus::Applied;
    case sim::ApplyResult::Status::OutOfRange:
      ledger_.append(record);
      return SubmitStatus::RejectedOutOfRange;
    case sim::ApplyResult::Status::UnknownTarget:
      ledger_.append(record);
      return SubmitStatus::RejectedUnknownTarget;
  }
  ledger_.append(record);
  return SubmitStatus::RejectedUnknownTarget;
}

}  // namespace riclab::ric
