#pragma once

// Near-RT-RIC skeleton: the xApp registry and the single serialized action
// submission path. Every submission consults the mitigation gate, then the
// simulator's parameter surface, and lands in the xNIB ledger whatever the
// outcome.

#include <optional>
#include <string>
#include <vector>

#include "riclab/ric/descriptor.hpp"
#include "riclab/ric/ledger.hpp"
#include "riclab/ric/registry.hpp"
#include "riclab/sim/engine.hpp"

namespace riclab::ric {

// Mitigation hook consulted before any write reaches the simulator.
class ActionGate {
 public:
  virtual ~ActionGate() = default;
  virtual bool allows(const std::string& xapp_id, const Target& target, ParamId param,
                      Tick now) = 0;
};

enum class SubmitStatus {
  Applied,
  BlockedByPriority,
  RejectedOutOfRange,
  RejectedUnknownParam,
  RejectedUnknownTarget,
};

using XAppHandle = int;

class RicController {
 public:
  RicController(sim::Simulator& simulator, ParameterRegistry registry)
      : simulator_(&simulator), registry_(std::move(registry)) {}

  // nullptr disables mitigation (every submission passes the gate).
  void set_gate(ActionGate* gate) { gate_ = gate; }

  // Fails on duplicate xapp_id. Default priority is registration order
  // (earlier registration = higher precedence).
  std::optional<XAppHandle> register_xapp(XAppDescriptor descriptor);

  SubmitStatus submit_action(XAppHandle handle, const Target& target, ParamId param,
                             double value);

  const std::vector<XAppDescriptor>& descriptors() const { return descriptors_; }
  const XAppDescriptor* find(const std::string& xapp_id) const;
  const ActionLedger& ledger() const { return ledger_; }
  const ParameterRegistry& registry() const { return registry_; }

 private:
  sim::Simulator* simulator_;
  ParameterRegistry registry_;
  ActionGate* gate_ = nullptr;
  std::vector<XAppDescriptor> descriptors_;
  ActionLedger ledger_;
};

}  // namespace riclab::ric
