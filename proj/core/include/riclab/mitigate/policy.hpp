#pragma once

// Priority-based conflict mitigation: on a conflict report, every
// implicated xApp except the highest-priority one gets its contested
// (target, param) writes blocked for a cooldown. Blocking is per entry,
// not per xApp; nothing gets deregistered.

#include <optional>
#include <string>
#include <vector>

#include "riclab/detect/conflict.hpp"
#include "riclab/ric/controller.hpp"

namespace riclab::mitigate {

using detect::ConflictReport;
using ric::ParamId;
using ric::Target;
using ric::Tick;

struct BlockRule {
  std::string xapp_id;
  std::optional<Target> target;  // nullopt blocks the param on any target
  ParamId param = ParamId::Hysteresis;
  Tick expires_at_tick = 0;      // active while now < expires_at_tick

  bool covers(const std::string& xapp, const Target& t, ParamId p, Tick now) const {
    if (now >= expires_at_tick) return false;
    if (xapp_id != xapp || param != p) return false;
    return !target || *target == t;
  }
};

struct PriorityPolicy {
  std::vector<std::string> ordering;  // index 0 = highest precedence
  std::vector<BlockRule> active_blocks;

  // Position in the ordering; unknown xApps rank last.
  int rank(const std::string& xapp_id) const;
  void prune_expired(Tick now);
  bool blocks(const std::string& xapp_id, const Target& target, ParamId param, Tick now) const;
};

struct MitigationConfig {
  Tick cooldown_ticks = 100;
  double tau_hard = 0.8;  // implicit evidence above this blocks regardless of priority
};

// Pure policy update: adds cooldown blocks for the report's losers. For
// implicit reports the top-evidence xApp is blocked outright when its
// evidence exceeds tau_hard; otherwise the priority rule applies.
PriorityPolicy resolve_conflict(const ConflictReport& report, PriorityPolicy policy, Tick now,
                                const MitigationConfig& cfg);

// The CM xApp: consumes conflict reports, gates the submission path.
class Mitigator final : public ric::ActionGate {
 public:
  Mitigator(PriorityPolicy initial, MitigationConfig cfg)
      : policy_(std::move(initial)), cfg_(cfg) {}

  void on_reports(const std::vector<ConflictReport>& reports, Tick now);

  bool allows(const std::string& xapp_id, const Target& target, ParamId param,
              Tick now) override {
    policy_.prune_expired(now);
    return !policy_.blocks(xapp_id, target, param, now);
  }

  const PriorityPolicy& policy() const { return policy_; }

 private:
  PriorityPolicy policy_;
  MitigationConfig cfg_;
};

}  // namespace riclab::mitigate
