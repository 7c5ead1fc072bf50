#include "riclab/mitigate/policy.hpp"

#include <algorithm>

namespace riclab::mitigate {

int PriorityPolicy::rank(const std::string& xapp_id) const {
  for (std::size_t i = 0; i < ordering.size(); ++i) {
    if (ordering[i] == xapp_id) return static_cast<int>(i);
  }
  return static_cast<int>(ordering.size());
}

void PriorityPolicy::prune_expired(Tick now) {
  std::erase_if(active_blocks, [now](const BlockRule& rule) { return now >= rule.expires_at_tick; });
}

bool PriorityPolicy::blocks(const std::string& xapp_id, const Target& target, ParamId param,
                            Tick now) const {
  for (const auto& rule : active_blocks) {
    if (rule.covers(xapp_id, target, param, now)) return true;
  }
  return false;
}

namespace {

void add_blocks_for(PriorityPolicy& policy, const ConflictReport& report,
                    const std::string& xapp, Tick expires_at) {
  const auto it = report.parameters.find(xapp);
  if (it == report.parameters.end()) return;
  for (const auto& [target, param] : it->second) {
    bool extended = false;
    for (auto& rule : policy.active_blocks) {
      if (rule.xapp_id == xapp && rule.target && *rule.target == target && rule.param == param) {
        rule.expires_at_tick = std::max(rule.expires_at_tick, expires_at);
        extended = true;
        break;
      }
    }
    if (!extended) {
      policy.active_blocks.push_back({xapp, target, param, expires_at});
    }
  }
}

}  // namespace

PriorityPolicy resolve_conflict(const ConflictReport& report, PriorityPolicy policy, Tick now,
                                const MitigationConfig& cfg) {
  policy.prune_expired(now);
  if (report.xapps.empty()) return policy;
  const Tick expires_at = now + cfg.cooldown_ticks;

  if (report.conflict_type == detect::ConflictType::Implicit) {
    // Strong evidence overrides priority.
    std::string top;
    double top_score = 0.0;
    for (const auto& [xapp, score] : report.evidence) {
      if (top.empty() || score > top_score) {
        top = xapp;
        top_score = score;
      }
    }
    if (!top.empty() && top_score > cfg.tau_hard) {
      add_blocks_for(policy, report, top, expires_at);
      return policy;
    }
  }

  // Priority rule: everyone but the highest-priority implicated xApp loses.
  std::string keeper;
  int keeper_rank = 0;
  for (const auto& xapp : report.xapps) {
    const int r = policy.rank(xapp);
    if (keeper.empty() || r < keeper_rank) {
      keeper = xapp;
      keeper_rank = r;
    }
  }
  for (const auto& xapp : report.xapps) {
    if (xapp == keeper) continue;
    add_blocks_for(policy, report, xapp, expires_at);
  }
  return policy;
}

void Mitigator::on_reports(const std::vector<ConflictReport>& reports, Tick now) {
  for (const auto& report : reports) {
    policy_ = resolve_conflict(report, std::move(policy_), now, cfg_);
  }
}

}  // namespace riclab::mitigate
