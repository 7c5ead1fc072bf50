#pragma once

// The xNIB action ledger: an append-only record of every parameter
// operation any xApp attempted, whatever the outcome. Conflict detection
// reads it; nothing ever rewrites it.

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "riclab/ric/ids.hpp"

namespace riclab::ric {

enum class ActionOutcome { Applied, BlockedByPriority, Rejected };

const char* to_string(ActionOutcome outcome);

struct ActionRecord {
  Tick tick = 0;
  std::string xapp_id;
  Target target;
  ParamId param_id = ParamId::Hysteresis;
  double old_value = 0.0;
  double new_value = 0.0;
  ActionOutcome outcome = ActionOutcome::Applied;

  bool operator==(const ActionRecord&) const = default;
};

struct LedgerFilter {
  std::optional<std::string> xapp_id;
  std::optional<ParamId> param_id;
  std::optional<Target> target;

  bool matches(const ActionRecord& record) const {
    if (xapp_id && record.xapp_id != *xapp_id) return false;
    if (param_id && record.param_id != *param_id) return false;
    if (target && !(record.target == *target)) return false;
    return true;
  }
};

class ActionLedger {
 public:
  // Ticks must be non-decreasing in append order.
  void append(ActionRecord record);

  const std::vector<ActionRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }

  // All matching records with tick in [tick_a, tick_b], in ledger order.
  std::vector<ActionRecord> query(Tick tick_a, Tick tick_b,
                                  const LedgerFilter& filter = {}) const;

  // JSON-lines export, one record per line.
  void export_jsonl(std::ostream& out) const;

 private:
  std::vector<ActionRecord> records_;
};

}  // namespace riclab::ric
