#include "riclab/ric/ledger.hpp"

#include <ostream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace riclab::ric {

const char* to_string(ActionOutcome outcome) {
  switch (outcome) {
    case ActionOutcome::Applied: return "Applied";
    case ActionOutcome::BlockedByPriority: return "BlockedByPriority";
    case ActionOutcome::Rejected: return "Rejected";
  }
  return "?";
}

void ActionLedger::append(ActionRecord record) {
  if (!records_.empty() && record.tick < records_.back().tick) {
    throw std::logic_error("ledger ticks must be non-decreasing");
  }
  records_.push_back(std::move(record));
}

std::vector<ActionRecord> ActionLedger::query(Tick tick_a, Tick tick_b,
                                              const LedgerFilter& filter) const {
  std::vector<ActionRecord> result;
  for (const auto& record : records_) {
    if (record.tick < tick_a || record.tick > tick_b) continue;
    if (!filter.matches(record)) continue;
    result.push_back(record);
  }
  return result;
}

void ActionLedger::export_jsonl(std::ostream& out) const {
  for (const auto& record : records_) {
    nlohmann::ordered_json line;
    line["tick"] = record.tick;
    line["xapp_id"] = record.xapp_id;
    line["target"] = record.target.to_string();
    line["param_id"] = to_string(record.param_id);
    line["old_value"] = record.old_value;
    line["new_value"] = record.new_value;
    line["outcome"] = to_string(record.outcome);
    out << line.dump() << '\n';
  }
}

}  // namespace riclab::ric
