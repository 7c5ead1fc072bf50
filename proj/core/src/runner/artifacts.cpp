#include <fstream>

#include <fmt/format.h>

#include "riclab/runner/runner.hpp"

namespace riclab::runner {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  return out;
}

std::string cell_field(sim::CellId cell) {
  return cell == sim::kNoCell ? std::string{} : fmt::format("{}", cell);
}

}  // namespace

nlohmann::ordered_json summary_json(const RunResult& result) {
  nlohmann::ordered_json j;
  j["config"] = cfg::to_json(result.config);
  nlohmann::ordered_json totals;
  totals["windows"] = result.totals.windows;
  totals["ho_count"] = result.totals.ho_count;
  totals["pingpong_count"] = result.totals.pingpong_count;
  totals["rlf_count"] = result.totals.rlf_count;
  totals["call_blocks"] = result.totals.call_blocks;
  totals["load_stddev_timeavg"] = result.totals.load_stddev_timeavg;
  totals["late_load_stddev"] = result.totals.late_load_stddev;
  totals["events_by_kind"] = result.totals.events_by_kind;
  totals["conflicts_by_type"] = result.totals.conflicts_by_type;
  j["totals"] = std::move(totals);
  j["aggregate"] = {{"load_stddev", result.aggregate.load_stddev},
                    {"rlf_rate", result.aggregate.rlf_rate},
                    {"pingpong_rate", result.aggregate.pingpong_rate}};
  j["ledger_records"] = result.ledger.size();
  if (result.reward_computed) j["reward"] = result.reward;
  return j;
}

void write_artifacts(const RunResult& result, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(fmt::format("cannot create '{}': {}", out_dir.string(), ec.message()));

  {
    auto out = open_out(out_dir / "events.csv");
    out << "tick,kind,ue_id,from_cell,to_cell\n";
    for (const auto& event : result.events) {
      out << fmt::format("{},{},{},{},{}\n", event.tick, sim::to_string(event.kind),
                         event.ue_id, cell_field(event.from_cell), cell_field(event.to_cell));
    }
  }
  {
    auto out = open_out(out_dir / "kpis.csv");
    out << "window_end_tick,cell_id,mean_load,call_blocks,rlf_count,ho_count,pingpong_count\n";
    for (const auto& s : result.kpi_samples) {
      out << fmt::format("{},{},{},{},{},{},{}\n", s.window_end_tick, s.cell_id, s.mean_load,
                         s.call_blocks, s.rlf_count, s.ho_count, s.pingpong_count);
    }
  }
  {
    auto out = open_out(out_dir / "xnib.jsonl");
    result.ledger.export_jsonl(out);
  }
  {
    auto out = open_out(out_dir / "conflicts.jsonl");
    detect::export_jsonl(result.reports, out);
  }
  {
    auto out = open_out(out_dir / "summary.json");
    out << summary_json(result).dump(2) << '\n';
  }
}

std::vector<CompareRow> compare_runs(const std::filesystem::path& run_a,
                                     const std::filesystem::path& run_b) {
  const auto load_summary = [](const std::filesystem::path& dir) {
    const auto path = dir / "summary.json";
    std::ifstream in(path);
    if (!in) throw MissingArtifact(fmt::format("missing artifact '{}'", path.string()));
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw MissingArtifact(fmt::format("unreadable artifact '{}': {}", path.string(), e.what()));
    }
    return j;
  };
  const auto a = load_summary(run_a);
  const auto b = load_summary(run_b);

  static const char* keys[] = {"ho_count",    "pingpong_count",      "rlf_count",
                               "call_blocks", "load_stddev_timeavg", "late_load_stddev"};
  std::vector<CompareRow> rows;
  for (const char* key : keys) {
    CompareRow row;
    row.key = key;
    row.a = a.at("totals").value(key, 0.0);
    row.b = b.at("totals").value(key, 0.0);
    if (row.a == 0.0 && row.b == 0.0) {
      row.ratio = 1.0;
    } else if (row.a == 0.0) {
      row.ratio = std::numeric_limits<double>::infinity();
    } else {
      row.ratio = row.b / row.a;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_learning_artifacts(const LearnResult& result,
                              const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw IoError(fmt::format("cannot create '{}': {}", out_dir.string(), ec.message()));

  {
    auto out = open_out(out_dir / "policy.json");
    nlohmann::ordered_json j;
    j["ordering"] = result.outcome.arms.empty()
                        ? std::vector<std::string>{}
                        : result.outcome.arms[result.outcome.best_arm];
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (std::size_t a = 0; a < result.outcome.arms.size(); ++a) {
      values[mitigate::arm_label(result.outcome.arms[a])] = result.outcome.arm_value[a];
    }
    j["arm_values"] = std::move(values);
    j["episodes"] = static_cast<long>(result.outcome.trace.size());
    out << j.dump(2) << '\n';
  }
  {
    auto out = open_out(out_dir / "rewards.csv");
    out << "episode,arm,reward\n";
    for (const auto& record : result.outcome.trace) {
      out << fmt::format("{},{},{}\n", record.episode, record.arm_label, record.reward);
    }
  }
}

}  // namespace riclab::runner
