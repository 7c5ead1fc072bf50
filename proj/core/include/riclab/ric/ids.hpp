#pragma once

#include <compare>
#include <optional>
#include <string>

#include "riclab/sim/engine.hpp"
#include "riclab/sim/types.hpp"

namespace riclab::ric {

using sim::CellId;
using sim::Tick;
using ParamId = sim::ParamId;

enum class KpiId { MeanLoad, CallBlocks, RlfCount, HoCount, PingpongCount };

const char* to_string(ParamId param);
const char* to_string(KpiId kpi);
std::optional<ParamId> param_from_string(const std::string& name);
std::optional<KpiId> kpi_from_string(const std::string& name);

// Addresses a cell or an ordered cell pair (CIO is pair-scoped).
struct Target {
  CellId cell = 0;
  CellId neighbor = sim::kNoCell;

  static Target for_cell(CellId cell) { return {cell, sim::kNoCell}; }
  static Target for_pair(CellId serving, CellId neighbor) { return {serving, neighbor}; }

  bool is_pair() const { return neighbor != sim::kNoCell; }
  sim::ParamRef ref(ParamId param) const { return {param, cell, neighbor}; }
  std::string to_string() const;
  static std::optional<Target> from_string(const std::string& text);

  auto operator<=>(const Target&) const = default;
};

}  // namespace riclab::ric
