#include "riclab/ric/ids.hpp"

#include <fmt/format.h>

namespace riclab::ric {

const char* to_string(ParamId param) {
  switch (param) {
    case ParamId::Hysteresis: return "H";
    case ParamId::Ttt: return "TTT";
    case ParamId::Cio: return "CIO";
    case ParamId::TxPower: return "TX_POWER";
  }
  return "?";
}

const char* to_string(KpiId kpi) {
  switch (kpi) {
    case KpiId::MeanLoad: return "mean_load";
    case KpiId::CallBlocks: return "call_blocks";
    case KpiId::RlfCount: return "rlf_count";
    case KpiId::HoCount: return "ho_count";
    case KpiId::PingpongCount: return "pingpong_count";
  }
  return "?";
}

std::optional<ParamId> param_from_string(const std::string& name) {
  if (name == "H") return ParamId::Hysteresis;
  if (name == "TTT") return ParamId::Ttt;
  if (name == "CIO") return ParamId::Cio;
  if (name == "TX_POWER") return ParamId::TxPower;
  return std::nullopt;
}

std::optional<KpiId> kpi_from_string(const std::string& name) {
  if (name == "mean_load") return KpiId::MeanLoad;
  if (name == "call_blocks") return KpiId::CallBlocks;
  if (name == "rlf_count") return KpiId::RlfCount;
  if (name == "ho_count") return KpiId::HoCount;
  if (name == "pingpong_count") return KpiId::PingpongCount;
  return std::nullopt;
}

std::string Target::to_string() const {
  return is_pair() ? fmt::format("{}->{}", cell, neighbor) : fmt::format("{}", cell);
}

std::optional<Target> Target::from_string(const std::string& text) {
  const auto arrow = text.find("->");
  try {
    if (arrow == std::string::npos) {
      return Target::for_cell(std::stoi(text));
    }
    return Target::for_pair(std::stoi(text.substr(0, arrow)), std::stoi(text.substr(arrow + 2)));
  } catch (...) {
    return std::nullopt;
  }
}

}  // namespace riclab::ric
