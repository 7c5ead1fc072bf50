#pragma once

#include <map>
#include <set>

#include "riclab/ric/ids.hpp"

namespace riclab::ric {

// Per-parameter domain constraints and the default declared-impact set.
// Value ranges mirror the simulator's control surface; impacts are what a
// well-behaved xApp operating the parameter would declare.
struct ParamSpec {
  ParamId id = ParamId::Hysteresis;
  bool pair_scoped = false;
  std::set<KpiId> default_impacts;
};

class ParameterRegistry {
 public:
  // Builds the standard surface: H, TTT, CIO, TX_POWER.
  static ParameterRegistry standard();

  bool contains(ParamId param) const { return specs_.count(param) > 0; }
  const ParamSpec& spec(ParamId param) const { return specs_.at(param); }

 private:
  std::map<ParamId, ParamSpec> specs_;
};

}  // namespace riclab::ric
