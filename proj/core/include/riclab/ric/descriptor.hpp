#pragma once

#include <set>
#include <string>

#include "riclab/ric/ids.hpp"

namespace riclab::ric {

// What an xApp claims about itself at registration. Impact sets are
// self-reported and unverified; an xApp that under-declares is exactly what
// turns a conflict implicit.
struct XAppDescriptor {
  std::string xapp_id;
  std::set<ParamId> declared_params;
  std::set<KpiId> declared_impacts;
  int priority = -1;  // lower = higher precedence; assigned at registration if < 0
};

}  // namespace riclab::ric
