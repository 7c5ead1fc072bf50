#pragma once

#include <vector>

#include "riclab/ric/descriptor.hpp"
#include "riclab/sim/kpi.hpp"

namespace riclab::xapps {

struct ActionRequest {
  ric::Target target;
  ric::ParamId param = ric::ParamId::Hysteresis;
  double value = 0.0;

  bool operator==(const ActionRequest&) const = default;
};

// An xApp is a pure function of the KPI window plus its own memory. The
// harness invokes decide() once per closed window, in registration order,
// and pushes the returned requests through the RIC submission path.
class XApp {
 public:
  virtual ~XApp() = default;
  virtual const ric::XAppDescriptor& descriptor() const = 0;
  virtual std::vector<ActionRequest> decide(const sim::KpiWindow& window) = 0;
};

}  // namespace riclab::xapps
