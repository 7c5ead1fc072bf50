#include "riclab/ric/registry.hpp"

namespace riclab::ric {

ParameterRegistry ParameterRegistry::standard() {
  ParameterRegistry registry;
  registry.specs_[ParamId::Hysteresis] = {
      ParamId::Hysteresis, false, {KpiId::HoCount, KpiId::PingpongCount, KpiId::RlfCount}};
  registry.specs_[ParamId::Ttt] = {
      ParamId::Ttt, false, {KpiId::HoCount, KpiId::PingpongCount, KpiId::RlfCount}};
  registry.specs_[ParamId::Cio] = {
      ParamId::Cio, true, {KpiId::MeanLoad, KpiId::HoCount, KpiId::PingpongCount}};
  registry.specs_[ParamId::TxPower] = {
      ParamId::TxPower, false, {KpiId::MeanLoad, KpiId::RlfCount}};
  return registry;
}

}  // namespace riclab::ric
