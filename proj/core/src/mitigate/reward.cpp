#include "riclab/mitigate/reward.hpp"

namespace riclab::mitigate {

namespace {
double deviation(double value, double baseline) {
  const double denom = baseline != 0.0 ? baseline : 1.0;
  return (value - baseline) / denom;
}
}  // namespace

double compute_reward(const EpisodeAggregate& value, const EpisodeAggregate& baseline,
                      const RewardConfig& cfg) {
  return -(cfg.w_load * deviation(value.load_stddev, baseline.load_stddev) +
           cfg.w_rlf * deviation(value.rlf_rate, baseline.rlf_rate) +
           cfg.w_pp * deviation(value.pingpong_rate, baseline.pingpong_rate));
}

}  // namespace riclab::mitigate
