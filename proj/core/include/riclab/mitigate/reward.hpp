#pragma once

namespace riclab::mitigate {

struct RewardConfig {
  double w_load = 1.0;
  double w_rlf = 1.0;
  double w_pp = 1.0;
};

// Episode-level system health: time-averaged cross-cell load stddev and
// per-window RLF / ping-pong rates.
struct EpisodeAggregate {
  double load_stddev = 0.0;
  double rlf_rate = 0.0;
  double pingpong_rate = 0.0;
};

// reward = -(w_load * dev(load) + w_rlf * dev(rlf) + w_pp * dev(pp)) where
// dev(x) = (x - baseline) / baseline, against the seed-matched no-xApp run.
// Zero baselines normalize by 1 instead. Equal-to-baseline input scores 0;
// higher is better.
double compute_reward(const EpisodeAggregate& value, const EpisodeAggregate& baseline,
                      const RewardConfig& cfg);

}  // namespace riclab::mitigate
