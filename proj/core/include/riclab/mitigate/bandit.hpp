#pragma once

// Epsilon-greedy multi-armed bandit over complete priority orderings. Arms
// are the permutations of the registered xApp ids (capped at 5 xApps = 120
// arms); each pull runs one full sim+detect+mitigate episode under the
// arm's ordering. Deterministic for a fixed seed schedule and epsilon seed.
// The episode runner is injected so an MDP-style learner can replace this
// one without touching the experiment harness.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace riclab::mitigate {

struct BanditConfig {
  int episodes = 200;
  double epsilon = 0.1;
  std::vector<std::uint64_t> seed_schedule;  // cycled per episode
  std::uint64_t exploration_seed = 7;
};

struct EpisodeRecord {
  int episode = 0;
  int arm = 0;
  std::string arm_label;
  double reward = 0.0;
};

struct BanditOutcome {
  std::vector<std::vector<std::string>> arms;  // ordering per arm
  std::vector<double> arm_value;               // running mean reward
  std::vector<int> arm_pulls;
  int best_arm = 0;
  std::vector<EpisodeRecord> trace;
};

// Runs one episode under `ordering` with `seed`, returns the reward.
using EpisodeRunner =
    std::function<double(const std::vector<std::string>& ordering, std::uint64_t seed)>;

inline constexpr int kMaxBanditXapps = 5;

// nullopt when more than kMaxBanditXapps ids are given (too_many_xapps).
std::optional<BanditOutcome> learn_priorities(const std::vector<std::string>& xapp_ids,
                                              const BanditConfig& cfg,
                                              const EpisodeRunner& run_episode);

std::string arm_label(const std::vector<std::string>& ordering);

}  // namespace riclab::mitigate
