#include "riclab/mitigate/bandit.hpp"

#include <algorithm>
#include <limits>

#include "riclab/util/rng.hpp"

namespace riclab::mitigate {

std::string arm_label(const std::vector<std::string>& ordering) {
  std::string label;
  for (const auto& id : ordering) {
    if (!label.empty()) label += '>';
    label += id;
  }
  return label;
}

std::optional<BanditOutcome> learn_priorities(const std::vector<std::string>& xapp_ids,
                                              const BanditConfig& cfg,
                                              const EpisodeRunner& run_episode) {
  if (static_cast<int>(xapp_ids.size()) > kMaxBanditXapps) return std::nullopt;

  BanditOutcome outcome;
  std::vector<std::string> sorted = xapp_ids;
  std::sort(sorted.begin(), sorted.end());
  do {
    outcome.arms.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));

  const int n_arms = static_cast<int>(outcome.arms.size());
  outcome.arm_value.assign(n_arms, 0.0);
  outcome.arm_pulls.assign(n_arms, 0);

  // Degenerate arm space: nothing to learn.
  if (n_arms == 1 || xapp_ids.empty()) {
    outcome.best_arm = 0;
    return outcome;
  }

  util::Rng explore(cfg.exploration_seed);
  for (int episode = 0; episode < cfg.episodes; ++episode) {
    int arm;
    if (explore.next_double() < cfg.epsilon) {
      arm = static_cast<int>(explore.next_below(static_cast<std::uint64_t>(n_arms)));
    } else {
      // Exploit the best running mean; unpulled arms count as +inf so every
      // arm gets covered early. Ties break to the lowest index.
      arm = 0;
      double best = -std::numeric_limits<double>::infinity();
      for (int a = 0; a < n_arms; ++a) {
        const double value = outcome.arm_pulls[a] == 0
                                 ? std::numeric_limits<double>::infinity()
                                 : outcome.arm_value[a];
        if (value > best) {
          best = value;
          arm = a;
        }
      }
    }

    const std::uint64_t seed =
        cfg.seed_schedule.empty()
            ? static_cast<std::uint64_t>(episode)
            : cfg.seed_schedule[episode % cfg.seed_schedule.size()];
    const double reward = run_episode(outcome.arms[arm], seed);

    outcome.arm_pulls[arm] += 1;
    outcome.arm_value[arm] +=
        (reward - outcome.arm_value[arm]) / static_cast<double>(outcome.arm_pulls[arm]);
    outcome.trace.push_back({episode, arm, arm_label(outcome.arms[arm]), reward});
  }

  outcome.best_arm = 0;
  for (int a = 1; a < n_arms; ++a) {
    if (outcome.arm_pulls[a] > 0 &&
        (outcome.arm_pulls[outcome.best_arm] == 0 ||
         outcome.arm_value[a] > outcome.arm_value[outcome.best_arm])) {
      outcome.best_arm = a;
    }
  }
  return outcome;
}

}  // namespace riclab::mitigate
