#pragma once

#include <functional>
#include <vector>

#include "riclab/sim/kpi.hpp"

namespace riclab::ric {

// Fan-out of closed KPI windows to registered consumers. Every subscriber
// sees every published window exactly once, in publish order.
class KpiBus {
 public:
  using Subscriber = std::function<void(const sim::KpiWindow&)>;

  int subscribe(Subscriber subscriber) {
    subscribers_.push_back(std::move(subscriber));
    return static_cast<int>(subscribers_.size()) - 1;
  }

  void publish(const sim::KpiWindow& window) {
    ++published_windows_;
    for (auto& subscriber : subscribers_) subscriber(window);
  }

  int subscriber_count() const { return static_cast<int>(subscribers_.size()); }
  long published_windows() const { return published_windows_; }

 private:
  std::vector<Subscriber> subscribers_;
  long published_windows_ = 0;
};

}  // namespace riclab::ric
