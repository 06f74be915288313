#pragma once

#include <vector>

#include "actinf/model.hpp"

namespace actinf {

/// Per-(account, topic) sorted event times supporting O(log m) left-limit
/// count queries. Counts use the strict convention: count(.., t) is the
/// number of events at times strictly before t, so an event never explains
/// its own hazard.
class ActivityIndex {
 public:
  ActivityIndex(const EventLog& log, const FollowersNetwork& network);

  int account_count() const { return n_; }
  int topic_count() const { return topics_; }
  double horizon() const { return horizon_; }

  /// M_i(t-, l): actions of any kind by `account` on `topic` strictly
  /// before t. t is clamped to [0, horizon].
  int count_total(int account, int topic, double t) const;

  /// N_j(t-, l): retweet/mention actions only.
  int count_responses(int account, int topic, double t) const;

  /// All action times (posts + responses) for (account, topic), ascending.
  const std::vector<double>& action_times(int account, int topic) const {
    return all_times_[cell(account, topic)];
  }
  /// Retweet/mention times only, ascending.
  const std::vector<double>& response_times(int account, int topic) const {
    return response_times_[cell(account, topic)];
  }

 private:
  std::size_t cell(int account, int topic) const {
    return static_cast<std::size_t>(account) * topics_ + topic;
  }

  int n_ = 0;
  int topics_ = 0;
  double horizon_ = 0.0;
  std::vector<std::vector<double>> all_times_;
  std::vector<std::vector<double>> response_times_;
};

}  // namespace actinf
