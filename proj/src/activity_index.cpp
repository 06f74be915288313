#include "actinf/activity_index.hpp"

#include <algorithm>

namespace actinf {

ActivityIndex::ActivityIndex(const EventLog& log, const FollowersNetwork& network)
    : n_(network.size()),
      topics_(log.topic_count()),
      horizon_(log.horizon()),
      all_times_(static_cast<std::size_t>(n_) * topics_),
      response_times_(static_cast<std::size_t>(n_) * topics_) {
  if (log.account_count() > n_)
    throw std::invalid_argument("event log covers more accounts than the network");
  // EventLog construction already validated ranges and within-topic
  // uniqueness of response times; events arrive (topic, time)-sorted, so
  // per-cell appends keep the time arrays sorted.
  for (const Event& e : log.events()) {
    all_times_[cell(e.account, e.topic)].push_back(e.time);
    if (e.is_response())
      response_times_[cell(e.account, e.topic)].push_back(e.time);
  }
}

namespace {

int count_before(const std::vector<double>& times, double t, double horizon) {
  const double clamped = std::clamp(t, 0.0, horizon);
  return static_cast<int>(
      std::lower_bound(times.begin(), times.end(), clamped) - times.begin());
}

}  // namespace

int ActivityIndex::count_total(int account, int topic, double t) const {
  return count_before(all_times_[cell(account, topic)], t, horizon_);
}

int ActivityIndex::count_responses(int account, int topic, double t) const {
  return count_before(response_times_[cell(account, topic)], t, horizon_);
}

}  // namespace actinf
