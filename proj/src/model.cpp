#include "actinf/model.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "actinf/activity_index.hpp"

namespace actinf {

const char* to_string(Kind k) {
  switch (k) {
    case Kind::post:
      return "post";
    case Kind::retweet:
      return "retweet";
    case Kind::mention:
      return "mention";
  }
  return "?";
}

std::optional<Kind> kind_from_string(const std::string& s) {
  if (s == "post") return Kind::post;
  if (s == "retweet") return Kind::retweet;
  if (s == "mention") return Kind::mention;
  return std::nullopt;
}

FollowersNetwork::FollowersNetwork(int n)
    : n_(n),
      adj_(static_cast<std::size_t>(n) * n, 0),
      followers_(n),
      followees_(n),
      labels_(n) {
  if (n < 1) throw std::invalid_argument("network needs at least one account");
  for (int i = 0; i < n; ++i) labels_[i] = std::to_string(i + 1);
}

FollowersNetwork::FollowersNetwork(int n, std::vector<std::string> labels)
    : FollowersNetwork(n) {
  if (static_cast<int>(labels.size()) != n)
    throw std::invalid_argument("label count does not match network size");
  labels_ = std::move(labels);
}

void FollowersNetwork::set_edge(int influencer, int follower, bool present) {
  if (influencer < 0 || influencer >= n_ || follower < 0 || follower >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (influencer == follower)
    throw std::invalid_argument("self-follow edges are not allowed");
  auto& cell = adj_[static_cast<std::size_t>(influencer) * n_ + follower];
  if (cell == static_cast<std::uint8_t>(present)) return;
  cell = present ? 1 : 0;
  auto toggle = [](std::vector<int>& list, int value, bool add) {
    auto it = std::lower_bound(list.begin(), list.end(), value);
    if (add) {
      list.insert(it, value);
    } else if (it != list.end() && *it == value) {
      list.erase(it);
    }
  };
  toggle(followers_[influencer], follower, present);
  toggle(followees_[follower], influencer, present);
}

std::size_t FollowersNetwork::edge_count() const {
  std::size_t total = 0;
  for (const auto& f : followers_) total += f.size();
  return total;
}

void FollowersNetwork::set_label(int account, std::string label) {
  labels_.at(account) = std::move(label);
}

EventLog::EventLog(std::vector<Event> events, double horizon, int topic_count,
                   int account_count)
    : events_(std::move(events)),
      horizon_(horizon),
      topic_count_(topic_count),
      account_count_(account_count) {
  if (!(horizon_ > 0.0)) throw std::invalid_argument("horizon must be positive");
  if (topic_count_ < 1) throw std::invalid_argument("topic count must be positive");
  if (account_count_ < 1)
    throw std::invalid_argument("account count must be positive");

  std::stable_sort(events_.begin(), events_.end(),
                   [](const Event& a, const Event& b) {
                     if (a.topic != b.topic) return a.topic < b.topic;
                     if (a.time != b.time) return a.time < b.time;
                     return a.account < b.account;
                   });

  double previous_response_time = -1.0;
  int previous_topic = -1;
  for (const Event& e : events_) {
    if (e.account < 0 || e.account >= account_count_) {
      throw std::invalid_argument("event references unknown account " +
                                  std::to_string(e.account + 1));
    }
    if (e.topic < 0 || e.topic >= topic_count_) {
      throw std::invalid_argument("event references unknown topic " +
                                  std::to_string(e.topic + 1));
    }
    if (!(e.time >= 0.0) || !(e.time <= horizon_)) {
      std::ostringstream msg;
      msg << "event time " << e.time << " outside [0, " << horizon_ << "]";
      throw std::invalid_argument(msg.str());
    }
    if (e.kind == Kind::post && e.target.has_value())
      throw std::invalid_argument("post events cannot carry a target");
    if (e.target && (*e.target < 0 || *e.target >= account_count_))
      throw std::invalid_argument("event target out of range");
    if (e.is_response()) {
      if (e.topic == previous_topic && e.time == previous_response_time) {
        std::ostringstream msg;
        msg << "duplicate retweet/mention timestamp " << e.time << " in topic "
            << (e.topic + 1);
        throw std::invalid_argument(msg.str());
      }
      previous_topic = e.topic;
      previous_response_time = e.time;
      ++response_count_;
    }
  }
}

void ParamVector::validate() const {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("alpha/beta size mismatch");
  if (alpha.empty()) throw std::invalid_argument("empty parameter vector");
  if (alpha[0] != 0.0)
    throw std::invalid_argument("alpha_1 must stay pinned to zero");
  for (double a : alpha)
    if (!std::isfinite(a)) throw std::invalid_argument("non-finite alpha");
  for (double b : beta)
    if (!std::isfinite(b)) throw std::invalid_argument("non-finite beta");
}

std::vector<double> pack_free(const ParamVector& params) {
  const int n = params.size();
  std::vector<double> free;
  free.reserve(free_dimension(n));
  for (int i = 1; i < n; ++i) free.push_back(params.alpha[i]);
  for (int j = 0; j < n; ++j) free.push_back(params.beta[j]);
  return free;
}

ParamVector unpack_free(const std::vector<double>& free, int n) {
  if (static_cast<int>(free.size()) != free_dimension(n))
    throw std::invalid_argument("free vector has wrong dimension");
  ParamVector params(n);
  for (int i = 1; i < n; ++i) params.alpha[i] = free[i - 1];
  for (int j = 0; j < n; ++j) params.beta[j] = free[n - 1 + j];
  return params;
}

double hazard_rate(const ParamVector& params, const FollowersNetwork& network,
                   const ActivityIndex& index, int account, int topic, double t,
                   double baseline) {
  if (!(baseline >= 0.0))
    throw std::invalid_argument("baseline must be nonnegative");
  double exponent = 0.0;
  for (int influencer : network.followees_of(account)) {
    const int m = index.count_total(influencer, topic, t);
    if (m == 0) continue;
    exponent += (params.alpha[influencer] + params.beta[account]) *
                std::log(static_cast<double>(m) + 1.0);
  }
  if (!(std::fabs(exponent) <= 700.0)) {
    std::ostringstream msg;
    msg << "hazard exponent " << exponent << " saturated for account "
        << (account + 1) << ", topic " << (topic + 1) << ", t = " << t;
    throw SaturationError(msg.str());
  }
  return baseline * std::exp(exponent);
}

}  // namespace actinf
