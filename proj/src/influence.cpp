#include "actinf/influence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace actinf {

double mean_activity(const ActivityIndex& index, int account, double from,
                     double to, int grid) {
  if (grid < 1) throw std::invalid_argument("grid must be positive");
  if (!(from >= 0.0) || !(to <= index.horizon()))
    throw std::invalid_argument("interval outside the log horizon");
  if (!(to - from >= kMinInterval))
    throw std::invalid_argument("empty interval: averaging needs positive width");
  const double h = (to - from) / grid;
  const int topics = index.topic_count();
  double total = 0.0;
  for (int k = 0; k < grid; ++k) {
    const double t = from + (k + 0.5) * h;
    for (int l = 0; l < topics; ++l) total += index.count_total(account, l, t);
  }
  return total / grid;
}

std::vector<double> mean_activity_all(const ActivityIndex& index, double from,
                                      double to, int grid) {
  std::vector<double> out(index.account_count());
  for (int i = 0; i < index.account_count(); ++i)
    out[i] = mean_activity(index, i, from, to, grid);
  return out;
}

InfluenceVector influence_scores(const ParamVector& params,
                                 const FollowersNetwork& network,
                                 const std::vector<double>& mean_activity_levels,
                                 double interval_start, double interval_end) {
  params.validate();
  const int n = network.size();
  if (params.size() != n || static_cast<int>(mean_activity_levels.size()) != n)
    throw std::invalid_argument("dimension mismatch in influence inputs");
  for (double m : mean_activity_levels)
    if (!(m >= 0.0))
      throw std::invalid_argument("mean activity must be nonnegative");

  InfluenceVector out;
  out.scores.resize(n);
  out.interval_start = interval_start;
  out.interval_end = interval_end;

  for (int i = 0; i < n; ++i) {
    const auto& followers = network.followers_of(i);
    if (followers.empty()) {
      out.scores[i] = -std::numeric_limits<double>::infinity();
      continue;
    }
    const double lm = std::log(mean_activity_levels[i] + 1.0);
    // log sum over followers j of exp(lm * (alpha_i + beta_j))
    double max_term = -std::numeric_limits<double>::infinity();
    for (int j : followers)
      max_term = std::max(max_term, lm * (params.alpha[i] + params.beta[j]));
    double sum = 0.0;
    for (int j : followers)
      sum += std::exp(lm * (params.alpha[i] + params.beta[j]) - max_term);
    out.scores[i] = max_term + std::log(sum);
  }
  out.ranking = ranked_order(out.scores);
  return out;
}

std::vector<int> ranked_order(const std::vector<double>& scores) {
  std::vector<int> order(scores.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return a < b;
  });
  return order;
}

std::vector<RankedAccount> rank(const InfluenceVector& influence,
                                const FollowersNetwork& network) {
  std::vector<RankedAccount> out;
  out.reserve(influence.ranking.size());
  int position = 1;
  for (int account : influence.ranking) {
    out.push_back({account, network.label(account), influence.scores[account],
                   position++});
  }
  return out;
}

}  // namespace actinf
