#pragma once

#include <string>
#include <vector>

#include "actinf/activity_index.hpp"
#include "actinf/model.hpp"

namespace actinf {

/// Log-scale influence scores with their ranking. Accounts with no
/// followers score -infinity and rank last.
struct InfluenceVector {
  std::vector<double> scores;
  double interval_start = 0.0;
  double interval_end = 0.0;
  std::vector<int> ranking;  // account indices, best first
};

struct RankedAccount {
  int account = 0;  // 0-based
  std::string label;
  double score = 0.0;
  int rank = 0;  // 1-based
};

/// Shortest interval accepted by mean_activity; an instantaneous read is
/// not a substitute for the observed average.
inline constexpr double kMinInterval = 1e-9;

/// Time-average over [from, to] of the account's cross-topic activity
/// count, via a midpoint grid of `grid` samples. Exact for piecewise
/// constant counts up to the grid resolution.
double mean_activity(const ActivityIndex& index, int account, double from,
                     double to, int grid = 256);

std::vector<double> mean_activity_all(const ActivityIndex& index, double from,
                                      double to, int grid = 256);

/// Influence score per account i:
///   log( sum over followers j of exp( log(mean_activity_i + 1) *
///        (alpha_i + beta_j) ) )
/// evaluated with max-subtracted log-sum-exp.
InfluenceVector influence_scores(const ParamVector& params,
                                 const FollowersNetwork& network,
                                 const std::vector<double>& mean_activity_levels,
                                 double interval_start = 0.0,
                                 double interval_end = 0.0);

/// Descending-score order; ties break toward the lower account index.
std::vector<int> ranked_order(const std::vector<double>& scores);

std::vector<RankedAccount> rank(const InfluenceVector& influence,
                                const FollowersNetwork& network);

}  // namespace actinf
