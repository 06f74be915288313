#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "actinf/model.hpp"
#include "actinf/optimizer.hpp"

namespace actinf {

struct OmegaRange {
  double lo = -0.3;
  double hi = 0.3;
};

struct SimConfig {
  int accounts = 10;      // n
  int topics = 500;       // number of independent per-topic streams
  double baseline = 0.5;  // constant hazard level a on [0, horizon]
  double horizon = 7.0;   // t0, days
  double post_prob = 0.5; // posting probability p per epoch
  int post_batch = 1;     // J: posts per epoch are Binomial(J, p)
  /// Ground truth; when absent, sampled uniformly from omega_range with
  /// alpha_1 pinned to zero.
  std::optional<ParamVector> omega;
  OmegaRange omega_range;
  std::uint64_t seed = 1;
  int replicates = 20;
  int workers = 1;
  int mean_activity_grid = 256;

  void validate() const;
};

/// Two-pass random follower graph: every node draws Uniform{1..floor(n/2)}
/// followers, then Uniform{1..floor(n/2)} followees, so each node ends with
/// at least one of each. Deterministic given the seed.
FollowersNetwork generate_network(int n, std::uint64_t seed);

/// Ring lattice where node i is followed by the next `followers_per_node`
/// nodes: every node has identical in/out degree, which makes structural
/// rankings (PageRank) uniform by symmetry.
FollowersNetwork circulant_network(int n, int followers_per_node);

ParamVector sample_omega(int n, const OmegaRange& range, std::uint64_t seed);

/// One topic's action stream: Binomial(J, p) posts per node at each integer
/// epoch, and retweet/mention events from competing exponential clocks at
/// the model hazard between epochs. Rates are piecewise constant, so the
/// clocks are exact (no thinning). Response times colliding within 1e-12
/// are nudged forward by 1e-9 until unique.
std::vector<Event> generate_actions(const FollowersNetwork& network,
                                    const ParamVector& omega,
                                    const SimConfig& config, int topic,
                                    std::uint64_t seed);

/// All topics of one replicate, with per-topic seed streams; topic
/// generation may run on config.workers threads with identical output.
EventLog simulate_log(const FollowersNetwork& network, const ParamVector& omega,
                      const SimConfig& config);

struct ReplicateResult {
  int replicate = 0;
  bool fit_converged = false;
  int fit_iterations = 0;
  double fit_log_likelihood = 0.0;
  std::size_t response_events = 0;
  double mse_omega = 0.0;  // ||fit - truth|| / sqrt(2n - 1)
  double mse_xi = 0.0;     // ||influence fit - truth|| / sqrt(n)
  double rel_omega = 0.0;
  double rel_xi = 0.0;
  std::string error;  // non-empty when the replicate failed outright
};

struct ExperimentReport {
  SimConfig config;
  std::vector<ReplicateResult> replicates;
  double mean_mse_omega = 0.0;
  double mean_mse_xi = 0.0;
  double mean_rel_omega = 0.0;
  double mean_rel_xi = 0.0;
  int failures = 0;
};

/// Generates `config.replicates` independent (network, actions) draws,
/// fits each one, and scores parameter and influence recovery against the
/// ground truth. Per-replicate failures are recorded, not fatal; means
/// cover the successful replicates.
ExperimentReport run_experiment(const SimConfig& config);
ExperimentReport run_experiment(const SimConfig& config,
                                const NewtonConfig& newton,
                                const FollowersNetwork* fixed_network = nullptr);

}  // namespace actinf
