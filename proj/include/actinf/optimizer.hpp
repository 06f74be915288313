#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "actinf/likelihood.hpp"
#include "actinf/model.hpp"

namespace actinf {

struct LineSearchConfig {
  double shrink = 0.5;   // backtracking factor, in (0, 1)
  double c1 = 1e-4;      // Armijo sufficient-increase constant, in (0, 1)
  int max_trials = 40;
};

struct DampingConfig {
  double initial_mu = 0.0;  // Levenberg parameter added on solve trouble
  double growth = 10.0;
};

struct NewtonConfig {
  double step_threshold = 1e-6;  // converged when ||tau * step|| < this
  int max_iterations = 100;
  LineSearchConfig line_search;
  DampingConfig damping;
  /// Monotone-likelihood data has no finite maximizer; abort once any
  /// parameter magnitude passes this cap.
  double parameter_cap = 50.0;
  int workers = 1;

  void validate() const;
};

struct IterationRecord {
  int iteration = 0;
  double log_likelihood = 0.0;
  double gradient_norm = 0.0;  // max norm at the point the step started from
  double tau = 0.0;
  double mu = 0.0;
};

struct FitResult {
  ParamVector params;
  double log_likelihood = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string diagnostic;  // non-empty when converged is false
  std::vector<IterationRecord> trace;
};

/// Newton ascent on the log partial likelihood from Omega = 0, with
/// backtracking line search and Levenberg damping on solve failure.
/// alpha_1 stays pinned at zero by solving in the reduced space.
FitResult estimate(const LikelihoodWorkspace& ws, const NewtonConfig& config);
FitResult estimate(const EventLog& log, const FollowersNetwork& network,
                   const NewtonConfig& config);

/// Largest tau in {1, shrink, shrink^2, ...} with
///   LL(params + tau * direction) >= current_ll + c1 * tau * g'direction.
/// Throws std::invalid_argument unless direction is an ascent direction;
/// returns nullopt when no trial passes (caller escalates damping).
std::optional<double> line_search(const LikelihoodWorkspace& ws,
                                  const ParamVector& params,
                                  const Eigen::VectorXd& direction,
                                  double current_ll,
                                  const LineSearchConfig& config,
                                  int workers = 1);

}  // namespace actinf
