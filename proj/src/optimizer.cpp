#include "actinf/optimizer.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "actinf/activity_index.hpp"

namespace actinf {

namespace {

constexpr double kMuFloor = 1e-8;
constexpr double kMuCeiling = 1e16;

struct Backtrack {
  double tau = 0.0;
  double value = 0.0;
};

// Armijo backtracking on a maximization problem: accept the first tau in
// {1, shrink, shrink^2, ...} with f(tau) >= f0 + c1 * tau * slope.
std::optional<Backtrack> armijo_backtrack(
    const std::function<double(double)>& value_at, double current_value,
    double slope, const LineSearchConfig& config) {
  double tau = 1.0;
  for (int trial = 0; trial < config.max_trials; ++trial) {
    const double value = value_at(tau);
    if (std::isfinite(value) &&
        value >= current_value + config.c1 * tau * slope) {
      return Backtrack{tau, value};
    }
    tau *= config.shrink;
  }
  return std::nullopt;
}

double max_abs(const ParamVector& params) {
  double m = 0.0;
  for (double a : params.alpha) m = std::max(m, std::fabs(a));
  for (double b : params.beta) m = std::max(m, std::fabs(b));
  return m;
}

}  // namespace

void NewtonConfig::validate() const {
  if (!(step_threshold > 0.0))
    throw std::invalid_argument("step_threshold must be positive");
  if (max_iterations < 1)
    throw std::invalid_argument("max_iterations must be positive");
  if (!(line_search.shrink > 0.0 && line_search.shrink < 1.0))
    throw std::invalid_argument("line search shrink factor must lie in (0, 1)");
  if (!(line_search.c1 > 0.0 && line_search.c1 < 1.0))
    throw std::invalid_argument("line search c1 must lie in (0, 1)");
  if (line_search.max_trials < 1)
    throw std::invalid_argument("line search needs at least one trial");
  if (!(damping.initial_mu >= 0.0))
    throw std::invalid_argument("initial damping must be nonnegative");
  if (!(damping.growth > 1.0))
    throw std::invalid_argument("damping growth must exceed one");
  if (!(parameter_cap > 0.0))
    throw std::invalid_argument("parameter cap must be positive");
  if (workers < 1) throw std::invalid_argument("workers must be positive");
}

std::optional<double> line_search(const LikelihoodWorkspace& ws,
                                  const ParamVector& params,
                                  const Eigen::VectorXd& direction,
                                  double current_ll,
                                  const LineSearchConfig& config, int workers) {
  if (!std::isfinite(current_ll))
    throw std::invalid_argument("line search needs a finite starting value");
  const Eigen::VectorXd g = gradient(ws, params, workers);
  const double slope = g.dot(direction);
  if (!(slope > 0.0))
    throw std::invalid_argument("line search direction is not an ascent direction");
  const Eigen::VectorXd theta = params_to_free(params);
  const int n = params.size();
  auto value_at = [&](double tau) {
    return log_partial_likelihood(
        ws, free_to_params(theta + tau * direction, n), workers);
  };
  const auto hit = armijo_backtrack(value_at, current_ll, slope, config);
  if (!hit) return std::nullopt;
  return hit->tau;
}

FitResult estimate(const LikelihoodWorkspace& ws, const NewtonConfig& config) {
  config.validate();
  if (ws.empty())
    throw std::invalid_argument(
        "no likelihood events: the log has no retweet/mention actions");

  const int n = ws.account_count();
  const int d = ws.free_dim();

  FitResult result;
  result.params = ParamVector(n);
  Eigen::VectorXd theta = Eigen::VectorXd::Zero(d);
  double mu = config.damping.initial_mu;

  Evaluation eval;
  try {
    eval = evaluate(ws, result.params, EvalOrder::value_gradient_hessian,
                    config.workers);
  } catch (const SaturationError& e) {
    result.diagnostic = std::string("initial evaluation failed: ") + e.what();
    return result;
  }
  if (!std::isfinite(eval.log_likelihood)) {
    result.diagnostic = "non-finite log-likelihood at initialization";
    return result;
  }
  result.log_likelihood = eval.log_likelihood;
  result.trace.push_back({0, eval.log_likelihood,
                          eval.gradient.lpNorm<Eigen::Infinity>(), 0.0, mu});

  while (result.iterations < config.max_iterations) {
    // Newton/Levenberg direction: (mu I - H) dir = G. H is negative
    // semidefinite, so any mu > 0 makes the system positive definite;
    // escalate mu until the solve yields a finite ascent direction.
    Eigen::VectorXd direction;
    double slope = 0.0;
    bool solved = false;
    while (mu <= kMuCeiling) {
      Eigen::MatrixXd system = -eval.hessian;
      if (mu > 0.0) system.diagonal().array() += mu;
      Eigen::LDLT<Eigen::MatrixXd> ldlt(system);
      if (ldlt.info() == Eigen::Success) {
        direction = ldlt.solve(eval.gradient);
        slope = eval.gradient.dot(direction);
        if (direction.allFinite() &&
            (slope > 0.0 || eval.gradient.norm() == 0.0)) {
          solved = true;
          break;
        }
      }
      mu = (mu == 0.0) ? kMuFloor : mu * config.damping.growth;
    }
    if (!solved) {
      result.diagnostic = "Hessian solve failed after maximum damping escalation";
      return result;
    }

    if (direction.norm() < config.step_threshold) {
      result.converged = true;
      break;
    }

    auto value_at = [&](double tau) {
      return log_partial_likelihood(
          ws, free_to_params(theta + tau * direction, n), config.workers);
    };
    std::optional<Backtrack> step;
    try {
      step = armijo_backtrack(value_at, eval.log_likelihood, slope,
                              config.line_search);
    } catch (const SaturationError& e) {
      result.diagnostic = std::string("line search hit saturation: ") + e.what();
      return result;
    }
    if (!step) {
      mu = (mu == 0.0) ? kMuFloor : mu * config.damping.growth;
      if (mu > kMuCeiling) {
        result.diagnostic = "line search failed at maximum damping";
        return result;
      }
      continue;  // retry the same iterate with stronger damping
    }

    theta += step->tau * direction;
    result.params = free_to_params(theta, n);
    result.log_likelihood = step->value;
    ++result.iterations;

    if (max_abs(result.params) > config.parameter_cap) {
      std::ostringstream msg;
      msg << "parameter magnitude exceeded " << config.parameter_cap
          << " at iteration " << result.iterations
          << ": non-identified or degenerate data (no finite maximizer)";
      result.diagnostic = msg.str();
      return result;
    }

    try {
      eval = evaluate(ws, result.params, EvalOrder::value_gradient_hessian,
                      config.workers);
    } catch (const SaturationError& e) {
      std::ostringstream msg;
      msg << "evaluation failed at iteration " << result.iterations << ": "
          << e.what();
      result.diagnostic = msg.str();
      return result;
    }
    if (!std::isfinite(eval.log_likelihood)) {
      std::ostringstream msg;
      msg << "non-finite log-likelihood at iteration " << result.iterations;
      result.diagnostic = msg.str();
      return result;
    }

    result.trace.push_back({result.iterations, eval.log_likelihood,
                            eval.gradient.lpNorm<Eigen::Infinity>(), step->tau,
                            mu});
    mu = config.damping.initial_mu;  // reset on success

    if ((step->tau * direction).norm() < config.step_threshold) {
      result.converged = true;
      break;
    }
  }

  if (!result.converged && result.diagnostic.empty())
    result.diagnostic = "maximum iterations reached";
  return result;
}

FitResult estimate(const EventLog& log, const FollowersNetwork& network,
                   const NewtonConfig& config) {
  ActivityIndex index(log, network);
  LikelihoodWorkspace ws(log, network, index);
  return estimate(ws, config);
}

}  // namespace actinf
