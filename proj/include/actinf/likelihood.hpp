#pragma once

#include <Eigen/Dense>
#include <vector>

#include "actinf/activity_index.hpp"
#include "actinf/model.hpp"

namespace actinf {

/// One retweet/mention event with its covariates frozen at the event time.
struct ResponseEvent {
  int topic = 0;
  int actor = 0;
  double time = 0.0;
  /// z_i = log(M_i(t-, topic) + 1) for every account i.
  Eigen::VectorXd log_activity;
  /// Accounts with z_i > 0, ascending. Most per-event work scales with
  /// this set rather than with n.
  std::vector<int> active;
  /// c_v = sum over followees u of v of z_u; the beta_v covariate in the
  /// softmax exponent s_v = w_v(alpha) + beta_v * c_v.
  Eigen::VectorXd inbound_mass;
};

/// Event schedule plus cached per-event covariates shared by the value,
/// gradient and Hessian evaluators. Immutable after construction.
class LikelihoodWorkspace {
 public:
  LikelihoodWorkspace(const EventLog& log, const FollowersNetwork& network,
                      const ActivityIndex& index);

  const FollowersNetwork& network() const { return *network_; }
  int account_count() const { return network_->size(); }
  int topic_count() const { return topic_count_; }
  int free_dim() const { return free_dimension(network_->size()); }
  bool empty() const { return event_count_ == 0; }
  std::size_t event_count() const { return event_count_; }
  const std::vector<ResponseEvent>& topic_events(int topic) const {
    return per_topic_[topic];
  }

 private:
  const FollowersNetwork* network_ = nullptr;
  int topic_count_ = 0;
  std::size_t event_count_ = 0;
  std::vector<std::vector<ResponseEvent>> per_topic_;
};

enum class EvalOrder { value, value_gradient, value_gradient_hessian };

struct Evaluation {
  double log_likelihood = 0.0;
  Eigen::VectorXd gradient;  // free coordinates; empty unless requested
  Eigen::MatrixXd hessian;   // free coordinates; empty unless requested
};

/// Log partial likelihood and requested derivatives over the free
/// coordinates [alpha_2..alpha_n, beta_1..beta_n].
///
/// Evaluation is a sum of per-topic partials. Partials are computed
/// independently (possibly on `workers` threads) and reduced in fixed
/// topic order, so results are bit-identical for every worker count.
/// Denominators use max-subtracted log-sum-exp. An empty workspace yields
/// 0 (callers consult ws.empty()). Throws SaturationError when a softmax
/// exponent is non-finite.
Evaluation evaluate(const LikelihoodWorkspace& ws, const ParamVector& params,
                    EvalOrder order, int workers = 1);

double log_partial_likelihood(const LikelihoodWorkspace& ws,
                              const ParamVector& params, int workers = 1);
Eigen::VectorXd gradient(const LikelihoodWorkspace& ws, const ParamVector& params,
                         int workers = 1);
Eigen::MatrixXd hessian(const LikelihoodWorkspace& ws, const ParamVector& params,
                        int workers = 1);

/// Extended-space Hessian over [alpha_1..alpha_n, beta_1..beta_n]; the free
/// Hessian equals this matrix with alpha_1's row and column deleted.
Eigen::MatrixXd hessian_extended(const LikelihoodWorkspace& ws,
                                 const ParamVector& params, int workers = 1);

Eigen::VectorXd params_to_free(const ParamVector& params);
ParamVector free_to_params(const Eigen::VectorXd& free, int n);

}  // namespace actinf
