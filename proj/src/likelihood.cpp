#include "actinf/likelihood.hpp"

#include <cmath>
#include <sstream>

#include "actinf/parallel.hpp"

namespace actinf {

// The partial likelihood has conditional-logit structure: each
// retweet/mention event contributes s_actor - log(sum_v exp(s_v)) with
// per-account exponents
//
//   s_v = sum over followees u of v of (alpha_u + beta_v) * z_u,
//   z_u = log(M_u(t-, topic) + 1).
//
// Splitting s_v = w_v(alpha) + beta_v * c_v with c_v = sum_u z_u lets the
// workspace cache everything that does not depend on the parameters.
// Derivatives come from the softmax moments: with pi the event softmax and
// g_p(v) the exponent's derivative in coordinate p, the event adds
// g_p(actor) - E_pi[g_p] to the gradient and -Cov_pi(g_p, g_q) to the
// Hessian, which keeps the Hessian negative semidefinite by construction.

LikelihoodWorkspace::LikelihoodWorkspace(const EventLog& log,
                                         const FollowersNetwork& network,
                                         const ActivityIndex& index)
    : network_(&network),
      topic_count_(log.topic_count()),
      per_topic_(log.topic_count()) {
  const int n = network.size();
  if (log.account_count() > n)
    throw std::invalid_argument("event log covers more accounts than the network");
  for (const Event& e : log.events()) {
    if (!e.is_response()) continue;
    ResponseEvent ev;
    ev.topic = e.topic;
    ev.actor = e.account;
    ev.time = e.time;
    ev.log_activity = Eigen::VectorXd::Zero(n);
    for (int i = 0; i < n; ++i) {
      const int m = index.count_total(i, e.topic, e.time);
      if (m > 0) {
        ev.log_activity[i] = std::log(static_cast<double>(m) + 1.0);
        ev.active.push_back(i);
      }
    }
    ev.inbound_mass = Eigen::VectorXd::Zero(n);
    for (int u : ev.active) {
      const double z = ev.log_activity[u];
      for (int v : network.followers_of(u)) ev.inbound_mass[v] += z;
    }
    per_topic_[e.topic].push_back(std::move(ev));
    ++event_count_;
  }
}

Eigen::VectorXd params_to_free(const ParamVector& params) {
  const int n = params.size();
  Eigen::VectorXd free(free_dimension(n));
  for (int i = 1; i < n; ++i) free[i - 1] = params.alpha[i];
  for (int j = 0; j < n; ++j) free[n - 1 + j] = params.beta[j];
  return free;
}

ParamVector free_to_params(const Eigen::VectorXd& free, int n) {
  if (free.size() != free_dimension(n))
    throw std::invalid_argument("free vector has wrong dimension");
  ParamVector params(n);
  for (int i = 1; i < n; ++i) params.alpha[i] = free[i - 1];
  for (int j = 0; j < n; ++j) params.beta[j] = free[n - 1 + j];
  return params;
}

namespace {

// Accumulates one topic's contribution in the extended coordinate space
// [alpha_1..alpha_n, beta_1..beta_n]; alpha_1 is dropped when slicing to
// free coordinates at the end.
struct TopicAccumulator {
  double ll = 0.0;
  Eigen::VectorXd grad;
  Eigen::MatrixXd hess;
};

void accumulate_topic(const LikelihoodWorkspace& ws, const ParamVector& params,
                      EvalOrder order, int topic, TopicAccumulator& acc) {
  const FollowersNetwork& net = ws.network();
  const int n = net.size();
  const bool want_grad = order != EvalOrder::value;
  const bool want_hess = order == EvalOrder::value_gradient_hessian;

  if (want_grad) acc.grad = Eigen::VectorXd::Zero(2 * n);
  if (want_hess) acc.hess = Eigen::MatrixXd::Zero(2 * n, 2 * n);

  Eigen::VectorXd exponent(n), pi(n), q(n), abar(n), bbar(n);
  std::vector<int> active_followers;

  for (const ResponseEvent& ev : ws.topic_events(topic)) {
    const Eigen::VectorXd& z = ev.log_activity;
    const Eigen::VectorXd& c = ev.inbound_mass;

    // s_v = w_v + beta_v * c_v
    for (int v = 0; v < n; ++v) exponent[v] = params.beta[v] * c[v];
    for (int u : ev.active) {
      const double az = params.alpha[u] * z[u];
      if (az == 0.0) continue;
      for (int v : net.followers_of(u)) exponent[v] += az;
    }

    double max_exponent = exponent.maxCoeff();
    if (!std::isfinite(max_exponent) || !exponent.allFinite()) {
      std::ostringstream msg;
      msg << "saturated likelihood exponent at topic " << (ev.topic + 1)
          << ", t = " << ev.time << ", account " << (ev.actor + 1);
      throw SaturationError(msg.str());
    }

    double denom = 0.0;
    for (int v = 0; v < n; ++v) {
      pi[v] = std::exp(exponent[v] - max_exponent);
      denom += pi[v];
    }
    acc.ll += exponent[ev.actor] - (max_exponent + std::log(denom));
    if (!want_grad) continue;
    pi /= denom;

    // q_i = sum of pi over i's followers; only needed where z_i > 0.
    for (int i : ev.active) {
      double sum = 0.0;
      for (int v : net.followers_of(i)) sum += pi[v];
      q[i] = sum;
    }

    for (int i : ev.active)
      acc.grad[i] += z[i] * ((net.edge(i, ev.actor) ? 1.0 : 0.0) - q[i]);
    for (int j = 0; j < n; ++j) acc.grad[n + j] -= pi[j] * c[j];
    acc.grad[n + ev.actor] += c[ev.actor];

    if (!want_hess) continue;

    // Only the upper triangle of the extended matrix is filled here; the
    // reduction mirrors it, so H = H' holds exactly.
    for (int i : ev.active) abar[i] = z[i] * q[i];
    for (int j = 0; j < n; ++j) bbar[j] = pi[j] * c[j];

    // alpha-alpha: abar_i * abar_k - z_i z_k * sum_v pi_v L_iv L_kv
    for (int i : ev.active) {
      const double ai = abar[i];
      for (int k : ev.active)
        if (k >= i) acc.hess(i, k) += ai * abar[k];
    }
    for (int v = 0; v < n; ++v) {
      if (pi[v] == 0.0) continue;
      active_followers.clear();
      for (int i : net.followers_of(v))
        if (z[i] != 0.0) active_followers.push_back(i);
      for (int i : active_followers) {
        const double w = pi[v] * z[i];
        for (int k : active_followers)
          if (k >= i) acc.hess(i, k) -= w * z[k];
      }
    }

    // beta-beta: bbar_j * bbar_k - delta_jk * pi_j * c_j^2
    for (int j = 0; j < n; ++j) {
      const double bj = bbar[j];
      if (bj != 0.0)
        for (int k = j; k < n; ++k) acc.hess(n + j, n + k) += bj * bbar[k];
      acc.hess(n + j, n + j) -= pi[j] * c[j] * c[j];
    }

    // alpha-beta: abar_i * bbar_j - pi_j * z_i * L_ij * c_j
    // (always upper triangle: alpha rows precede beta columns)
    for (int i : ev.active) {
      const double ai = abar[i];
      const double zi = z[i];
      if (ai != 0.0)
        for (int j = 0; j < n; ++j) acc.hess(i, n + j) += ai * bbar[j];
      for (int j : net.followers_of(i)) acc.hess(i, n + j) -= pi[j] * zi * c[j];
    }
  }
}

Evaluation reduce_topics(const LikelihoodWorkspace& ws, const ParamVector& params,
                         EvalOrder order, int workers, bool extended_hessian,
                         Eigen::MatrixXd* extended_out) {
  const int n = ws.account_count();
  const int topics = ws.topic_count();
  const bool want_grad = order != EvalOrder::value;
  const bool want_hess = order == EvalOrder::value_gradient_hessian;

  std::vector<TopicAccumulator> partial(topics);
  parallel_for(static_cast<std::size_t>(topics), workers, [&](std::size_t l) {
    accumulate_topic(ws, params, order, static_cast<int>(l), partial[l]);
  });

  // Fixed-order reduction: bit-identical for every worker count.
  double ll = 0.0;
  Eigen::VectorXd grad_ext;
  Eigen::MatrixXd hess_ext;
  if (want_grad) grad_ext = Eigen::VectorXd::Zero(2 * n);
  if (want_hess) hess_ext = Eigen::MatrixXd::Zero(2 * n, 2 * n);
  for (int l = 0; l < topics; ++l) {
    ll += partial[l].ll;
    if (want_grad && partial[l].grad.size() > 0) grad_ext += partial[l].grad;
    if (want_hess && partial[l].hess.size() > 0) hess_ext += partial[l].hess;
  }
  if (want_hess) {
    hess_ext.triangularView<Eigen::StrictlyLower>() =
        hess_ext.triangularView<Eigen::StrictlyUpper>().transpose();
  }

  Evaluation out;
  out.log_likelihood = ll;
  if (want_grad) grad_ext.segment(1, 2 * n - 1).eval().swap(out.gradient);
  if (want_hess) {
    if (extended_hessian && extended_out) *extended_out = hess_ext;
    out.hessian = hess_ext.block(1, 1, 2 * n - 1, 2 * n - 1);
  }
  return out;
}

}  // namespace

Evaluation evaluate(const LikelihoodWorkspace& ws, const ParamVector& params,
                    EvalOrder order, int workers) {
  params.validate();
  if (params.size() != ws.account_count())
    throw std::invalid_argument("parameter dimension does not match the network");
  return reduce_topics(ws, params, order, workers, false, nullptr);
}

double log_partial_likelihood(const LikelihoodWorkspace& ws,
                              const ParamVector& params, int workers) {
  return evaluate(ws, params, EvalOrder::value, workers).log_likelihood;
}

Eigen::VectorXd gradient(const LikelihoodWorkspace& ws, const ParamVector& params,
                         int workers) {
  return evaluate(ws, params, EvalOrder::value_gradient, workers).gradient;
}

Eigen::MatrixXd hessian(const LikelihoodWorkspace& ws, const ParamVector& params,
                        int workers) {
  return evaluate(ws, params, EvalOrder::value_gradient_hessian, workers).hessian;
}

Eigen::MatrixXd hessian_extended(const LikelihoodWorkspace& ws,
                                 const ParamVector& params, int workers) {
  params.validate();
  Eigen::MatrixXd extended;
  reduce_topics(ws, params, EvalOrder::value_gradient_hessian, workers, true,
                &extended);
  return extended;
}

}  // namespace actinf
