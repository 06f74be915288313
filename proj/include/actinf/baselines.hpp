#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "actinf/model.hpp"

namespace actinf {

/// PageRank over the endorsement orientation of the follower graph: the
/// walk moves follower -> followed, so heavily-followed accounts score
/// high. Dangling mass is spread uniformly. Returns n nonnegative scores
/// summing to one; throws on non-convergence.
std::vector<double> pagerank(const FollowersNetwork& network,
                             double damping = 0.85, double tol = 1e-10,
                             int max_iter = 1000);

struct RegressionResult {
  std::vector<std::string> variable_names;  // includes the intercept
  Eigen::VectorXd coefficients;
  Eigen::VectorXd std_errors;
  Eigen::VectorXd t_values;
  Eigen::VectorXd p_values;
  double r_squared = 0.0;
  double f_statistic = 0.0;  // NaN when undefined
  double f_p_value = 0.0;
  int df_model = 0;
  int df_residual = 0;
  bool f_defined = true;       // false when the response has zero variance
  bool response_clamped = false;  // logit transform clamped some rows
};

/// Classical OLS with optional log(y / (1 - y)) response transform
/// (responses clamped into [1e-6, 1 - 1e-6] first). The design must
/// include the intercept column and have full column rank; rank-deficient
/// designs raise std::invalid_argument naming the collinear columns.
RegressionResult ols_regress(const Eigen::VectorXd& response,
                             const Eigen::MatrixXd& design,
                             std::vector<std::string> variable_names,
                             bool logit_response = false);

struct LabeledScores {
  std::vector<std::string> labels;
  std::vector<double> values;
};

struct LabeledTable {
  std::vector<std::string> labels;          // row keys
  std::vector<std::string> column_names;
  std::vector<std::vector<double>> rows;    // aligned with labels
};

struct ComparisonRow {
  bool uses_proposed = false;
  bool uses_pagerank = false;
  bool logit_response = false;
  RegressionResult regression;
};

struct MeasureComparison {
  std::vector<ComparisonRow> rows;
  std::vector<std::string> matched_labels;
  std::vector<std::string> dropped_labels;
};

/// The three regressions of external scores on {proposed measure,
/// PageRank, both} plus controls, run for the raw and the logit response.
/// Accounts are aligned by label; unmatched accounts are dropped and
/// reported.
MeasureComparison compare_measures(const LabeledScores& proposed,
                                   const LabeledScores& pagerank_scores,
                                   const LabeledScores& external,
                                   const LabeledTable* controls = nullptr);

}  // namespace actinf
