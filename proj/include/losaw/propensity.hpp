#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "losaw/dataset.hpp"

namespace losaw {

struct AdjustmentSet {
  std::size_t target = 0;
  std::vector<std::size_t> adjusters;  // ascending feature indices

  bool operator==(const AdjustmentSet&) const = default;
};

// Top q_max features by initial importance (target excluded), kept when their
// absolute Pearson correlation with the target reaches corr_threshold.
AdjustmentSet select_adjustment_features(const Dataset& data, std::size_t target,
                                         std::span<const double> initial_fi, std::size_t q_max,
                                         double corr_threshold);

struct NormalParams {
  double mean = 0.0;
  double variance = 1.0;
};

NormalParams fit_normal(const Dataset& data, std::size_t feature);

enum class LogisticSolver {
  kNewton,           // damped Newton on the penalized log-likelihood
  kGradientDescent,  // fixed-step full-batch gradient descent
};

struct PropensityOptions {
  // Multinomial logistic regression; iterations and learning_rate apply to gradient descent.
  LogisticSolver solver = LogisticSolver::kNewton;
  int newton_iterations = 50;
  int iterations = 200;
  double learning_rate = 0.1;
  double l2 = 1e-4;
  double tolerance = 1e-8;
  double probability_floor = 1e-6;
  // Linear-Gaussian model for continuous targets.
  double ridge = 1e-8;
  double variance_floor = 1e-12;
  // Stabilizer for continuous targets; computed from all rows when absent.
  std::optional<NormalParams> marginal;
};

enum class PropensityStatus {
  kFitted,
  kConstantFeature,     // single observed level: every score is 1
  kDegenerateVariance,  // residual variance below the floor: every score is 1
};

struct EncodedColumn {
  std::size_t feature = 0;
  bool one_hot = false;
  std::vector<double> levels;  // one-hot levels present at fit time
  double center = 0.0;         // numeric standardization
  double scale = 1.0;
};

struct PropensityModel {
  PropensityStatus status = PropensityStatus::kFitted;
  AdjustmentSet adjustment;
  bool discrete = false;
  PropensityOptions options;

  // Discrete target.
  std::vector<double> classes;
  std::vector<double> class_freq;
  std::vector<EncodedColumn> columns;
  Eigen::MatrixXd coef;  // classes x (1 + encoded width), intercept first
  int iterations_run = 0;

  // Continuous target.
  Eigen::VectorXd beta;  // intercept first, then one entry per numeric adjuster
  std::vector<std::size_t> regressors;
  double residual_variance = 0.0;
  NormalParams stabilizer;
};

// Fits on data rows `rows` (duplicates allowed); the model kind follows the target kind.
PropensityModel fit_propensity(const Dataset& data, std::span<const std::size_t> rows, const AdjustmentSet& adj,
                               const PropensityOptions& opts = {});

// Conditional class probabilities (discrete models) for the given rows: rows x classes.
Eigen::MatrixXd class_probabilities(const PropensityModel& model, const Dataset& data,
                                    std::span<const std::size_t> rows);

// Stabilized propensity: conditional probability (or density) of the observed
// target value divided by its marginal. Strictly positive.
std::vector<double> stabilized_scores(const PropensityModel& model, const Dataset& data,
                                      std::span<const std::size_t> rows);

std::vector<std::size_t> all_rows(const Dataset& data);

}  // namespace losaw
