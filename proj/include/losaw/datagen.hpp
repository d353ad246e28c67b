#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "losaw/dataset.hpp"
#include "losaw/rng.hpp"

namespace losaw {

struct DiscreteMarginal {
  std::vector<double> levels;
  std::vector<double> probs;

  double mean() const;
  double variance() const;
};

DiscreteMarginal centered_binomial();  // {-1, 0, 1} with (0.25, 0.5, 0.25)
DiscreteMarginal binomial_two();       // {0, 1, 2} with (0.25, 0.5, 0.25)

// Heterogeneous block on features 1-3, homogeneous block on 4-6, 0.2 across
// blocks, identity beyond feature 6. Needs p >= 6.
Eigen::MatrixXd block_sigma(std::size_t p);
// Five features: correlation a between features 1 and 2, 0.8 for every other pair.
Eigen::MatrixXd example_sigma(double a);

Eigen::MatrixXd sample_mvn(const Eigen::MatrixXd& sigma, std::size_t n, Rng& rng);

// Finite joint distribution on a product grid. Atoms are enumerated with the
// first feature varying slowest.
class JointDistribution {
 public:
  JointDistribution() = default;
  JointDistribution(std::vector<DiscreteMarginal> marginals, Eigen::VectorXd prob);
  static JointDistribution product(std::vector<DiscreteMarginal> marginals);

  std::size_t dims() const { return marginals_.size(); }
  std::size_t size() const { return static_cast<std::size_t>(prob_.size()); }
  const std::vector<DiscreteMarginal>& marginals() const { return marginals_; }
  const Eigen::VectorXd& prob() const { return prob_; }
  Eigen::VectorXd& prob() { return prob_; }

  std::size_t level_code(std::size_t atom, std::size_t j) const;
  double value(std::size_t atom, std::size_t j) const;
  std::vector<double> atom_values(std::size_t atom) const;

  Eigen::MatrixXd correlation() const;
  // Largest deviation of the implied marginals from the declared ones.
  double marginal_residual() const;
  double simplex_residual() const;

 private:
  std::vector<DiscreteMarginal> marginals_;
  std::vector<std::size_t> strides_;
  Eigen::VectorXd prob_;
};

struct QpOptions {
  int max_iterations = 50000;
  double residual_tol = 1e-8;
  double stationarity_tol = 1e-6;
  std::size_t max_atoms = 729;
};

struct QpReport {
  double objective = 0.0;
  double stationarity = 0.0;
  int iterations = 0;
};

// Joint on the product grid of the marginals whose correlation matrix is
// closest to target in Frobenius norm, by projected gradient descent.
JointDistribution solve_discrete_joint(const Eigen::MatrixXd& target, std::vector<DiscreteMarginal> marginals,
                                       const QpOptions& opts = {}, QpReport* report = nullptr);

// n x dims matrix of level values drawn from the joint.
Eigen::MatrixXd sample_joint(const JointDistribution& joint, std::size_t n, Rng& rng);

enum class GdSigmaVariant {
  kOverwriteRandomBase,  // random Gram base, only row-1 entries overwritten
  kTemplate,             // alpha at (1,2),(1,4); beta at every other pair
};

struct GdBlock {
  Eigen::MatrixXd sigma;
  double alpha = 0.0;
  double beta = 0.0;
  int attempts = 0;
};

GdBlock sample_gd_block(Rng& rng, GdSigmaVariant variant = GdSigmaVariant::kOverwriteRandomBase);
// Block-diagonal repetition of one 5x5 block; p must be a multiple of 5.
Eigen::MatrixXd block_diagonal(const Eigen::MatrixXd& block, std::size_t p);

struct RegressionSpec {
  int id = 3;
  std::vector<std::size_t> signal;  // 0-based feature indices

  double operator()(std::span<const double> row) const;
  Eigen::VectorXd evaluate(const Eigen::MatrixXd& x) const;
};

// Regression models f1..f10 for p features.
RegressionSpec regression(int id, std::size_t p);

class FeatureModel {
 public:
  static FeatureModel continuous(Eigen::MatrixXd sigma);
  // Consecutive blocks drawn from the joint, remaining features iid from tail.
  static FeatureModel discrete(JointDistribution block, std::size_t n_blocks, std::size_t p, DiscreteMarginal tail);

  std::size_t p() const { return p_; }
  bool is_discrete() const { return discrete_; }
  std::vector<FeatureKind> kinds() const;
  const JointDistribution& block() const { return block_; }

  Eigen::MatrixXd sample(std::size_t n, Rng& rng) const;
  // Same marginals, independent features.
  Eigen::MatrixXd sample_independent(std::size_t n, Rng& rng) const;

 private:
  bool discrete_ = false;
  std::size_t p_ = 0;
  Eigen::MatrixXd chol_;
  JointDistribution block_;
  std::size_t n_blocks_ = 0;
  DiscreteMarginal tail_;
};

// Variance of f(X) on a fresh sample of size n from the model.
double signal_variance(const FeatureModel& model, const RegressionSpec& f, std::size_t n, Rng& rng);
Eigen::VectorXd gaussian_noise(std::size_t n, double variance, Rng& rng);

struct MarginalFunctions {
  std::vector<double> levels;
  std::vector<std::optional<double>> association;  // E[f(X) | X_p = x]
  std::vector<std::optional<double>> effect;       // E[f(x, X_-p)] with X_-p from its own joint
};

MarginalFunctions marginal_functions(const JointDistribution& joint,
                                     const std::function<double(std::span<const double>)>& f, std::size_t p);

// Atomwise P(X_p = x_p) / P(X_p = x_p | X_-p = x_-p); nullopt off the support.
std::vector<std::optional<double>> population_losaw_weights(const JointDistribution& joint, std::size_t p);

}  // namespace losaw
