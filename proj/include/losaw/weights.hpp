#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "losaw/error.hpp"

namespace losaw {

struct EssConfig {
  double eta = 0.25;    // target relative effective sample size
  double alpha = 0.01;  // accepted |s_rel - eta| at termination
  int max_iterations = 64;

  void validate() const;
};

// Kish effective sample size (sum w)^2 / sum w^2.
double kish_ess(std::span<const double> w);
double relative_ess(std::span<const double> w);

std::vector<double> normalized(std::span<const double> w);

// Caps entries at theta and spreads the excess evenly over the uncapped entries
// until no entry exceeds theta. Input must be a probability vector.
std::vector<double> cap_and_redistribute(std::span<const double> w, double theta);

// Raised when threshold bisection does not reach the tolerance band.
class ThresholdSearchError : public NumericalError {
 public:
  ThresholdSearchError(const std::string& what, std::vector<double> best, double best_theta)
      : NumericalError(what), best_weights(std::move(best)), theta(best_theta) {}
  std::vector<double> best_weights;
  double theta;
};

struct ThresholdResult {
  std::vector<double> weights;
  double theta = 1.0;
  int iterations = 0;
};

// Bisection on the cap threshold so that relative_ess lands within alpha of eta.
ThresholdResult search_threshold(std::span<const double> w, const EssConfig& cfg);

// Inverse-propensity weights, normalized, with the ESS floor enforced.
std::vector<double> weights_from_propensities(std::span<const double> propensities, const EssConfig& cfg);

}  // namespace losaw
