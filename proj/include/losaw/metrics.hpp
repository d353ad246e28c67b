#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace losaw {

double r_squared(std::span<const double> y, std::span<const double> y_hat);

// Average precision of ranking features by importance against a signal set.
// Tied importances form one block that enters the curve at once.
double pr_auc(std::span<const double> importance, std::span<const std::size_t> signal);

// Mean gap between signal and noise importances. Inputs must already lie in [0, 1].
double fi_gap(std::span<const double> importance, std::span<const std::size_t> signal);

std::vector<double> minmax_normalize(std::span<const double> v);

double pearson_corr(std::span<const double> a, std::span<const double> b);
double weighted_corr(std::span<const double> a, std::span<const double> b, std::span<const double> w);

}  // namespace losaw
