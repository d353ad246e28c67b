#include "losaw/weights.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace losaw {

void EssConfig::validate() const {
  if (!(eta >= 0.0 && eta <= 1.0)) throw ValidationError("eta must lie in [0, 1], got " + std::to_string(eta));
  if (!(alpha > 0.0)) throw ValidationError("alpha must be positive");
  if (eta > 0.0 && eta < 1.0 && !(alpha < eta))
    throw ValidationError("alpha must be smaller than eta");
  if (max_iterations < 1) throw ValidationError("max_iterations must be positive");
}

double kish_ess(std::span<const double> w) {
  double s1 = 0.0, s2 = 0.0;
  for (double v : w) {
    s1 += v;
    s2 += v * v;
  }
  if (!(s2 > 0.0)) throw NumericalError("degenerate weights");
  return s1 * s1 / s2;
}

double relative_ess(std::span<const double> w) {
  if (w.empty()) throw NumericalError("degenerate weights");
  return kish_ess(w) / static_cast<double>(w.size());
}

std::vector<double> normalized(std::span<const double> w) {
  double total = std::accumulate(w.begin(), w.end(), 0.0);
  if (!(total > 0.0) || !std::isfinite(total)) throw NumericalError("degenerate weights");
  std::vector<double> out(w.begin(), w.end());
  for (double& v : out) v /= total;
  return out;
}

std::vector<double> cap_and_redistribute(std::span<const double> w, double theta) {
  const std::size_t n = w.size();
  if (n == 0) throw ValidationError("empty weight vector");
  if (theta * static_cast<double>(n) < 1.0 - 1e-12) throw ValidationError("infeasible threshold");
  std::vector<double> out(w.begin(), w.end());
  std::vector<char> capped(n, 0);
  std::size_t n_capped = 0;
  // Each pass caps at least one new entry, so n + 1 passes always suffice.
  for (std::size_t pass = 0; pass <= n + 1; ++pass) {
    double excess = 0.0;
    bool over = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (out[i] >= theta) {
        if (out[i] > theta) over = true;
        excess += out[i] - theta;
        out[i] = theta;
        if (!capped[i]) {
          capped[i] = 1;
          ++n_capped;
        }
      }
    }
    if (!over) return out;
    if (n_capped == n) {
      std::fill(out.begin(), out.end(), 1.0 / static_cast<double>(n));
      return out;
    }
    const double share = excess / static_cast<double>(n - n_capped);
    for (std::size_t i = 0; i < n; ++i)
      if (!capped[i]) out[i] += share;
  }
  throw NumericalError("cap_and_redistribute did not reach a fixed point");
}

ThresholdResult search_threshold(std::span<const double> w, const EssConfig& cfg) {
  cfg.validate();
  const std::size_t n = w.size();
  ThresholdResult res;
  if (cfg.eta >= 1.0) {
    res.weights.assign(n, 1.0 / static_cast<double>(n));
    res.theta = 1.0 / static_cast<double>(n);
    return res;
  }
  const double current = relative_ess(w);
  if (current >= cfg.eta || cfg.eta <= 0.0) {
    res.weights.assign(w.begin(), w.end());
    return res;
  }

  // At theta = 1/(N eta) every entry is at most theta, so sum w^2 <= theta
  // and the ESS is at least eta; at theta = 1 the ESS is below eta.
  double lo = std::min(1.0, 1.0 / (static_cast<double>(n) * cfg.eta));
  double hi = 1.0;
  std::vector<double> best;
  double best_gap = std::abs(current - cfg.eta), best_theta = hi;
  for (int it = 1; it <= cfg.max_iterations; ++it) {
    const double theta = 0.5 * (lo + hi);
    auto capped = cap_and_redistribute(w, theta);
    const double s = relative_ess(capped);
    const double gap = std::abs(s - cfg.eta);
    if (gap <= cfg.alpha) {
      res.weights = std::move(capped);
      res.theta = theta;
      res.iterations = it;
      return res;
    }
    if (best.empty() || gap < best_gap) {
      best = capped;
      best_gap = gap;
      best_theta = theta;
    }
    if (s >= cfg.eta) lo = theta; else hi = theta;
  }
  if (best.empty()) best.assign(w.begin(), w.end());
  throw ThresholdSearchError("threshold search did not converge", std::move(best), best_theta);
}

std::vector<double> weights_from_propensities(std::span<const double> propensities, const EssConfig& cfg) {
  cfg.validate();
  const std::size_t n = propensities.size();
  if (n == 0) throw ValidationError("empty propensity vector");
  if (cfg.eta >= 1.0) return std::vector<double>(n, 1.0 / static_cast<double>(n));
  std::vector<double> inv(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double p = propensities[i];
    if (!(p > 0.0) || !std::isfinite(p)) throw ValidationError("invalid propensity");
    inv[i] = 1.0 / p;
  }
  auto w = normalized(inv);
  if (cfg.eta <= 0.0 || relative_ess(w) >= cfg.eta) return w;
  return search_threshold(w, cfg).weights;
}

}  // namespace losaw
