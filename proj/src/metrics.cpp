#include "losaw/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "losaw/error.hpp"

namespace losaw {

double r_squared(std::span<const double> y, std::span<const double> y_hat) {
  if (y.size() != y_hat.size() || y.empty()) throw ValidationError("r_squared: length mismatch");
  const double mean = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(y.size());
  double sse = 0.0, sst = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    sse += (y[i] - y_hat[i]) * (y[i] - y_hat[i]);
    sst += (y[i] - mean) * (y[i] - mean);
  }
  if (!(sst > 0.0)) throw NumericalError("r_squared: constant response");
  return 1.0 - sse / sst;
}

namespace {

std::vector<char> signal_mask(std::size_t p, std::span<const std::size_t> signal) {
  std::vector<char> mask(p, 0);
  for (auto s : signal) {
    if (s >= p) throw ValidationError("signal index " + std::to_string(s) + " out of range");
    mask[s] = 1;
  }
  return mask;
}

}  // namespace

double pr_auc(std::span<const double> importance, std::span<const std::size_t> signal) {
  const std::size_t p = importance.size();
  auto mask = signal_mask(p, signal);
  const double n_signal = std::count(mask.begin(), mask.end(), 1);
  if (n_signal == 0) throw ValidationError("pr_auc: empty signal set");
  std::vector<std::size_t> order(p);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return importance[a] > importance[b]; });
  double area = 0.0, prev_recall = 0.0, tp = 0.0;
  std::size_t i = 0;
  while (i < p) {
    std::size_t j = i;
    while (j < p && importance[order[j]] == importance[order[i]]) {
      tp += mask[order[j]];
      ++j;
    }
    const double recall = tp / n_signal;
    const double precision = tp / static_cast<double>(j);
    area += (recall - prev_recall) * precision;
    prev_recall = recall;
    i = j;
  }
  return area;
}

double fi_gap(std::span<const double> importance, std::span<const std::size_t> signal) {
  const std::size_t p = importance.size();
  auto mask = signal_mask(p, signal);
  double s_sum = 0.0, n_sum = 0.0, s_cnt = 0.0, n_cnt = 0.0;
  for (std::size_t i = 0; i < p; ++i) {
    const double v = importance[i];
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("fi_gap: importances must be normalized to [0, 1]");
    if (mask[i]) {
      s_sum += v;
      s_cnt += 1;
    } else {
      n_sum += v;
      n_cnt += 1;
    }
  }
  if (s_cnt == 0 || n_cnt == 0) throw ValidationError("fi_gap: need both signal and noise features");
  return s_sum / s_cnt - n_sum / n_cnt;
}

std::vector<double> minmax_normalize(std::span<const double> v) {
  if (v.empty()) return {};
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  std::vector<double> out(v.size(), 0.0);
  const double range = *hi - *lo;
  if (range > 0.0)
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::clamp((v[i] - *lo) / range, 0.0, 1.0);
  return out;
}

double pearson_corr(std::span<const double> a, std::span<const double> b) {
  std::vector<double> w(a.size(), 1.0);
  return weighted_corr(a, b, w);
}

double weighted_corr(std::span<const double> a, std::span<const double> b, std::span<const double> w) {
  if (a.size() != b.size() || a.size() != w.size() || a.empty())
    throw ValidationError("weighted_corr: length mismatch");
  double sw = 0.0, ma = 0.0, mb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    sw += w[i];
    ma += w[i] * a[i];
    mb += w[i] * b[i];
  }
  if (!(sw > 0.0)) throw NumericalError("weighted_corr: degenerate weights");
  ma /= sw;
  mb /= sw;
  double caa = 0.0, cbb = 0.0, cab = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    caa += w[i] * da * da;
    cbb += w[i] * db * db;
    cab += w[i] * da * db;
  }
  if (!(caa > 0.0) || !(cbb > 0.0)) throw NumericalError("weighted_corr: zero variance");
  return cab / std::sqrt(caa * cbb);
}

}  // namespace losaw
