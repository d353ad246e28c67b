#include "losaw/propensity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <unordered_map>

#include "losaw/error.hpp"
#include "losaw/metrics.hpp"

namespace losaw {

std::vector<std::size_t> all_rows(const Dataset& data) {
  std::vector<std::size_t> r(data.n());
  std::iota(r.begin(), r.end(), 0);
  return r;
}

namespace {

void check_feature(const Dataset& data, std::size_t f) {
  if (f >= data.p())
    throw ValidationError("feature index " + std::to_string(f) + " out of range for " + std::to_string(data.p()) +
                          " features");
}

std::vector<double> column(const Dataset& data, std::size_t f) {
  return std::vector<double>(data.x.col(f).data(), data.x.col(f).data() + data.n());
}

}  // namespace

AdjustmentSet select_adjustment_features(const Dataset& data, std::size_t target,
                                         std::span<const double> initial_fi, std::size_t q_max,
                                         double corr_threshold) {
  check_feature(data, target);
  if (initial_fi.size() != data.p()) throw ValidationError("importance vector length does not match features");
  std::vector<std::size_t> others;
  for (std::size_t f = 0; f < data.p(); ++f)
    if (f != target) others.push_back(f);
  std::stable_sort(others.begin(), others.end(),
                   [&](std::size_t a, std::size_t b) { return initial_fi[a] > initial_fi[b]; });
  if (others.size() > q_max) others.resize(q_max);

  const auto xt = column(data, target);
  AdjustmentSet adj{target, {}};
  for (auto f : others) {
    double r = 0.0;
    try {
      r = pearson_corr(xt, column(data, f));
    } catch (const NumericalError&) {
      r = 0.0;  // constant column
    }
    if (std::abs(r) >= corr_threshold) adj.adjusters.push_back(f);
  }
  std::sort(adj.adjusters.begin(), adj.adjusters.end());
  return adj;
}

NormalParams fit_normal(const Dataset& data, std::size_t feature) {
  check_feature(data, feature);
  const auto c = data.x.col(feature);
  const double mean = c.mean();
  return {mean, (c.array() - mean).square().mean()};
}

namespace {

// Encodes adjusters for the logistic model. Discrete adjusters become one-hot
// blocks over the levels present in the fit rows; constant adjusters are dropped.
std::vector<EncodedColumn> encode_columns(const Dataset& data, std::span<const std::size_t> rows,
                                          const AdjustmentSet& adj) {
  std::vector<EncodedColumn> cols;
  for (auto f : adj.adjusters) {
    EncodedColumn c;
    c.feature = f;
    if (data.kinds[f].is_discrete()) {
      std::vector<char> seen(data.kinds[f].num_levels(), 0);
      for (auto r : rows) seen[*data.kinds[f].level_index(data.x(r, f))] = 1;
      for (std::size_t l = 0; l < seen.size(); ++l)
        if (seen[l]) c.levels.push_back(data.kinds[f].levels()[l]);
      if (c.levels.size() < 2) continue;
      c.one_hot = true;
    } else {
      double m = 0.0, v = 0.0;
      for (auto r : rows) m += data.x(r, f);
      m /= static_cast<double>(rows.size());
      for (auto r : rows) v += (data.x(r, f) - m) * (data.x(r, f) - m);
      v /= static_cast<double>(rows.size());
      if (!(v > 0.0)) continue;
      c.center = m;
      c.scale = std::sqrt(v);
    }
    cols.push_back(std::move(c));
  }
  return cols;
}

// Rows grouped into distinct adjuster patterns with per-class counts.
struct PatternTable {
  std::size_t n_onehot_cols = 0;   // number of one-hot adjusters
  std::size_t n_numeric = 0;
  std::vector<int> active;         // patterns x n_onehot_cols: index into the one-hot parameter block
  std::vector<double> numeric;     // patterns x n_numeric
  std::vector<double> counts;      // patterns x classes
  std::vector<double> totals;      // patterns
  std::vector<std::size_t> row_pattern;
  std::size_t size() const { return totals.size(); }
};

struct Layout {
  std::vector<int> offset;  // per column: start of its one-hot block, or numeric slot
  std::size_t onehot_width = 0;
  std::size_t numeric_width = 0;
};

Layout make_layout(const std::vector<EncodedColumn>& cols) {
  Layout l;
  for (const auto& c : cols) {
    if (c.one_hot) {
      l.offset.push_back(static_cast<int>(l.onehot_width));
      l.onehot_width += c.levels.size();
    } else {
      l.offset.push_back(static_cast<int>(l.numeric_width++));
    }
  }
  return l;
}

// Builds patterns for `rows`. Class index per row is given by class_of (may be -1 when unknown).
PatternTable build_patterns(const Dataset& data, std::span<const std::size_t> rows,
                            const std::vector<EncodedColumn>& cols, const Layout& layout,
                            const std::vector<int>& class_of, std::size_t n_classes) {
  PatternTable t;
  t.n_numeric = layout.numeric_width;
  for (const auto& c : cols) t.n_onehot_cols += c.one_hot;
  // Patterns are keyed in mixed radix; fall back to one pattern per row if the key could overflow.
  bool compress = t.n_numeric == 0;
  double radix = 1.0;
  for (const auto& c : cols)
    if (c.one_hot) radix *= static_cast<double>(c.levels.size() + 1);
  if (radix > 9e18) compress = false;
  std::unordered_map<std::uint64_t, std::size_t> index;
  std::vector<int> act(t.n_onehot_cols);
  std::vector<double> num(t.n_numeric);
  t.row_pattern.resize(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t r = rows[i];
    std::uint64_t key = 0;
    std::size_t a = 0;
    for (std::size_t k = 0; k < cols.size(); ++k) {
      const auto& c = cols[k];
      const double v = data.x(r, c.feature);
      if (c.one_hot) {
        // A level absent at fit time activates no indicator.
        auto it = std::lower_bound(c.levels.begin(), c.levels.end(), v);
        std::size_t li = c.levels.size();
        if (it != c.levels.end() && *it == v) li = static_cast<std::size_t>(it - c.levels.begin());
        act[a++] = li < c.levels.size() ? layout.offset[k] + static_cast<int>(li) : -1;
        key = key * (c.levels.size() + 1) + li;
      } else {
        num[layout.offset[k]] = (v - c.center) / c.scale;
      }
    }
    std::size_t pid;
    auto found = compress ? index.find(key) : index.end();
    if (found != index.end()) {
      pid = found->second;
    } else {
      pid = t.size();
      if (compress) index.emplace(key, pid);
      t.active.insert(t.active.end(), act.begin(), act.end());
      t.numeric.insert(t.numeric.end(), num.begin(), num.end());
      t.counts.insert(t.counts.end(), n_classes, 0.0);
      t.totals.push_back(0.0);
    }
    t.row_pattern[i] = pid;
    t.totals[pid] += 1.0;
    if (class_of[i] >= 0) t.counts[pid * n_classes + static_cast<std::size_t>(class_of[i])] += 1.0;
  }
  return t;
}

// Softmax probabilities for one pattern given the coefficient matrix.
void pattern_probs(const PatternTable& t, std::size_t g, const Eigen::MatrixXd& coef, std::size_t numeric_start,
                   std::vector<double>& out) {
  const std::size_t k_classes = static_cast<std::size_t>(coef.rows());
  double mx = -INFINITY;
  for (std::size_t k = 0; k < k_classes; ++k) {
    double z = coef(k, 0);
    for (std::size_t a = 0; a < t.n_onehot_cols; ++a) {
      const int c = t.active[g * t.n_onehot_cols + a];
      if (c >= 0) z += coef(k, 1 + c);
    }
    for (std::size_t m = 0; m < t.n_numeric; ++m) z += coef(k, numeric_start + m) * t.numeric[g * t.n_numeric + m];
    out[k] = z;
    mx = std::max(mx, z);
  }
  double s = 0.0;
  for (std::size_t k = 0; k < k_classes; ++k) {
    out[k] = std::exp(out[k] - mx);
    s += out[k];
  }
  for (std::size_t k = 0; k < k_classes; ++k) out[k] /= s;
}

// Penalized mean negative log-likelihood and its gradient.
double logistic_loss(const PatternTable& t, std::size_t numeric_start, double n, double l2,
                     const Eigen::MatrixXd& coef, Eigen::MatrixXd* grad) {
  const std::size_t kc = static_cast<std::size_t>(coef.rows());
  const Eigen::Index width = coef.cols();
  std::vector<double> prob(kc);
  double loss = 0.0;
  if (grad) grad->setZero(kc, width);
  for (std::size_t g = 0; g < t.size(); ++g) {
    pattern_probs(t, g, coef, numeric_start, prob);
    for (std::size_t k = 0; k < kc; ++k) {
      const double c = t.counts[g * kc + k];
      if (c > 0.0) loss -= c * std::log(std::max(prob[k], 1e-300));
      if (!grad) continue;
      const double r = t.totals[g] * prob[k] - c;
      (*grad)(k, 0) += r;
      for (std::size_t a = 0; a < t.n_onehot_cols; ++a) {
        const int col = t.active[g * t.n_onehot_cols + a];
        if (col >= 0) (*grad)(k, 1 + col) += r;
      }
      for (std::size_t q = 0; q < t.n_numeric; ++q)
        (*grad)(k, numeric_start + q) += r * t.numeric[g * t.n_numeric + q];
    }
  }
  loss /= n;
  loss += 0.5 * l2 * coef.rightCols(width - 1).squaredNorm();
  if (grad) {
    *grad /= n;
    grad->rightCols(width - 1) += l2 * coef.rightCols(width - 1);
  }
  return loss;
}

int gradient_fit(const PatternTable& t, std::size_t numeric_start, std::size_t n_rows, const PropensityOptions& opts,
                 Eigen::MatrixXd& coef) {
  const double n = static_cast<double>(n_rows);
  Eigen::MatrixXd grad;
  int it = 0;
  for (; it < opts.iterations; ++it) {
    logistic_loss(t, numeric_start, n, opts.l2, coef, &grad);
    if (grad.norm() < opts.tolerance) break;
    coef -= opts.learning_rate * grad;
  }
  return it;
}

int newton_fit(const PatternTable& t, std::size_t numeric_start, std::size_t n_rows, const PropensityOptions& opts,
               Eigen::MatrixXd& coef) {
  const double n = static_cast<double>(n_rows);
  const std::size_t kc = static_cast<std::size_t>(coef.rows());
  const std::size_t width = static_cast<std::size_t>(coef.cols());
  const std::size_t dim = kc * width;
  Eigen::MatrixXd grad, hess(dim, dim);
  std::vector<double> prob(kc);
  std::vector<std::pair<std::size_t, double>> z;
  double loss = logistic_loss(t, numeric_start, n, opts.l2, coef, &grad);
  int it = 0;
  for (; it < opts.newton_iterations; ++it) {
    if (grad.norm() < opts.tolerance) break;
    hess.setZero();
    for (std::size_t g = 0; g < t.size(); ++g) {
      pattern_probs(t, g, coef, numeric_start, prob);
      z.clear();
      z.emplace_back(0, 1.0);
      for (std::size_t a = 0; a < t.n_onehot_cols; ++a) {
        const int col = t.active[g * t.n_onehot_cols + a];
        if (col >= 0) z.emplace_back(1 + col, 1.0);
      }
      for (std::size_t q = 0; q < t.n_numeric; ++q) z.emplace_back(numeric_start + q, t.numeric[g * t.n_numeric + q]);
      const double scale = t.totals[g] / n;
      for (std::size_t k = 0; k < kc; ++k)
        for (std::size_t l = 0; l <= k; ++l) {
          const double c = scale * ((k == l ? prob[k] : 0.0) - prob[k] * prob[l]);
          if (c == 0.0) continue;
          for (const auto& [ia, va] : z)
            for (const auto& [ib, vb] : z) hess(k * width + ia, l * width + ib) += c * va * vb;
        }
    }
    for (std::size_t k = 0; k < kc; ++k)
      for (std::size_t c = 0; c < width; ++c) hess(k * width + c, k * width + c) += (c == 0 ? 1e-10 : opts.l2);
    // Rows are indexed by class, so the flattened gradient is row-major.
    Eigen::VectorXd g(dim);
    for (std::size_t k = 0; k < kc; ++k)
      for (std::size_t c = 0; c < width; ++c) g(k * width + c) = grad(k, c);
    Eigen::VectorXd step = hess.selfadjointView<Eigen::Lower>().ldlt().solve(-g);
    if (!step.allFinite()) step = -g;
    Eigen::MatrixXd delta(kc, width);
    for (std::size_t k = 0; k < kc; ++k)
      for (std::size_t c = 0; c < width; ++c) delta(k, c) = step(k * width + c);
    double s = 1.0;
    bool moved = false;
    for (int half = 0; half < 40; ++half, s *= 0.5) {
      Eigen::MatrixXd trial = coef + s * delta;
      Eigen::MatrixXd trial_grad;
      const double trial_loss = logistic_loss(t, numeric_start, n, opts.l2, trial, &trial_grad);
      if (trial_loss <= loss + 1e-4 * s * g.dot(step)) {
        coef = std::move(trial);
        grad = std::move(trial_grad);
        loss = trial_loss;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }
  return it;
}

PropensityModel fit_discrete(const Dataset& data, std::span<const std::size_t> rows, const AdjustmentSet& adj,
                             const PropensityOptions& opts) {
  PropensityModel m;
  m.adjustment = adj;
  m.discrete = true;
  m.options = opts;
  const auto& kind = data.kinds[adj.target];
  std::vector<double> freq(kind.num_levels(), 0.0);
  std::vector<int> level_of(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto li = kind.level_index(data.x(rows[i], adj.target));
    if (!li) throw ValidationError("target value is not a declared level");
    level_of[i] = static_cast<int>(*li);
    freq[*li] += 1.0;
  }
  std::vector<int> class_id(kind.num_levels(), -1);
  for (std::size_t l = 0; l < freq.size(); ++l) {
    if (freq[l] == 0.0) continue;
    class_id[l] = static_cast<int>(m.classes.size());
    m.classes.push_back(kind.levels()[l]);
    m.class_freq.push_back(freq[l] / static_cast<double>(rows.size()));
  }
  if (m.classes.size() < 2) {
    m.status = PropensityStatus::kConstantFeature;
    return m;
  }
  std::vector<int> class_of(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) class_of[i] = class_id[level_of[i]];

  m.columns = encode_columns(data, rows, adj);
  const Layout layout = make_layout(m.columns);
  const std::size_t kc = m.classes.size();
  const std::size_t numeric_start = 1 + layout.onehot_width;
  const std::size_t width = numeric_start + layout.numeric_width;
  const PatternTable t = build_patterns(data, rows, m.columns, layout, class_of, kc);

  m.coef = Eigen::MatrixXd::Zero(kc, width);
  for (std::size_t k = 0; k < kc; ++k) m.coef(k, 0) = std::log(m.class_freq[k]);
  m.iterations_run = opts.solver == LogisticSolver::kNewton
                         ? newton_fit(t, numeric_start, rows.size(), opts, m.coef)
                         : gradient_fit(t, numeric_start, rows.size(), opts, m.coef);
  return m;
}

PropensityModel fit_continuous(const Dataset& data, std::span<const std::size_t> rows, const AdjustmentSet& adj,
                               const PropensityOptions& opts) {
  PropensityModel m;
  m.adjustment = adj;
  m.discrete = false;
  m.options = opts;
  m.stabilizer = opts.marginal ? *opts.marginal : fit_normal(data, adj.target);
  if (!(m.stabilizer.variance > 0.0)) {
    m.status = PropensityStatus::kDegenerateVariance;
    return m;
  }
  const std::size_t n = rows.size();
  // Regress on the adjusters that vary within the rows.
  for (auto f : adj.adjusters) {
    const double first = data.x(rows[0], f);
    for (auto r : rows)
      if (data.x(r, f) != first) {
        m.regressors.push_back(f);
        break;
      }
  }
  const std::size_t d = m.regressors.size() + 1;
  Eigen::MatrixXd xtx = Eigen::MatrixXd::Zero(d, d);
  Eigen::VectorXd xty = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd z(d);
  for (auto r : rows) {
    z(0) = 1.0;
    for (std::size_t j = 0; j < m.regressors.size(); ++j) z(j + 1) = data.x(r, m.regressors[j]);
    xtx.selfadjointView<Eigen::Lower>().rankUpdate(z);
    xty += z * data.x(r, adj.target);
  }
  xtx = xtx.selfadjointView<Eigen::Lower>();
  for (std::size_t j = 1; j < d; ++j) xtx(j, j) += opts.ridge;
  m.beta = xtx.ldlt().solve(xty);
  double rss = 0.0;
  for (auto r : rows) {
    double pred = m.beta(0);
    for (std::size_t j = 0; j < m.regressors.size(); ++j) pred += m.beta(j + 1) * data.x(r, m.regressors[j]);
    const double e = data.x(r, adj.target) - pred;
    rss += e * e;
  }
  m.residual_variance = rss / static_cast<double>(n);
  if (!(m.residual_variance >= opts.variance_floor)) m.status = PropensityStatus::kDegenerateVariance;
  return m;
}

double log_normal_density(double x, double mean, double var) {
  return -0.5 * std::log(2.0 * M_PI * var) - 0.5 * (x - mean) * (x - mean) / var;
}

}  // namespace

PropensityModel fit_propensity(const Dataset& data, std::span<const std::size_t> rows, const AdjustmentSet& adj,
                               const PropensityOptions& opts) {
  check_feature(data, adj.target);
  for (auto f : adj.adjusters) {
    check_feature(data, f);
    if (f == adj.target) throw ValidationError("target cannot adjust for itself");
  }
  if (rows.empty()) throw ValidationError("propensity fit needs at least one row");
  for (auto r : rows)
    if (r >= data.n()) throw ValidationError("row index out of range");
  AdjustmentSet sorted = adj;
  std::sort(sorted.adjusters.begin(), sorted.adjusters.end());
  return data.kinds[adj.target].is_discrete() ? fit_discrete(data, rows, sorted, opts)
                                              : fit_continuous(data, rows, sorted, opts);
}

Eigen::MatrixXd class_probabilities(const PropensityModel& model, const Dataset& data,
                                    std::span<const std::size_t> rows) {
  if (!model.discrete) throw ValidationError("class probabilities need a discrete model");
  const std::size_t kc = model.classes.size();
  Eigen::MatrixXd out(rows.size(), kc);
  if (model.status != PropensityStatus::kFitted) {
    for (std::size_t k = 0; k < kc; ++k) out.col(k).setConstant(model.class_freq[k]);
    return out;
  }
  const Layout layout = make_layout(model.columns);
  std::vector<int> no_class(rows.size(), -1);
  const PatternTable t = build_patterns(data, rows, model.columns, layout, no_class, kc);
  Eigen::MatrixXd per_pattern(t.size(), kc);
  std::vector<double> prob(kc);
  for (std::size_t g = 0; g < t.size(); ++g) {
    pattern_probs(t, g, model.coef, 1 + layout.onehot_width, prob);
    for (std::size_t k = 0; k < kc; ++k) per_pattern(g, k) = prob[k];
  }
  for (std::size_t i = 0; i < rows.size(); ++i) out.row(i) = per_pattern.row(t.row_pattern[i]);
  return out;
}

std::vector<double> stabilized_scores(const PropensityModel& model, const Dataset& data,
                                      std::span<const std::size_t> rows) {
  const std::size_t target = model.adjustment.target;
  if (target >= data.p() || data.kinds[target].is_discrete() != model.discrete)
    throw ValidationError("dataset schema does not match the propensity model");
  std::vector<double> s(rows.size(), 1.0);
  if (model.status != PropensityStatus::kFitted) return s;
  if (model.discrete) {
    const Eigen::MatrixXd probs = class_probabilities(model, data, rows);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const double v = data.x(rows[i], target);
      auto it = std::lower_bound(model.classes.begin(), model.classes.end(), v);
      if (it == model.classes.end() || *it != v) {
        s[i] = model.options.probability_floor;  // level unseen at fit time
        continue;
      }
      const auto k = static_cast<std::size_t>(it - model.classes.begin());
      s[i] = std::max(probs(i, k), model.options.probability_floor) / model.class_freq[k];
    }
    return s;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t r = rows[i];
    double pred = model.beta(0);
    for (std::size_t j = 0; j < model.regressors.size(); ++j) pred += model.beta(j + 1) * data.x(r, model.regressors[j]);
    const double x = data.x(r, target);
    const double log_ratio = log_normal_density(x - pred, 0.0, model.residual_variance) -
                             log_normal_density(x, model.stabilizer.mean, model.stabilizer.variance);
    s[i] = std::exp(std::clamp(log_ratio, -600.0, 600.0));
  }
  return s;
}

}  // namespace losaw
