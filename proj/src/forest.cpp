#include "losaw/forest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "losaw/error.hpp"
#include "losaw/weights.hpp"

namespace losaw {

double impurity_decrease(double t_left, double w_left, double t_total, double w_total) {
  const double w_right = w_total - w_left;
  if (!(w_left > 0.0) || !(w_right > 1e-14 * w_total)) return 0.0;
  const double t_right = t_total - t_left;
  return (t_left * t_left / w_left + t_right * t_right / w_right - t_total * t_total / w_total) / w_total;
}

namespace {

struct NodeMoments {
  double w = 0.0;     // total weight
  double mean = 0.0;  // weighted mean response
  double mse = 0.0;   // weighted MSE about the mean
};

NodeMoments moments(const Dataset& data, std::span<const std::size_t> rows, std::span<const double> w) {
  NodeMoments m;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    m.w += w[i];
    m.mean += w[i] * data.y(rows[i]);
  }
  if (!(m.w > 0.0)) return m;
  m.mean /= m.w;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const double d = data.y(rows[i]) - m.mean;
    m.mse += w[i] * d * d;
  }
  m.mse /= m.w;
  return m;
}

bool constant_response(const Dataset& data, std::span<const std::size_t> rows) {
  for (auto r : rows)
    if (data.y(r) != data.y(rows[0])) return false;
  return true;
}

}  // namespace

std::optional<SplitCandidate> best_split(const Dataset& data, std::span<const std::size_t> rows,
                                         std::span<const double> w, std::size_t feature, std::size_t min_leaf) {
  if (w.size() != rows.size()) throw ValidationError("weights and rows differ in length");
  if (feature >= data.p()) throw ValidationError("feature index out of range");
  const std::size_t n = rows.size();
  if (n < 2 || constant_response(data, rows)) return std::nullopt;
  const NodeMoments nm = moments(data, rows, w);
  if (!(nm.w > 0.0)) return std::nullopt;
  double max_dev = 0.0;
  for (auto r : rows) max_dev = std::max(max_dev, std::abs(data.y(r) - nm.mean));
  if (!(nm.mse > 1e-12 * max_dev * max_dev)) return std::nullopt;

  // Sweep in value order on centered responses; totals are re-accumulated in
  // the same order so the complement sums are consistent.
  std::optional<SplitCandidate> best;
  auto consider = [&](double value, double tl, double wl, double t, double wt, std::size_t count) {
    if (count < min_leaf || n - count < min_leaf) return;
    const double rel = std::clamp(impurity_decrease(tl, wl, t, wt) / nm.mse, 0.0, 1.0);
    if (rel <= kSplitTieTolerance) return;
    if (!best || rel > best->delta_rel + kSplitTieTolerance) best = SplitCandidate{value, rel, count};
  };

  const auto& kind = data.kinds[feature];
  if (kind.is_discrete()) {
    const std::size_t k = kind.num_levels();
    std::vector<double> wl(k, 0.0), tl(k, 0.0);
    std::vector<std::size_t> cnt(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto li = kind.level_index(data.x(rows[i], feature));
      if (!li) throw ValidationError("value is not a declared level");
      wl[*li] += w[i];
      tl[*li] += w[i] * (data.y(rows[i]) - nm.mean);
      ++cnt[*li];
    }
    double t = 0.0, wt = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      t += tl[l];
      wt += wl[l];
    }
    double acc_t = 0.0, acc_w = 0.0;
    std::size_t acc_n = 0;
    for (std::size_t l = 0; l < k; ++l) {
      if (cnt[l] == 0) continue;
      acc_t += tl[l];
      acc_w += wl[l];
      acc_n += cnt[l];
      if (acc_n == n) break;
      consider(kind.levels()[l], acc_t, acc_w, t, wt, acc_n);
    }
    return best;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double xa = data.x(rows[a], feature), xb = data.x(rows[b], feature);
    return xa < xb || (xa == xb && a < b);
  });
  double t = 0.0, wt = 0.0;
  for (auto i : order) {
    t += w[i] * (data.y(rows[i]) - nm.mean);
    wt += w[i];
  }
  double acc_t = 0.0, acc_w = 0.0;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t i = order[j];
    acc_t += w[i] * (data.y(rows[i]) - nm.mean);
    acc_w += w[i];
    const double x = data.x(rows[i], feature);
    if (x == data.x(rows[order[j + 1]], feature)) continue;  // only between distinct values
    consider(x, acc_t, acc_w, t, wt, j + 1);
  }
  return best;
}

std::optional<SplitDecision> select_split(const Dataset& data, std::span<const std::size_t> rows,
                                          std::span<const std::size_t> candidates, std::size_t min_leaf,
                                          const WeightProvider& weights) {
  std::vector<std::size_t> order(candidates.begin(), candidates.end());
  std::sort(order.begin(), order.end());
  std::optional<SplitDecision> best;
  for (auto p : order) {
    auto w = weights(p);
    if (!w) continue;
    auto c = best_split(data, rows, *w, p, min_leaf);
    if (!c) continue;
    if (!best || c->delta_rel > best->delta_rel + kSplitTieTolerance) best = SplitDecision{p, c->value, c->delta_rel};
  }
  return best;
}

// ---------------------------------------------------------------- config

std::size_t ForestConfig::resolved_mtry(std::size_t p) const {
  if (mtry > 0) return std::min(mtry, p);
  return std::max<std::size_t>(1, p / 3);
}

void ForestConfig::validate(std::size_t p) const {
  if (n_tree == 0) throw ValidationError("n_tree must be positive");
  if (min_leaf == 0) throw ValidationError("min_leaf must be positive");
  if (p == 0) throw ValidationError("dataset has no features");
  if (mtry > p) throw ValidationError("mtry " + std::to_string(mtry) + " exceeds " + std::to_string(p) + " features");
  EssConfig{eta, alpha}.validate();
  if (corr_threshold < 0.0 || corr_threshold > 1.0) throw ValidationError("corr_threshold must lie in [0, 1]");
}

nlohmann::json to_json(const ForestConfig& c) {
  return {{"n_tree", c.n_tree},
          {"max_depth", c.max_depth},
          {"min_leaf", c.min_leaf},
          {"mtry", c.mtry},
          {"eta", c.eta},
          {"alpha", c.alpha},
          {"q_max", c.q_max},
          {"corr_threshold", c.corr_threshold},
          {"importance_scale", c.importance_scale == ImportanceScale::kWeightedMse ? "weighted_mse" : "unweighted_variance"},
          {"propensity_at_unit_eta", c.propensity_at_unit_eta},
          {"logistic_solver", c.propensity.solver == LogisticSolver::kNewton ? "newton" : "gradient_descent"}};
}

ForestConfig forest_config_from_json(const nlohmann::json& j) {
  ForestConfig c;
  try {
    c.n_tree = j.value("n_tree", c.n_tree);
    c.max_depth = j.value("max_depth", c.max_depth);
    c.min_leaf = j.value("min_leaf", c.min_leaf);
    c.mtry = j.value("mtry", c.mtry);
    c.eta = j.value("eta", c.eta);
    c.alpha = j.value("alpha", c.alpha);
    c.q_max = j.value("q_max", c.q_max);
    c.corr_threshold = j.value("corr_threshold", c.corr_threshold);
    c.propensity_at_unit_eta = j.value("propensity_at_unit_eta", c.propensity_at_unit_eta);
    c.threads = j.value("threads", c.threads);
    const std::string scale = j.value("importance_scale", std::string("unweighted_variance"));
    if (scale == "weighted_mse") c.importance_scale = ImportanceScale::kWeightedMse;
    else if (scale != "unweighted_variance") throw ValidationError("importance_scale: unknown value '" + scale + "'");
    const std::string solver = j.value("logistic_solver", std::string("newton"));
    if (solver == "gradient_descent") c.propensity.solver = LogisticSolver::kGradientDescent;
    else if (solver != "newton") throw ValidationError("logistic_solver: unknown value '" + solver + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("forest config: ") + e.what());
  }
  return c;
}

// ---------------------------------------------------------------- growing

namespace {

bool constant_feature(const Dataset& data, std::span<const std::size_t> rows, std::size_t f) {
  const double first = data.x(rows[0], f);
  for (auto r : rows)
    if (data.x(r, f) != first) return false;
  return true;
}

double unweighted_variance(const Dataset& data, std::span<const std::size_t> rows, double* mean_out) {
  double mean = 0.0;
  for (auto r : rows) mean += data.y(r);
  mean /= static_cast<double>(rows.size());
  double v = 0.0;
  for (auto r : rows) v += (data.y(r) - mean) * (data.y(r) - mean);
  *mean_out = mean;
  return v / static_cast<double>(rows.size());
}

class TreeGrower {
 public:
  TreeGrower(const Dataset& data, const ForestConfig& cfg, const TreeContext& ctx, Rng& rng)
      : data_(data), cfg_(cfg), ctx_(ctx), rng_(rng), mtry_(cfg.resolved_mtry(data.p())) {}

  Tree grow(std::vector<std::size_t> rows) {
    build(std::move(rows), 0);
    return std::move(tree_);
  }

 private:
  std::vector<double> node_weights(std::span<const std::size_t> rows, std::size_t p) const {
    const std::size_t n = rows.size();
    if (!cfg_.uses_propensity()) return std::vector<double>(n, 1.0 / static_cast<double>(n));
    PropensityOptions opts = cfg_.propensity;
    opts.marginal = ctx_.marginals.at(p);
    const auto model = fit_propensity(data_, rows, ctx_.adjustments.at(p), opts);
    const auto scores = stabilized_scores(model, data_, rows);
    try {
      return weights_from_propensities(scores, {cfg_.eta, cfg_.alpha});
    } catch (const ThresholdSearchError& e) {
      return e.best_weights;
    }
  }

  int build(std::vector<std::size_t> rows, std::size_t depth) {
    const int id = static_cast<int>(tree_.nodes.size());
    tree_.nodes.emplace_back();
    double mean = 0.0;
    const double var = unweighted_variance(data_, rows, &mean);
    tree_.nodes[id].n = rows.size();
    tree_.nodes[id].prediction = mean;
    tree_.nodes[id].mse = var;

    if (depth >= cfg_.max_depth || rows.size() < 2 * cfg_.min_leaf || !(var > 0.0)) return id;

    // Candidate features: partial Fisher-Yates draw without replacement.
    std::vector<std::size_t> feats(data_.p());
    std::iota(feats.begin(), feats.end(), 0);
    for (std::size_t i = 0; i < mtry_; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, feats.size() - 1);
      std::swap(feats[i], feats[pick(rng_)]);
    }
    feats.resize(mtry_);

    std::vector<std::vector<double>> used(data_.p());
    WeightProvider provider = [&](std::size_t p) -> std::optional<std::vector<double>> {
      if (constant_feature(data_, rows, p)) return std::nullopt;
      used[p] = node_weights(rows, p);
      return used[p];
    };
    const auto split = select_split(data_, rows, feats, cfg_.min_leaf, provider);
    if (!split) return id;

    std::vector<std::size_t> left, right;
    for (auto r : rows) (data_.x(r, split->feature) <= split->value ? left : right).push_back(r);
    {
      TreeNode& node = tree_.nodes[id];
      node.feature = static_cast<int>(split->feature);
      node.value = split->value;
      node.delta_rel = split->delta_rel;
      if (cfg_.importance_scale == ImportanceScale::kWeightedMse)
        node.mse = moments(data_, rows, used[split->feature]).mse;
    }
    rows.clear();
    rows.shrink_to_fit();
    const int l = build(std::move(left), depth + 1);
    const int r = build(std::move(right), depth + 1);
    tree_.nodes[id].left = l;
    tree_.nodes[id].right = r;
    return id;
  }

  const Dataset& data_;
  const ForestConfig& cfg_;
  const TreeContext& ctx_;
  Rng& rng_;
  std::size_t mtry_;
  Tree tree_;
};

}  // namespace

Tree grow_tree(const Dataset& data, std::span<const std::size_t> sample, const ForestConfig& cfg,
               const TreeContext& ctx, Rng& mtry_rng) {
  if (sample.empty()) throw ValidationError("cannot grow a tree on an empty sample");
  if (cfg.uses_propensity() && (ctx.adjustments.size() != data.p() || ctx.marginals.size() != data.p()))
    throw ValidationError("tree context does not match the dataset");
  TreeGrower g(data, cfg, ctx, mtry_rng);
  return g.grow(std::vector<std::size_t>(sample.begin(), sample.end()));
}

void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, n);
  if (threads <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(mu);
          if (!error) error = std::current_exception();
        }
      }
    });
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

std::vector<AdjustmentSet> preliminary_adjustments(const Dataset& data, const ForestConfig& cfg, std::uint64_t seed) {
  ForestConfig plain = cfg;
  plain.eta = 1.0;
  plain.propensity_at_unit_eta = false;
  std::vector<double> fi(data.p(), 0.0);
  try {
    fi = mdi_importance(fit_forest(data, plain, derive_seed(seed, "prelim")));
  } catch (const NumericalError&) {
    // No splits anywhere: fall back to feature order.
  }
  std::vector<AdjustmentSet> adj;
  for (std::size_t p = 0; p < data.p(); ++p)
    adj.push_back(select_adjustment_features(data, p, fi, cfg.q_max, cfg.corr_threshold));
  return adj;
}

Forest fit_forest(const Dataset& data, const ForestConfig& cfg, std::uint64_t seed,
                  std::vector<AdjustmentSet> adjustments) {
  data.validate();
  cfg.validate(data.p());
  if (data.n() == 0) throw ValidationError("dataset has no rows");
  Forest f;
  f.config = cfg;
  f.n_features = data.p();
  f.seed = seed;
  TreeContext ctx;
  if (cfg.uses_propensity()) {
    if (adjustments.empty()) adjustments = preliminary_adjustments(data, cfg, seed);
    if (adjustments.size() != data.p()) throw ValidationError("need one adjustment set per feature");
    for (std::size_t p = 0; p < data.p(); ++p) ctx.marginals.push_back(fit_normal(data, p));
  }
  ctx.adjustments = adjustments;
  f.adjustments = std::move(adjustments);
  f.trees.resize(cfg.n_tree);
  parallel_for(cfg.n_tree, cfg.threads, [&](std::size_t t) {
    Rng boot = make_rng(seed, "bootstrap", t);
    Rng mtry = make_rng(seed, "mtry", t);
    std::uniform_int_distribution<std::size_t> pick(0, data.n() - 1);
    std::vector<std::size_t> sample(data.n());
    for (auto& s : sample) s = pick(boot);
    f.trees[t] = grow_tree(data, sample, cfg, ctx, mtry);
  });
  return f;
}

double Forest::predict_row(const Eigen::MatrixXd& x, Eigen::Index row) const {
  if (static_cast<std::size_t>(x.cols()) != n_features)
    throw ValidationError("expected " + std::to_string(n_features) + " features, got " + std::to_string(x.cols()));
  auto access = [&](int f) { return x(row, f); };
  double s = 0.0;
  for (const auto& t : trees) s += t.predict(access);
  return s / static_cast<double>(trees.size());
}

Eigen::VectorXd Forest::predict(const Eigen::MatrixXd& x) const {
  Eigen::VectorXd out(x.rows());
  for (Eigen::Index i = 0; i < x.rows(); ++i) out(i) = predict_row(x, i);
  return out;
}

std::vector<double> mdi_importance(const Forest& forest) {
  std::vector<double> total(forest.n_features, 0.0);
  bool any = false;
  for (const auto& tree : forest.trees) {
    std::vector<double> fi(forest.n_features, 0.0);
    for (const auto& node : tree.nodes)
      if (node.feature >= 0) fi[node.feature] += node.delta_rel * node.mse * static_cast<double>(node.n);
    const double s = std::accumulate(fi.begin(), fi.end(), 0.0);
    if (!(s > 0.0)) continue;
    any = true;
    for (std::size_t p = 0; p < fi.size(); ++p) total[p] += fi[p] / s;
  }
  if (!any) throw NumericalError("no splits");
  for (auto& v : total) v /= static_cast<double>(forest.trees.size());
  return total;
}

// ---------------------------------------------------------------- serialization

namespace {

nlohmann::json node_json(const Tree& t, int k) {
  const TreeNode& n = t.nodes[k];
  nlohmann::json j = {{"n", n.n}, {"prediction", n.prediction}, {"mse", n.mse}};
  if (n.feature >= 0) {
    j["feature"] = n.feature;
    j["value"] = n.value;
    j["delta_rel"] = n.delta_rel;
    j["left"] = node_json(t, n.left);
    j["right"] = node_json(t, n.right);
  }
  return j;
}

int node_from_json(const nlohmann::json& j, Tree& t) {
  const int id = static_cast<int>(t.nodes.size());
  t.nodes.emplace_back();
  TreeNode n;
  n.n = j.at("n").get<std::size_t>();
  n.prediction = j.at("prediction").get<double>();
  n.mse = j.at("mse").get<double>();
  if (j.contains("feature")) {
    n.feature = j.at("feature").get<int>();
    n.value = j.at("value").get<double>();
    n.delta_rel = j.at("delta_rel").get<double>();
    n.left = node_from_json(j.at("left"), t);
    n.right = node_from_json(j.at("right"), t);
  }
  t.nodes[id] = n;
  return id;
}

}  // namespace

nlohmann::json to_json(const Forest& f) {
  nlohmann::json j;
  j["schema"] = "losaw-forest-v1";
  j["config"] = to_json(f.config);
  j["n_features"] = f.n_features;
  j["seed"] = f.seed;
  j["adjustments"] = nlohmann::json::array();
  for (const auto& a : f.adjustments) j["adjustments"].push_back({{"target", a.target}, {"adjusters", a.adjusters}});
  j["trees"] = nlohmann::json::array();
  for (const auto& t : f.trees) j["trees"].push_back(node_json(t, 0));
  return j;
}

Forest forest_from_json(const nlohmann::json& j) {
  try {
    if (j.at("schema").get<std::string>() != "losaw-forest-v1") throw ValidationError("unsupported forest schema");
    Forest f;
    f.config = forest_config_from_json(j.at("config"));
    f.n_features = j.at("n_features").get<std::size_t>();
    f.seed = j.value("seed", std::uint64_t{0});
    for (const auto& a : j.at("adjustments"))
      f.adjustments.push_back({a.at("target").get<std::size_t>(), a.at("adjusters").get<std::vector<std::size_t>>()});
    for (const auto& t : j.at("trees")) {
      Tree tree;
      node_from_json(t, tree);
      for (const auto& n : tree.nodes)
        if (n.feature >= static_cast<int>(f.n_features)) throw ValidationError("split feature out of range");
      f.trees.push_back(std::move(tree));
    }
    if (f.trees.empty()) throw ValidationError("forest has no trees");
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("malformed forest: ") + e.what());
  }
}

}  // namespace losaw
