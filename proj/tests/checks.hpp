#pragma once
// Oracle battery shared by the acceptance runner and the selfcheck command.

#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "losaw/datagen.hpp"
#include "losaw/forest.hpp"
#include "losaw/losawgd.hpp"
#include "losaw/weights.hpp"
#include "oracles.hpp"

namespace checks {

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

inline losaw::JointDistribution dependent_two_by_two() {
  losaw::DiscreteMarginal b{{0.0, 1.0}, {0.5, 0.5}};
  Eigen::VectorXd p(4);
  p << 0.4, 0.1, 0.1, 0.4;
  return losaw::JointDistribution({b, b}, p);
}

// select_split against exhaustive search on random small nodes.
inline Outcome split_oracle(int nodes, std::uint64_t seed) {
  using namespace losaw;
  Outcome out;
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int compared = 0;
  for (int rep = 0; rep < nodes; ++rep) {
    const std::size_t n = 4 + g() % 57, p = 1 + g() % 5, min_leaf = 1 + g() % 3;
    Dataset d;
    d.x.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p));
    std::vector<std::vector<double>> cols(p);
    for (std::size_t f = 0; f < p; ++f) {
      const bool disc = g() % 2;
      d.kinds.push_back(disc ? FeatureKind::discrete({-1, 0, 1}) : FeatureKind::continuous());
      for (std::size_t i = 0; i < n; ++i) {
        cols[f].push_back(disc ? static_cast<double>(g() % 3) - 1.0 : std::round(u(g) * 20) / 4);
        d.x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(f)) = cols[f].back();
      }
    }
    std::vector<double> y(n);
    for (auto& v : y) v = (g() % 4 == 0) ? 1.0 : u(g) * 3;
    d.y = Eigen::Map<const Eigen::VectorXd>(y.data(), static_cast<Eigen::Index>(n));
    std::vector<std::vector<double>> weights(p);
    for (auto& w : weights) {
      double s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(g() % 7 == 0 ? 0.0 : u(g));
        s += w.back();
      }
      if (s == 0) w[0] = 1;
    }
    std::vector<std::size_t> feats(p), rows(n);
    std::iota(feats.begin(), feats.end(), std::size_t{0});
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    auto got = select_split(d, rows, feats, min_leaf, [&](std::size_t f) {
      return std::optional<std::vector<double>>(normalized(weights[f]));
    });
    auto want = oracle::brute_force_split(cols, y, weights, feats, min_leaf);
    std::ostringstream where;
    where << "node " << rep << ": ";
    if (got.has_value() != want.found) {
      out.fail(where.str() + "split existence differs");
      continue;
    }
    if (!want.found) continue;
    ++compared;
    if (got->feature != want.feature) out.fail(where.str() + "feature differs");
    else if (got->value != want.value) out.fail(where.str() + "split value differs");
    else if (std::abs(got->delta_rel - want.delta_rel) > 1e-10) out.fail(where.str() + "relative decrease differs");
  }
  if (out.pass) out.detail = std::to_string(compared) + " of " + std::to_string(nodes) + " nodes split, all agree";
  return out;
}

// Normalization, cap, idempotence, monotonicity and tolerance band on random instances.
inline Outcome weight_properties(int instances, std::uint64_t seed) {
  using namespace losaw;
  Outcome out;
  std::mt19937_64 g(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int searched = 0;
  auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
  if (!near(kish_ess(std::vector<double>(4, 0.25)), 4.0) || !near(kish_ess(std::vector<double>{1, 0, 0, 0, 0}), 1.0) ||
      !near(kish_ess(std::vector<double>{0.5, 0.25, 0.25}), 1.0 / 0.375))
    out.fail("kish examples");
  for (int rep = 0; rep < instances; ++rep) {
    const std::size_t n = 2 + g() % 200;
    auto w = oracle::random_simplex(g, n, 1.0 + 4.0 * unit(g));
    const double floor = 1.0 / static_cast<double>(n);
    const double t1 = floor + unit(g) * (1.0 - floor), t2 = floor + unit(g) * (1.0 - floor);
    const double lo = std::min(t1, t2), hi = std::max(t1, t2);
    const std::string where = "instance " + std::to_string(rep) + ": ";
    const auto a = cap_and_redistribute(w, lo);
    const auto b = cap_and_redistribute(w, hi);
    const double sum = std::accumulate(a.begin(), a.end(), 0.0);
    if (std::abs(sum - 1.0) > 1e-12) out.fail(where + "capped weights do not sum to one");
    for (double v : a)
      if (v > lo + 1e-12 || v < 0.0) out.fail(where + "entry exceeds the threshold");
    const auto again = cap_and_redistribute(a, lo);
    for (std::size_t i = 0; i < n; ++i)
      if (std::abs(again[i] - a[i]) > 1e-12) out.fail(where + "capping is not idempotent");
    if (relative_ess(a) < relative_ess(b) - 1e-12) out.fail(where + "relative ess not monotone in the threshold");
    EssConfig cfg{0.05 + 0.9 * unit(g), 0.01};
    if (cfg.alpha >= cfg.eta) continue;
    if (relative_ess(w) >= cfg.eta) continue;
    ++searched;
    try {
      const auto r = search_threshold(w, cfg);
      if (std::abs(relative_ess(r.weights) - cfg.eta) > cfg.alpha + 1e-12) out.fail(where + "search missed the band");
    } catch (const NumericalError& e) {
      out.fail(where + e.what());
    }
  }
  if (out.pass) out.detail = std::to_string(instances) + " instances, " + std::to_string(searched) + " searches";
  return out;
}

// Population weights give the product measure; marginal effects of noise features are flat.
inline Outcome decorrelation_identity() {
  using namespace losaw;
  Outcome out;
  const auto j = dependent_two_by_two();
  const auto prod = JointDistribution::product(j.marginals());
  double worst = 0.0;
  for (std::size_t p = 0; p < 2; ++p) {
    const auto w = population_losaw_weights(j, p);
    for (std::size_t a = 0; a < j.size(); ++a) {
      if (!w[a]) {
        out.fail("weight undefined on the support");
        continue;
      }
      worst = std::max(worst, std::abs(j.prob()(a) * *w[a] - prod.prob()(a)));
    }
  }
  if (worst > 1e-12) out.fail("product identity off by " + std::to_string(worst));
  const auto block = solve_discrete_joint(block_sigma(6), std::vector(6, centered_binomial()));
  double spread = 0.0;
  int checked = 0;
  for (int id = 1; id <= 7; ++id) {
    const auto f = regression(id, 6);
    for (std::size_t p = 0; p < 6; ++p) {
      if (std::find(f.signal.begin(), f.signal.end(), p) != f.signal.end()) continue;
      const auto mf = marginal_functions(block, [&](std::span<const double> x) { return f(x); }, p);
      double lo = INFINITY, hi = -INFINITY;
      for (const auto& e : mf.effect) {
        if (!e) continue;
        lo = std::min(lo, *e);
        hi = std::max(hi, *e);
      }
      spread = std::max(spread, hi - lo);
      ++checked;
    }
  }
  if (spread > 1e-10) out.fail("marginal effect of a noise feature varies by " + std::to_string(spread));
  if (out.pass) {
    std::ostringstream s;
    s << "identity error " << worst << ", " << checked << " noise features flat (spread " << spread << ")";
    out.detail = s.str();
  }
  return out;
}

inline Outcome joint_solver() {
  using namespace losaw;
  Outcome out;
  const Eigen::MatrixXd target = block_sigma(6);
  QpReport rep;
  const auto j = solve_discrete_joint(target, std::vector(6, centered_binomial()), {}, &rep);
  const double corr_err = (j.correlation() - target).cwiseAbs().maxCoeff();
  if (j.marginal_residual() >= 1e-3) out.fail("marginal residual " + std::to_string(j.marginal_residual()));
  if (j.simplex_residual() >= 1e-8) out.fail("simplex residual " + std::to_string(j.simplex_residual()));
  if (corr_err > 0.05) out.fail("correlation error " + std::to_string(corr_err));
  QpReport id_rep;
  const auto ind = solve_discrete_joint(Eigen::MatrixXd::Identity(6, 6), std::vector(6, centered_binomial()), {}, &id_rep);
  const auto prod = JointDistribution::product(std::vector(6, centered_binomial()));
  const double prod_err = (ind.prob() - prod.prob()).cwiseAbs().maxCoeff();
  if (id_rep.objective >= 1e-8) out.fail("identity objective " + std::to_string(id_rep.objective));
  if (prod_err > 1e-8) out.fail("identity target misses the product measure by " + std::to_string(prod_err));
  if (out.pass) {
    std::ostringstream s;
    s << "marginal " << j.marginal_residual() << ", simplex " << j.simplex_residual() << ", corr " << corr_err
      << ", identity objective " << id_rep.objective;
    out.detail = s.str();
  }
  return out;
}

// Worst relative error of backprop against central differences.
inline Outcome network_gradients(std::uint64_t seed) {
  using namespace losaw;
  Outcome out;
  const double h = 1e-5;
  Rng rng(seed);
  std::normal_distribution<double> nd(0.0, 1.0);
  auto mse = [](const DenseNet& net, const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
    return (net.predict(x) - y).squaredNorm() / static_cast<double>(x.rows());
  };
  auto rel = [](double a, double b) { return std::abs(a - b) / std::max(1e-6, std::abs(a) + std::abs(b)); };
  double worst = 0.0;
  const std::vector<std::vector<std::size_t>> shapes = {{}, {5}, {64, 32}};
  for (const auto& hidden : shapes) {
    auto net = DenseNet::create(6, hidden, rng);
    for (auto& b : net.biases)
      for (Eigen::Index i = 0; i < b.size(); ++i) b(i) = 0.3 * nd(rng);
    Eigen::MatrixXd x(9, 6);
    Eigen::VectorXd y(9);
    for (Eigen::Index i = 0; i < 9; ++i) {
      y(i) = nd(rng);
      for (Eigen::Index k = 0; k < 6; ++k) x(i, k) = nd(rng);
    }
    const auto g = backward(net, x, y);
    for (std::size_t l = 0; l < net.layers(); ++l) {
      for (Eigen::Index i = 0; i < net.weights[l].rows(); i += 3)
        for (Eigen::Index k = 0; k < net.weights[l].cols(); k += 2) {
          auto up = net, dn = net;
          up.weights[l](i, k) += h;
          dn.weights[l](i, k) -= h;
          worst = std::max(worst, rel((mse(up, x, y) - mse(dn, x, y)) / (2 * h), g.weights[l](i, k)));
        }
      for (Eigen::Index i = 0; i < net.biases[l].size(); ++i) {
        auto up = net, dn = net;
        up.biases[l](i) += h;
        dn.biases[l](i) -= h;
        worst = std::max(worst, rel((mse(up, x, y) - mse(dn, x, y)) / (2 * h), g.biases[l](i)));
      }
    }
    for (Eigen::Index r = 0; r < x.rows(); ++r)
      for (Eigen::Index k = 0; k < x.cols(); ++k) {
        auto up = x, dn = x;
        up(r, k) += h;
        dn(r, k) -= h;
        worst = std::max(worst, rel((mse(net, up, y) - mse(net, dn, y)) / (2 * h), g.inputs(r, k)));
      }
  }
  std::ostringstream s;
  s << "worst relative error " << worst;
  out.detail = s.str();
  if (!(worst < 1e-4)) out.fail(s.str());
  return out;
}

// Chi-square goodness of fit of the batch sampler at significance 0.001.
inline Outcome batch_sampler(std::uint64_t seed) {
  using namespace losaw;
  Outcome out;
  Rng g(seed);
  std::uniform_real_distribution<double> unit(0.2, 1.0);
  std::vector<double> w(50);
  for (auto& v : w) v = unit(g);
  const auto p = normalized(w);
  const std::size_t draws = 100000;
  const auto idx = draw_batch(w, draws, g);
  std::vector<double> counts(w.size(), 0.0);
  for (auto i : idx) counts[i] += 1.0;
  const double stat = oracle::chi_square_stat(counts, p, static_cast<double>(draws));
  const double crit = oracle::chi_square_upper(static_cast<double>(w.size() - 1), 3.0902);
  std::ostringstream s;
  s << "chi-square " << stat << " vs critical " << crit;
  out.detail = s.str();
  if (!(stat < crit)) out.fail(s.str());
  return out;
}

}  // namespace checks
