#include "doctest.h"

#include <chrono>
#include <fstream>
#include <random>

#include "losaw/datagen.hpp"
#include "losaw/error.hpp"
#include "losaw/forest.hpp"
#include "losaw/weights.hpp"
#include "oracles.hpp"

using namespace losaw;

namespace {

Dataset from_columns(const std::vector<std::vector<double>>& cols, const std::vector<double>& y,
                     std::vector<FeatureKind> kinds) {
  Dataset d;
  d.x.resize(y.size(), cols.size());
  for (std::size_t f = 0; f < cols.size(); ++f)
    for (std::size_t i = 0; i < y.size(); ++i) d.x(i, f) = cols[f][i];
  d.y = Eigen::Map<const Eigen::VectorXd>(y.data(), y.size());
  d.kinds = std::move(kinds);
  return d;
}

std::vector<std::size_t> iota_rows(std::size_t n) {
  std::vector<std::size_t> r(n);
  std::iota(r.begin(), r.end(), 0);
  return r;
}

Dataset continuous_data(std::size_t n, std::size_t p, std::uint64_t seed, int reg = 3) {
  Rng rng(seed);
  auto model = FeatureModel::continuous(p >= 6 ? block_sigma(p) : example_sigma(0.5).topLeftCorner(p, p));
  Dataset d;
  d.x = model.sample(n, rng);
  d.y = regression(reg, p).evaluate(d.x) + gaussian_noise(n, 0.3, rng);
  d.kinds = model.kinds();
  return d;
}

}  // namespace

TEST_CASE("impurity decrease") {
  CHECK(impurity_decrease(0.0, 0.5, 0.5) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(impurity_decrease(0.0, 0.0, 0.5) == 0.0);
  CHECK(impurity_decrease(0.5, 1.0, 0.5) == 0.0);
  std::vector<double> y{0, 0, 1, 1};
  auto d = from_columns({{1, 2, 3, 4}}, y, {FeatureKind::continuous()});
  std::vector<double> w(4, 0.25);
  auto s = best_split(d, iota_rows(4), w, 0);
  REQUIRE(s);
  CHECK(s->value == 2.0);
  CHECK(s->delta_rel == doctest::Approx(1.0).epsilon(1e-12));

  std::mt19937_64 g(1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int rep = 0; rep < 500; ++rep) {
    const int n = 2 + static_cast<int>(g() % 49);
    std::vector<double> yy(n), ww(n);
    for (int i = 0; i < n; ++i) {
      yy[i] = u(g) * 4 - 2;
      ww[i] = u(g) + 0.01;
    }
    double sw = 0;
    for (double v : ww) sw += v;
    for (auto& v : ww) v /= sw;
    const int cut = 1 + static_cast<int>(g() % (n - 1));
    std::vector<int> l, r, all;
    double tl = 0, wl = 0, t = 0;
    for (int i = 0; i < n; ++i) {
      all.push_back(i);
      (i < cut ? l : r).push_back(i);
      t += ww[i] * yy[i];
      if (i < cut) {
        tl += ww[i] * yy[i];
        wl += ww[i];
      }
    }
    const double direct = oracle::weighted_mse(yy, ww, all) - wl * oracle::weighted_mse(yy, ww, l) -
                          (1 - wl) * oracle::weighted_mse(yy, ww, r);
    CHECK(impurity_decrease(tl, wl, t) == doctest::Approx(direct).epsilon(1e-10).scale(1.0));
    CHECK(impurity_decrease(tl, wl, t) >= -1e-12);
  }
}

TEST_CASE("pure and degenerate nodes do not split") {
  auto d = from_columns({{1, 2, 3, 4}}, {5, 5, 5, 5}, {FeatureKind::continuous()});
  std::vector<double> w(4, 0.25);
  CHECK_FALSE(best_split(d, iota_rows(4), w, 0));
  auto c = from_columns({{1, 1, 1, 1}}, {1, 2, 3, 4}, {FeatureKind::continuous()});
  CHECK_FALSE(best_split(c, iota_rows(4), w, 0));
}

TEST_CASE("discrete split examples") {
  auto bin = FeatureKind::discrete({0, 1});
  auto d = from_columns({{0, 0, 1, 1}}, {3, 3, 7, 7}, {bin});
  std::vector<double> w(4, 0.25);
  auto s = best_split(d, iota_rows(4), w, 0);
  REQUIRE(s);
  CHECK(s->value == 0.0);
  CHECK(s->delta_rel == doctest::Approx(1.0));
  // Duplicated values straddling the optimum: only value boundaries count.
  auto dup = from_columns({{1, 2, 2, 2, 3}}, {0, 0, 1, 1, 1}, {FeatureKind::continuous()});
  std::vector<double> w5(5, 0.2);
  auto s2 = best_split(dup, iota_rows(5), w5, 0);
  REQUIRE(s2);
  CHECK(s2->value == 1.0);
  CHECK(s2->left_count == 1);
}

TEST_CASE("select_split matches exhaustive maximization on random nodes") {
  std::mt19937_64 g(77);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int compared = 0;
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = 4 + g() % 57, p = 1 + g() % 5, min_leaf = 1 + g() % 3;
    std::vector<std::vector<double>> cols(p);
    std::vector<FeatureKind> kinds;
    for (std::size_t f = 0; f < p; ++f) {
      const bool disc = g() % 2;
      kinds.push_back(disc ? FeatureKind::discrete({-1, 0, 1}) : FeatureKind::continuous());
      for (std::size_t i = 0; i < n; ++i) cols[f].push_back(disc ? static_cast<double>(g() % 3) - 1.0 : std::round(u(g) * 20) / 4);
    }
    std::vector<double> y(n);
    for (auto& v : y) v = (g() % 4 == 0) ? 1.0 : u(g) * 3;
    std::vector<std::vector<double>> weights(p);
    for (auto& w : weights) {
      double s = 0;
      for (std::size_t i = 0; i < n; ++i) {
        w.push_back(g() % 7 == 0 ? 0.0 : u(g));
        s += w.back();
      }
      if (s == 0) w[0] = 1;
    }
    std::vector<std::size_t> feats(p);
    std::iota(feats.begin(), feats.end(), 0);
    auto d = from_columns(cols, y, kinds);
    auto got = select_split(d, iota_rows(n), feats, min_leaf, [&](std::size_t f) {
      double s = 0;
      for (double v : weights[f]) s += v;
      std::vector<double> w(weights[f]);
      for (auto& v : w) v /= s;
      return std::optional<std::vector<double>>(w);
    });
    auto want = oracle::brute_force_split(cols, y, weights, feats, min_leaf);
    REQUIRE(got.has_value() == want.found);
    if (!want.found) continue;
    ++compared;
    CHECK(got->feature == want.feature);
    CHECK(got->value == want.value);
    CHECK(got->delta_rel == doctest::Approx(want.delta_rel).epsilon(1e-10).scale(1.0));
    CHECK(got->delta_rel >= 0.0);
    CHECK(got->delta_rel <= 1.0);
  }
  CHECK(compared > 150);
}

TEST_CASE("uniform weights reproduce the unweighted CART argmax") {
  std::mt19937_64 g(5);
  std::normal_distribution<double> nd;
  for (int rep = 0; rep < 50; ++rep) {
    const std::size_t n = 30, p = 4;
    std::vector<std::vector<double>> cols(p);
    for (auto& c : cols)
      for (std::size_t i = 0; i < n; ++i) c.push_back(nd(g));
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = cols[1][i] + 0.5 * nd(g);
    auto d = from_columns(cols, y, std::vector<FeatureKind>(p, FeatureKind::continuous()));
    std::vector<std::size_t> feats{0, 1, 2, 3};
    auto got = select_split(d, iota_rows(n), feats, 1, [&](std::size_t) {
      return std::optional<std::vector<double>>(std::vector<double>(n, 1.0 / n));
    });
    // Unweighted CART: minimize the children's summed squared error.
    double best_sse = INFINITY;
    std::size_t bf = 0;
    double bv = 0;
    for (std::size_t f = 0; f < p; ++f)
      for (std::size_t k = 0; k < n; ++k) {
        const double v = cols[f][k];
        double sl = 0, sr = 0, ql = 0, qr = 0, nl = 0, nr = 0;
        for (std::size_t i = 0; i < n; ++i) {
          if (cols[f][i] <= v) {
            sl += y[i];
            ql += y[i] * y[i];
            ++nl;
          } else {
            sr += y[i];
            qr += y[i] * y[i];
            ++nr;
          }
        }
        if (nl == 0 || nr == 0) continue;
        const double sse = ql - sl * sl / nl + qr - sr * sr / nr;
        if (sse < best_sse - 1e-9) {
          best_sse = sse;
          bf = f;
          bv = v;
        }
      }
    REQUIRE(got);
    CHECK(got->feature == bf);
    CHECK(got->value == bv);
  }
}

TEST_CASE("losaw weights favour the signal over a correlated noise feature") {
  // Binary pair with corr 0.6; response depends on feature 0 only.
  Eigen::VectorXd prob(4);
  prob << 0.4, 0.1, 0.1, 0.4;
  DiscreteMarginal b{{0.0, 1.0}, {0.5, 0.5}};
  JointDistribution joint({b, b}, prob);
  ForestConfig cfg;
  cfg.eta = 0.1;
  int signal = 0;
  for (int seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    Dataset d;
    d.x = sample_joint(joint, 2000, rng);
    d.y = d.x.col(0) + gaussian_noise(2000, 1.0, rng);
    d.kinds.assign(2, FeatureKind::discrete({0, 1}));
    auto rows = iota_rows(2000);
    std::vector<std::size_t> feats{0, 1};
    auto split = select_split(d, rows, feats, 5, [&](std::size_t f) {
      auto m = fit_propensity(d, rows, {f, {1 - f}});
      return std::optional<std::vector<double>>(weights_from_propensities(stabilized_scores(m, d, rows), {cfg.eta, 0.01}));
    });
    signal += split && split->feature == 0;
  }
  CHECK(signal >= 90);
}

TEST_CASE("tree growth limits") {
  auto d = continuous_data(200, 6, 3);
  ForestConfig cfg;
  cfg.eta = 1.0;
  cfg.max_depth = 0;
  cfg.n_tree = 3;
  auto f = fit_forest(d, cfg, 1);
  for (const auto& t : f.trees) CHECK(t.nodes.size() == 1);
  CHECK_THROWS_AS(mdi_importance(f), NumericalError);

  cfg.max_depth = 10;
  cfg.min_leaf = 7;
  auto g = fit_forest(d, cfg, 1);
  for (const auto& t : g.trees)
    for (const auto& n : t.nodes) {
      CHECK(n.n >= 7);
      CHECK(std::isfinite(n.prediction));
      if (n.feature >= 0) {
        CHECK(n.delta_rel >= 0.0);
        CHECK(n.delta_rel <= 1.0);
      }
    }

  Dataset pure = d;
  pure.y.setConstant(2.5);
  auto h = fit_forest(pure, cfg, 1);
  CHECK(h.trees[0].nodes.size() == 1);
  CHECK(h.predict_row(pure.x, 0) == 2.5);
}

TEST_CASE("single-leaf and duplicate-tree predictions") {
  auto d = continuous_data(100, 6, 8);
  ForestConfig cfg;
  cfg.eta = 1.0;
  cfg.n_tree = 1;
  cfg.max_depth = 0;
  auto f = fit_forest(d, cfg, 4);
  // Leaf holds the bootstrap mean; recompute it from the same bootstrap stream.
  Rng boot = make_rng(4, "bootstrap", 0);
  std::uniform_int_distribution<std::size_t> pick(0, 99);
  double m = 0;
  for (int i = 0; i < 100; ++i) m += d.y(pick(boot));
  CHECK(f.predict_row(d.x, 5) == doctest::Approx(m / 100));

  cfg.max_depth = 5;
  auto one = fit_forest(d, cfg, 4);
  Forest twice = one;
  twice.trees.push_back(one.trees[0]);
  CHECK(twice.predict_row(d.x, 3) == doctest::Approx(one.predict_row(d.x, 3)).epsilon(1e-14));
  auto fi1 = mdi_importance(one), fi2 = mdi_importance(twice);
  for (std::size_t p = 0; p < fi1.size(); ++p) CHECK(fi1[p] == doctest::Approx(fi2[p]).epsilon(1e-14));
}

TEST_CASE("mdi importance") {
  auto d = continuous_data(300, 6, 11);
  ForestConfig cfg;
  cfg.n_tree = 20;
  cfg.eta = 1.0;
  auto f = fit_forest(d, cfg, 2);
  auto fi = mdi_importance(f);
  double s = 0;
  for (double v : fi) {
    CHECK(v >= 0.0);
    s += v;
  }
  CHECK(std::abs(s - 1.0) <= 1e-9);

  Forest stump;
  stump.n_features = 3;
  Tree t;
  t.nodes = {{1, 0.0, 0.4, 2.0, 10, 0.0, 1, 2}, {}, {}};
  stump.trees = {t};
  auto ind = mdi_importance(stump);
  CHECK(ind == std::vector<double>{0.0, 1.0, 0.0});
}

TEST_CASE("unit eta through propensities equals the plain forest") {
  auto d = continuous_data(250, 6, 21);
  ForestConfig plain;
  plain.eta = 1.0;
  plain.n_tree = 5;
  ForestConfig routed = plain;
  routed.propensity_at_unit_eta = true;
  auto a = fit_forest(d, plain, 9);
  auto b = fit_forest(d, routed, 9);
  REQUIRE(a.trees.size() == b.trees.size());
  for (std::size_t t = 0; t < a.trees.size(); ++t) CHECK(a.trees[t] == b.trees[t]);
}

TEST_CASE("forest determinism and serialization") {
  auto d = continuous_data(200, 6, 5);
  ForestConfig cfg;
  cfg.n_tree = 4;
  auto a = fit_forest(d, cfg, 17);
  auto b = fit_forest(d, cfg, 17);
  CHECK(to_json(a).dump() == to_json(b).dump());
  CHECK(mdi_importance(a) == mdi_importance(b));
  auto c = fit_forest(d, cfg, 18);
  CHECK(to_json(a).dump() != to_json(c).dump());

  auto round = forest_from_json(nlohmann::json::parse(to_json(a).dump()));
  CHECK(to_json(round).dump() == to_json(a).dump());
  for (Eigen::Index i = 0; i < 20; ++i) CHECK(round.predict_row(d.x, i) == a.predict_row(d.x, i));
  CHECK(round.adjustments == a.adjustments);

  CHECK_THROWS_AS(forest_from_json(nlohmann::json::parse(R"({"schema":"other"})")), ValidationError);
  Eigen::MatrixXd narrow(1, 3);
  CHECK_THROWS_AS(a.predict_row(narrow, 0), ValidationError);
}

TEST_CASE("golden fixture forest") {
  std::ifstream in(std::string(LOSAW_FIXTURE_DIR) + "/golden_forest.json");
  REQUIRE(in);
  auto f = forest_from_json(nlohmann::json::parse(in));
  Eigen::MatrixXd x(3, 2);
  x << 1.0, 0.5,   // right/right and right: (3 + 20) / 2
      0.5, -1.0,   // boundary values go left: (1 + 10) / 2
      0.7, -1.0;   // right/left and left: (2 + 10) / 2
  auto p = f.predict(x);
  CHECK(p(0) == 11.5);
  CHECK(p(1) == 5.5);
  CHECK(p(2) == 6.0);
  auto fi = mdi_importance(f);
  // Tree 1: 0.5*0.75*8 = 3 on x1, 1*0.25*4 = 1 on x2; tree 2 all on x2.
  CHECK(fi[0] == doctest::Approx(0.375));
  CHECK(fi[1] == doctest::Approx(0.625));
}

TEST_CASE("losaw forest runs on discrete data with adjustments") {
  Rng rng(3);
  auto joint = solve_discrete_joint(block_sigma(6), std::vector<DiscreteMarginal>(6, centered_binomial()));
  auto model = FeatureModel::discrete(joint, 1, 8, centered_binomial());
  Dataset d;
  d.x = model.sample(400, rng);
  d.y = regression(3, 8).evaluate(d.x) + gaussian_noise(400, 0.2, rng);
  d.kinds = model.kinds();
  ForestConfig cfg;
  cfg.n_tree = 5;
  auto f = fit_forest(d, cfg, 1);
  REQUIRE(f.adjustments.size() == 8);
  for (std::size_t p = 0; p < 8; ++p) {
    CHECK(f.adjustments[p].target == p);
    for (auto a : f.adjustments[p].adjusters) CHECK(a != p);
  }
  auto fi = mdi_importance(f);
  CHECK(fi.size() == 8);
}

TEST_CASE("split search scales near-linearly in N") {
  auto time_fit = [](std::size_t n) {
    auto d = continuous_data(n, 10, 99);
    ForestConfig cfg;
    cfg.n_tree = 4;
    cfg.max_depth = 4;  // same node count at both sizes
    cfg.threads = 1;
    double best = INFINITY;
    for (int rep = 0; rep < 5; ++rep) {
      auto t0 = std::chrono::steady_clock::now();
      fit_forest(d, cfg, 1);
      best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
  };
  const double t1 = time_fit(2000), t2 = time_fit(4000);
  CAPTURE(t1);
  CAPTURE(t2);
  CHECK(t2 <= 2.5 * t1);
}
