#include "doctest.h"

#include <random>

#include "losaw/weights.hpp"
#include "oracles.hpp"

using namespace losaw;

TEST_CASE("kish ess examples") {
  std::vector<double> uniform(4, 0.25);
  CHECK(kish_ess(uniform) == doctest::Approx(4.0).epsilon(1e-12));
  std::vector<double> point{1, 0, 0, 0, 0};
  CHECK(kish_ess(point) == doctest::Approx(1.0).epsilon(1e-12));
  std::vector<double> mixed{0.5, 0.25, 0.25};
  CHECK(kish_ess(mixed) == doctest::Approx(1.0 / 0.375).epsilon(1e-12));
  std::vector<double> zero(3, 0.0);
  CHECK_THROWS_AS(kish_ess(zero), NumericalError);
}

TEST_CASE("cap and redistribute examples") {
  auto a = cap_and_redistribute(std::vector<double>{0.7, 0.1, 0.1, 0.1}, 0.4);
  CHECK(a[0] == doctest::Approx(0.4).epsilon(1e-12));
  for (int i = 1; i < 4; ++i) CHECK(a[i] == doctest::Approx(0.2).epsilon(1e-12));

  std::vector<double> u(4, 0.25);
  CHECK(cap_and_redistribute(u, 0.3) == u);

  auto b = cap_and_redistribute(std::vector<double>{0.9, 0.05, 0.03, 0.02}, 0.25);
  for (double v : b) CHECK(v == doctest::Approx(0.25).epsilon(1e-12));

  CHECK_THROWS_AS(cap_and_redistribute(u, 0.2), ValidationError);
}

TEST_CASE("cap and redistribute matches the fixed-point oracle") {
  std::mt19937_64 g(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 500; ++rep) {
    std::size_t n = 2 + g() % 60;
    auto w = oracle::random_simplex(g, n, 1.0 + 3.0 * unit(g));
    double theta = (1.0 / n) + unit(g) * (1.0 - 1.0 / n);
    auto got = cap_and_redistribute(w, theta);
    auto want = oracle::capped_fixed_point(w, theta);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      CHECK(got[i] == doctest::Approx(want[i]).epsilon(1e-9));
      CHECK(got[i] <= theta + 1e-12);
      sum += got[i];
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    // Entries already at or below theta never decrease.
    for (std::size_t i = 0; i < n; ++i)
      if (w[i] <= theta) CHECK(got[i] >= w[i] - 1e-15);
  }
}

TEST_CASE("threshold search lands in the tolerance band") {
  std::mt19937_64 g(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 300; ++rep) {
    std::size_t n = 5 + g() % 200;
    auto w = oracle::random_simplex(g, n, 2.0 + 4.0 * unit(g));
    EssConfig cfg{0.1 + 0.8 * unit(g), 0.01};
    if (oracle::ess(w) / n >= cfg.eta) continue;
    auto r = search_threshold(w, cfg);
    double s = oracle::ess(r.weights) / n;
    CHECK(std::abs(s - cfg.eta) <= cfg.alpha + 1e-12);
    CHECK(r.iterations <= 64);
  }
}

TEST_CASE("weights from propensities") {
  EssConfig loose{0.1, 0.01};
  auto w = weights_from_propensities(std::vector<double>{2, 1, 1}, loose);
  CHECK(w[0] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(w[1] == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(w[2] == doctest::Approx(0.4).epsilon(1e-12));

  EssConfig tight{0.9, 0.01};
  auto v = weights_from_propensities(std::vector<double>{100, 1, 1, 1}, tight);
  double s = relative_ess(v);
  CHECK(s >= 0.89);
  CHECK(s <= 0.91);

  CHECK_THROWS_AS(weights_from_propensities(std::vector<double>{1, 0, 1}, loose), ValidationError);
  CHECK_THROWS_AS(weights_from_propensities(std::vector<double>{1, -2, 1}, loose), ValidationError);

  EssConfig one{1.0, 0.01};
  auto u = weights_from_propensities(std::vector<double>{0.1, 5, 3}, one);
  for (double x : u) CHECK(x == 1.0 / 3.0);

  EssConfig none{0.0, 0.01};
  auto raw = weights_from_propensities(std::vector<double>{4, 1}, none);
  CHECK(raw[0] == doctest::Approx(0.2).epsilon(1e-12));
}

TEST_CASE("weight properties on random propensities") {
  std::mt19937_64 g(2024);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int rep = 0; rep < 1000; ++rep) {
    std::size_t n = 1 + g() % 300;
    std::vector<double> p(n);
    double spread = 1.0 + 8.0 * unit(g);
    for (auto& v : p) v = std::exp(spread * (unit(g) - 0.5));
    EssConfig cfg{0.05 + 0.9 * unit(g), 0.01};
    auto w = weights_from_propensities(p, cfg);
    double sum = 0.0;
    for (double v : w) {
      CHECK(v >= 0.0);
      sum += v;
    }
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    double s = oracle::ess(w) / n;
    CHECK(s >= cfg.eta - cfg.alpha - 1e-12);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS((EssConfig{1.5, 0.01}).validate(), ValidationError);
  CHECK_THROWS_AS((EssConfig{0.2, 0.0}).validate(), ValidationError);
  CHECK_THROWS_AS((EssConfig{0.2, 0.3}).validate(), ValidationError);
}
