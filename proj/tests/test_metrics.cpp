#include "doctest.h"

#include <algorithm>
#include <random>

#include "losaw/error.hpp"
#include "losaw/metrics.hpp"

using namespace losaw;

TEST_CASE("r squared") {
  std::vector<double> y{0, 1, 2}, yh{0, 1, 1};
  CHECK(r_squared(y, yh) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r_squared(y, y) == 1.0);
  std::vector<double> c{3, 3, 3};
  CHECK_THROWS_AS(r_squared(c, yh), NumericalError);
}

TEST_CASE("pr auc") {
  std::vector<std::size_t> sig{0, 1};
  std::vector<double> perfect{0.9, 0.8, 0.1, 0.05, 0.0, 0.0};
  CHECK(pr_auc(perfect, sig) == doctest::Approx(1.0));
  std::vector<double> flat(6, 0.3);
  CHECK(pr_auc(flat, sig) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  // Two noise features ahead of both signals.
  std::vector<double> late{0.1, 0.05, 0.9, 0.8, 0.0, 0.0};
  CHECK(pr_auc(late, sig) == doctest::Approx(5.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("pr auc is invariant under strictly increasing transforms") {
  std::mt19937_64 g(3);
  std::normal_distribution<double> n01;
  for (int rep = 0; rep < 200; ++rep) {
    std::size_t p = 3 + g() % 30;
    std::vector<double> fi(p);
    for (auto& v : fi) v = std::round(n01(g) * 4.0) / 4.0;  // rounding creates ties
    std::vector<std::size_t> sig{0};
    if (p > 4) sig.push_back(3);
    std::vector<double> t(p);
    for (std::size_t i = 0; i < p; ++i) t[i] = std::exp(2.0 * fi[i]) + 7.0;
    CHECK(pr_auc(fi, sig) == doctest::Approx(pr_auc(t, sig)).epsilon(1e-14));
  }
}

TEST_CASE("fi gap") {
  std::vector<double> fi{1.0, 0.8, 0.3, 0.1};
  std::vector<std::size_t> sig{0, 1};
  CHECK(fi_gap(fi, sig) == doctest::Approx(0.7).epsilon(1e-12));
  auto mm = minmax_normalize(std::vector<double>{4.0, 2.0, 0.0, 1.0});
  CHECK(fi_gap(mm, sig) == doctest::Approx((1.0 + 0.5) / 2 - 0.125).epsilon(1e-12));
  std::vector<double> bad{2.0, 0.1, 0.0};
  CHECK_THROWS_AS(fi_gap(bad, sig), ValidationError);
}

TEST_CASE("weighted correlation") {
  std::vector<double> a{1, 2, 3, 4}, b{2, 4, 6, 8}, w{1, 1, 1, 1};
  CHECK(weighted_corr(a, b, w) == doctest::Approx(1.0));
  std::vector<double> c{1, 1, 1, 1};
  CHECK_THROWS_AS(weighted_corr(a, c, w), NumericalError);
  // Integer weights equal row replication.
  std::vector<double> a2{1, 2, 2, 3, 3, 3}, b2{0, 5, 5, 1, 1, 1};
  std::vector<double> a1{1, 2, 3}, b1{0, 5, 1}, w1{1, 2, 3};
  CHECK(weighted_corr(a1, b1, w1) == doctest::Approx(pearson_corr(a2, b2)).epsilon(1e-12));
}
