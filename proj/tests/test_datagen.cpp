#include "doctest.h"

#include <cmath>

#include "losaw/datagen.hpp"
#include "losaw/error.hpp"

using namespace losaw;

namespace {

DiscreteMarginal bernoulli_half() { return {{0.0, 1.0}, {0.5, 0.5}}; }

JointDistribution example_two_by_two() {
  Eigen::VectorXd p(4);
  p << 0.4, 0.1, 0.1, 0.4;
  return JointDistribution({bernoulli_half(), bernoulli_half()}, p);
}

}  // namespace

TEST_CASE("correlation templates") {
  auto s = block_sigma(10);
  CHECK(s(0, 1) == 0.4);
  CHECK(s(0, 2) == 0.8);
  CHECK(s(1, 2) == 0.8);
  CHECK(s(3, 4) == 0.9);
  CHECK(s(4, 5) == 0.9);
  CHECK(s(0, 5) == 0.2);
  CHECK(s(2, 3) == 0.2);
  CHECK(s(6, 7) == 0.0);
  CHECK(s(8, 8) == 1.0);
  CHECK(s.isApprox(s.transpose()));
  Eigen::LLT<Eigen::MatrixXd> llt(s);
  CHECK(llt.info() == Eigen::Success);

  auto e = example_sigma(0.5);
  CHECK(e(0, 1) == 0.5);
  CHECK(e(1, 0) == 0.5);
  CHECK(e(0, 2) == 0.8);
  CHECK(e(3, 4) == 0.8);
  CHECK_THROWS_AS(block_sigma(5), ValidationError);
}

TEST_CASE("multivariate normal sample covariance") {
  Rng rng(1);
  auto x = sample_mvn(block_sigma(6), 20000, rng);
  Eigen::MatrixXd c = x.rowwise() - x.colwise().mean();
  Eigen::MatrixXd cov = c.transpose() * c / static_cast<double>(x.rows() - 1);
  CHECK((cov - block_sigma(6)).cwiseAbs().maxCoeff() < 0.05);
  Eigen::MatrixXd bad = Eigen::MatrixXd::Identity(2, 2);
  bad(0, 1) = bad(1, 0) = 1.5;
  CHECK_THROWS_AS(sample_mvn(bad, 5, rng), NumericalError);
}

TEST_CASE("joint solver recovers the product measure for an identity target") {
  std::vector<DiscreteMarginal> m(4, centered_binomial());
  QpReport rep;
  auto j = solve_discrete_joint(Eigen::MatrixXd::Identity(4, 4), m, {}, &rep);
  auto prod = JointDistribution::product(m);
  CHECK(rep.objective < 1e-8);
  CHECK((j.prob() - prod.prob()).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("joint solver on a two by two table") {
  Eigen::MatrixXd t(2, 2);
  t << 1.0, 0.6, 0.6, 1.0;
  QpReport rep;
  auto j = solve_discrete_joint(t, {bernoulli_half(), bernoulli_half()}, {}, &rep);
  Eigen::VectorXd want(4);
  want << 0.4, 0.1, 0.1, 0.4;
  CHECK((j.prob() - want).cwiseAbs().maxCoeff() < 1e-5);
  CHECK(j.marginal_residual() < 1e-8);
  CHECK(j.simplex_residual() < 1e-8);
}

TEST_CASE("joint solver rejects oversized grids") {
  std::vector<DiscreteMarginal> m(7, centered_binomial());
  CHECK_THROWS_AS(solve_discrete_joint(Eigen::MatrixXd::Identity(7, 7), m), ValidationError);
}

TEST_CASE("discrete sampling follows the joint") {
  auto j = example_two_by_two();
  Rng rng(9);
  auto x = sample_joint(j, 40000, rng);
  double both = 0.0;
  for (Eigen::Index i = 0; i < x.rows(); ++i) both += (x(i, 0) == 1.0 && x(i, 1) == 1.0);
  CHECK(both / 40000.0 == doctest::Approx(0.4).epsilon(0.03));
}

TEST_CASE("marginal association and effect on the dependent table") {
  auto j = example_two_by_two();
  auto f = [](std::span<const double> x) { return x[0]; };
  auto mf = marginal_functions(j, f, 1);
  CHECK(*mf.association[0] == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(*mf.association[1] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(*mf.effect[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(*mf.effect[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("marginal effect with an interaction table") {
  auto j = JointDistribution::product({bernoulli_half(), bernoulli_half()});
  auto f = [](std::span<const double> x) {
    const double t[2][2] = {{0.0, -3.0}, {5.0, 2.0}};
    return t[static_cast<int>(x[0])][static_cast<int>(x[1])];
  };
  auto mf = marginal_functions(j, f, 1);
  CHECK(*mf.association[0] == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(*mf.effect[0] == doctest::Approx(2.5).epsilon(1e-12));
  CHECK(*mf.effect[1] == doctest::Approx(-0.5).epsilon(1e-12));
  auto m1 = marginal_functions(j, f, 0);
  CHECK(*m1.effect[0] == doctest::Approx(-1.5).epsilon(1e-12));
}

TEST_CASE("population weights reproduce the product measure") {
  auto j = example_two_by_two();
  auto prod = JointDistribution::product(j.marginals());
  for (std::size_t p = 0; p < 2; ++p) {
    auto w = population_losaw_weights(j, p);
    for (std::size_t a = 0; a < j.size(); ++a) {
      REQUIRE(w[a].has_value());
      CHECK(std::abs(j.prob()(a) * *w[a] - prod.prob()(a)) <= 1e-12);
    }
  }
  // Concordant cells 0.4 have weight 0.625, discordant 0.1 have weight 2.5.
  auto w = population_losaw_weights(j, 1);
  CHECK(*w[0] == doctest::Approx(0.625));
  CHECK(*w[1] == doctest::Approx(2.5));
}

TEST_CASE("regression functions") {
  std::vector<double> x(1000, 0.0);
  x[0] = 2.0;
  x[2] = 2.0;
  CHECK(regression(10, 1000)(x) == 1.0);
  CHECK(regression(9, 1000)(x) == 2.0);
  CHECK(regression(8, 1000)(x) == 4.0);
  std::vector<double> r{0.5, -0.2, 9.0, 1.0, 3.0};
  CHECK(regression(1, 5)(r) == 1.0);
  CHECK(regression(3, 5)(r) == doctest::Approx(0.3));
  CHECK(regression(5, 5)(r) == 0.0);
  CHECK(regression(6, 5)(r) == 1.0);
  CHECK(regression(7, 5)(r) == 1.0);
  auto s = regression(10, 50).signal;
  CHECK(s == std::vector<std::size_t>{0, 2, 10, 13, 30, 31, 32});
  CHECK_THROWS_AS(regression(11, 10), ValidationError);
  CHECK_THROWS_AS(regression(8, 12), ValidationError);
}

TEST_CASE("gd correlation block") {
  Rng rng(4);
  for (auto variant : {GdSigmaVariant::kOverwriteRandomBase, GdSigmaVariant::kTemplate}) {
    for (int rep = 0; rep < 20; ++rep) {
      auto b = sample_gd_block(rng, variant);
      CHECK(b.alpha > 0.7);
      CHECK(b.alpha < 1.0);
      CHECK(b.beta >= 0.0);
      CHECK(b.beta < 0.4);
      CHECK(b.sigma(0, 1) == b.alpha);
      CHECK(b.sigma(3, 0) == b.alpha);
      CHECK(b.sigma(0, 2) == b.beta);
      CHECK(b.sigma(4, 0) == b.beta);
      if (variant == GdSigmaVariant::kTemplate) CHECK(b.sigma(2, 4) == b.beta);
      Eigen::LLT<Eigen::MatrixXd> llt(b.sigma);
      CHECK(llt.info() == Eigen::Success);
    }
  }
  auto full = block_diagonal(Eigen::MatrixXd::Constant(5, 5, 0.3), 15);
  CHECK(full(5, 6) == 0.3);
  CHECK(full(4, 5) == 0.0);
}

TEST_CASE("feature models") {
  Rng rng(12);
  auto cont = FeatureModel::continuous(block_sigma(8));
  auto x = cont.sample(100, rng);
  CHECK(x.rows() == 100);
  CHECK(x.cols() == 8);
  auto joint = JointDistribution::product(std::vector<DiscreteMarginal>(2, centered_binomial()));
  auto disc = FeatureModel::discrete(joint, 2, 6, centered_binomial());
  auto kinds = disc.kinds();
  REQUIRE(kinds.size() == 6);
  for (auto& k : kinds) CHECK(k.is_discrete());
  auto d = disc.sample(50, rng);
  for (Eigen::Index i = 0; i < d.size(); ++i) CHECK((d(i) == -1.0 || d(i) == 0.0 || d(i) == 1.0));
  auto ind = disc.sample_independent(50, rng);
  CHECK(ind.cols() == 6);

  // f3 = X1 + X2 with corr 0.4 has variance 2.8.
  double v = signal_variance(cont, regression(3, 8), 10000, rng);
  CHECK(v == doctest::Approx(2.8).epsilon(0.08));
}
