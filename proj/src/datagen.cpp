#include "losaw/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "losaw/error.hpp"

namespace losaw {

double DiscreteMarginal::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) m += levels[i] * probs[i];
  return m;
}

double DiscreteMarginal::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t i = 0; i < levels.size(); ++i) v += probs[i] * (levels[i] - m) * (levels[i] - m);
  return v;
}

DiscreteMarginal centered_binomial() { return {{-1.0, 0.0, 1.0}, {0.25, 0.5, 0.25}}; }
DiscreteMarginal binomial_two() { return {{0.0, 1.0, 2.0}, {0.25, 0.5, 0.25}}; }

Eigen::MatrixXd block_sigma(std::size_t p) {
  if (p < 6) throw ValidationError("block_sigma needs at least 6 features");
  Eigen::MatrixXd s = Eigen::MatrixXd::Identity(p, p);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      if (i < 3 && j < 3) s(i, j) = 0.8;
      else if (i >= 3 && j >= 3) s(i, j) = 0.9;
      else s(i, j) = 0.2;
    }
  s(0, 1) = s(1, 0) = 0.4;
  return s;
}

Eigen::MatrixXd example_sigma(double a) {
  Eigen::MatrixXd s = Eigen::MatrixXd::Constant(5, 5, 0.8);
  s.diagonal().setOnes();
  s(0, 1) = s(1, 0) = a;
  return s;
}

Eigen::MatrixXd sample_mvn(const Eigen::MatrixXd& sigma, std::size_t n, Rng& rng) {
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) throw NumericalError("covariance is not positive definite");
  Eigen::MatrixXd z(n, sigma.rows());
  std::normal_distribution<double> nd;
  for (Eigen::Index i = 0; i < z.rows(); ++i)
    for (Eigen::Index j = 0; j < z.cols(); ++j) z(i, j) = nd(rng);
  return z * llt.matrixL().transpose();
}

// ---------------------------------------------------------------- joints

JointDistribution::JointDistribution(std::vector<DiscreteMarginal> marginals, Eigen::VectorXd prob)
    : marginals_(std::move(marginals)), prob_(std::move(prob)) {
  std::size_t total = 1;
  strides_.assign(marginals_.size(), 1);
  for (std::size_t j = marginals_.size(); j-- > 0;) {
    const auto& m = marginals_[j];
    if (m.levels.size() != m.probs.size() || m.levels.empty())
      throw ValidationError("marginal levels and probabilities differ in length");
    strides_[j] = total;
    total *= m.levels.size();
  }
  if (static_cast<std::size_t>(prob_.size()) != total)
    throw ValidationError("joint has " + std::to_string(prob_.size()) + " atoms, grid has " + std::to_string(total));
}

JointDistribution JointDistribution::product(std::vector<DiscreteMarginal> marginals) {
  std::size_t total = 1;
  for (const auto& m : marginals) total *= m.levels.size();
  JointDistribution j(std::move(marginals), Eigen::VectorXd::Ones(total));
  for (std::size_t a = 0; a < total; ++a) {
    double p = 1.0;
    for (std::size_t d = 0; d < j.dims(); ++d) p *= j.marginals_[d].probs[j.level_code(a, d)];
    j.prob_(a) = p;
  }
  return j;
}

std::size_t JointDistribution::level_code(std::size_t atom, std::size_t j) const {
  return (atom / strides_[j]) % marginals_[j].levels.size();
}

double JointDistribution::value(std::size_t atom, std::size_t j) const {
  return marginals_[j].levels[level_code(atom, j)];
}

std::vector<double> JointDistribution::atom_values(std::size_t atom) const {
  std::vector<double> v(dims());
  for (std::size_t j = 0; j < dims(); ++j) v[j] = value(atom, j);
  return v;
}

namespace {

// Standardized atom values (size x dims) using the declared marginals.
Eigen::MatrixXd standardized_atoms(const JointDistribution& joint) {
  Eigen::MatrixXd z(joint.size(), joint.dims());
  for (std::size_t j = 0; j < joint.dims(); ++j) {
    const auto& m = joint.marginals()[j];
    const double mu = m.mean(), sd = std::sqrt(m.variance());
    if (!(sd > 0.0)) throw ValidationError("marginal has zero variance");
    for (std::size_t a = 0; a < joint.size(); ++a) z(a, j) = (joint.value(a, j) - mu) / sd;
  }
  return z;
}

}  // namespace

Eigen::MatrixXd JointDistribution::correlation() const {
  Eigen::MatrixXd x(size(), dims());
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t j = 0; j < dims(); ++j) x(a, j) = value(a, j);
  const double total = prob_.sum();
  Eigen::RowVectorXd mu = (prob_.transpose() * x) / total;
  Eigen::MatrixXd c = x.rowwise() - mu;
  Eigen::MatrixXd cov = c.transpose() * prob_.asDiagonal() * c / total;
  Eigen::VectorXd sd = cov.diagonal().cwiseSqrt();
  return sd.cwiseInverse().asDiagonal() * cov * sd.cwiseInverse().asDiagonal();
}

double JointDistribution::marginal_residual() const {
  double worst = 0.0;
  for (std::size_t j = 0; j < dims(); ++j) {
    std::vector<double> got(marginals_[j].levels.size(), 0.0);
    for (std::size_t a = 0; a < size(); ++a) got[level_code(a, j)] += prob_(a);
    for (std::size_t l = 0; l < got.size(); ++l) worst = std::max(worst, std::abs(got[l] - marginals_[j].probs[l]));
  }
  return worst;
}

double JointDistribution::simplex_residual() const {
  double neg = 0.0;
  for (Eigen::Index a = 0; a < prob_.size(); ++a) neg = std::max(neg, -prob_(a));
  return std::max(std::abs(prob_.sum() - 1.0), neg);
}

namespace {

// Projection onto {A p = c} intersected with the nonnegative orthant (Dykstra).
class FeasibleProjector {
 public:
  FeasibleProjector(const JointDistribution& grid, double tol) : tol_(tol) {
    std::size_t rows = 0;
    for (const auto& m : grid.marginals()) rows += m.levels.size();
    a_ = Eigen::MatrixXd::Zero(rows, grid.size());
    c_.resize(rows);
    std::size_t r = 0;
    for (std::size_t j = 0; j < grid.dims(); ++j) {
      const auto& m = grid.marginals()[j];
      for (std::size_t l = 0; l < m.levels.size(); ++l) c_(r + l) = m.probs[l];
      for (std::size_t at = 0; at < grid.size(); ++at) a_(r + grid.level_code(at, j), at) = 1.0;
      r += m.levels.size();
    }
    gram_pinv_ = (a_ * a_.transpose()).completeOrthogonalDecomposition().pseudoInverse();
  }

  Eigen::VectorXd affine(const Eigen::VectorXd& x) const {
    return x - a_.transpose() * (gram_pinv_ * (a_ * x - c_));
  }

  double residual(const Eigen::VectorXd& x) const { return (a_ * x - c_).cwiseAbs().maxCoeff(); }

  Eigen::VectorXd operator()(const Eigen::VectorXd& y) const {
    Eigen::VectorXd x = y, p = Eigen::VectorXd::Zero(y.size()), q = Eigen::VectorXd::Zero(y.size());
    for (int it = 0; it < 100000; ++it) {
      Eigen::VectorXd a = affine(x + p);
      p = x + p - a;
      Eigen::VectorXd xn = (a + q).cwiseMax(0.0);
      q = a + q - xn;
      const double move = (xn - x).cwiseAbs().maxCoeff();
      x = std::move(xn);
      if (move < 1e-15 || (it > 0 && residual(x) < tol_ && move < tol_)) break;
    }
    return x;
  }

 private:
  double tol_;
  Eigen::MatrixXd a_;
  Eigen::VectorXd c_;
  Eigen::MatrixXd gram_pinv_;
};

}  // namespace

JointDistribution solve_discrete_joint(const Eigen::MatrixXd& target, std::vector<DiscreteMarginal> marginals,
                                       const QpOptions& opts, QpReport* report) {
  const std::size_t m = marginals.size();
  if (static_cast<std::size_t>(target.rows()) != m || static_cast<std::size_t>(target.cols()) != m)
    throw ValidationError("target correlation does not match the number of marginals");
  for (const auto& mg : marginals) {
    double s = std::accumulate(mg.probs.begin(), mg.probs.end(), 0.0);
    if (std::abs(s - 1.0) > 1e-12) throw ValidationError("marginal probabilities must sum to one");
  }
  JointDistribution joint = JointDistribution::product(std::move(marginals));
  if (joint.size() > opts.max_atoms)
    throw ValidationError("grid has " + std::to_string(joint.size()) + " atoms, limit is " +
                          std::to_string(opts.max_atoms));

  const Eigen::MatrixXd z = standardized_atoms(joint);
  // Moment map M(v) = Z' diag(v) Z and its adjoint g_a = z_a' R z_a.
  auto moment = [&](const Eigen::VectorXd& v) -> Eigen::MatrixXd { return z.transpose() * v.asDiagonal() * z; };
  auto adjoint = [&](const Eigen::MatrixXd& r) -> Eigen::VectorXd { return ((z * r).cwiseProduct(z)).rowwise().sum(); };

  // Lipschitz constant of the gradient 2 M*(M(p) - T) by power iteration.
  Eigen::VectorXd v = Eigen::VectorXd::Ones(joint.size()).normalized();
  double lambda = 0.0;
  for (int it = 0; it < 500; ++it) {
    Eigen::VectorXd hv = adjoint(moment(v));
    const double nl = hv.norm();
    if (!(nl > 0.0)) break;
    v = hv / nl;
    if (std::abs(nl - lambda) <= 1e-10 * nl) {
      lambda = nl;
      break;
    }
    lambda = nl;
  }
  const double lip = 2.0 * lambda * 1.01;

  FeasibleProjector project(joint, opts.residual_tol * 0.01);
  auto objective = [&](const Eigen::VectorXd& v) { return (moment(v) - target).squaredNorm(); };
  // Accelerated projected gradient with function-value restart.
  Eigen::VectorXd p = joint.prob(), y = p;
  double t = 1.0, f_prev = objective(p), stationarity = 0.0;
  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    Eigen::VectorXd grad = 2.0 * adjoint(moment(y) - target);
    Eigen::VectorXd next = project(y - grad / lip);
    stationarity = (next - y).norm();
    const double f_next = objective(next);
    if (stationarity < opts.stationarity_tol && project.residual(next) < opts.residual_tol) {
      p = std::move(next);
      break;
    }
    if (f_next > f_prev) {
      t = 1.0;
      y = p;
      continue;
    }
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    y = next + ((t - 1.0) / t_next) * (next - p);
    p = std::move(next);
    t = t_next;
    f_prev = f_next;
  }
  if (it == opts.max_iterations)
    throw NumericalError("discrete joint solver hit the iteration cap (stationarity " +
                         std::to_string(stationarity) + ")");
  joint.prob() = p;
  if (report) {
    report->objective = (moment(p) - target).squaredNorm();
    report->stationarity = stationarity;
    report->iterations = it + 1;
  }
  return joint;
}

Eigen::MatrixXd sample_joint(const JointDistribution& joint, std::size_t n, Rng& rng) {
  std::vector<double> cdf(joint.size());
  double acc = 0.0;
  for (std::size_t a = 0; a < joint.size(); ++a) {
    acc += std::max(0.0, joint.prob()(a));
    cdf[a] = acc;
  }
  if (!(acc > 0.0)) throw NumericalError("joint distribution has no mass");
  std::uniform_real_distribution<double> u(0.0, acc);
  Eigen::MatrixXd out(n, joint.dims());
  for (std::size_t i = 0; i < n; ++i) {
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u(rng));
    std::size_t a = std::min<std::size_t>(it - cdf.begin(), joint.size() - 1);
    for (std::size_t j = 0; j < joint.dims(); ++j) out(i, j) = joint.value(a, j);
  }
  return out;
}

// ---------------------------------------------------------------- GD covariance

GdBlock sample_gd_block(Rng& rng, GdSigmaVariant variant) {
  std::normal_distribution<double> nd;
  std::uniform_real_distribution<double> ua(0.7, 1.0), ub(0.0, 0.4);
  for (int attempt = 1; attempt <= 1000; ++attempt) {
    Eigen::MatrixXd a(5, 5);
    for (int i = 0; i < 25; ++i) a(i) = nd(rng);
    Eigen::MatrixXd g = a * a.transpose();
    Eigen::VectorXd d = g.diagonal().cwiseSqrt().cwiseInverse();
    Eigen::MatrixXd s = d.asDiagonal() * g * d.asDiagonal();
    const double alpha = ua(rng), beta = ub(rng);
    auto set = [&](int i, int j, double v) { s(i, j) = s(j, i) = v; };
    if (variant == GdSigmaVariant::kTemplate)
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) set(i, j, beta);
    set(0, 2, beta);
    set(0, 4, beta);
    set(0, 1, alpha);
    set(0, 3, alpha);
    s.diagonal().setOnes();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(s, Eigen::EigenvaluesOnly);
    if (eig.eigenvalues().minCoeff() > 1e-6) return {s, alpha, beta, attempt};
  }
  throw NumericalError("no positive definite correlation block within 1000 draws");
}

Eigen::MatrixXd block_diagonal(const Eigen::MatrixXd& block, std::size_t p) {
  const std::size_t b = static_cast<std::size_t>(block.rows());
  if (b == 0 || p % b != 0) throw ValidationError("p must be a multiple of the block size");
  Eigen::MatrixXd s = Eigen::MatrixXd::Zero(p, p);
  for (std::size_t k = 0; k < p; k += b) s.block(k, k, b, b) = block;
  return s;
}

// ---------------------------------------------------------------- regressions

namespace {

double ind(double v, double t) { return v >= t ? 1.0 : 0.0; }

std::vector<std::size_t> interaction_signal(std::size_t p) {
  if (p >= 603) return {0, 2, 200, 203, 600, 601, 602};
  // Same block layout scaled to p / 5 blocks.
  if (p % 5 != 0 || p < 25)
    throw ValidationError("f8-f10 need p >= 603, or p a multiple of 5 and at least 25");
  const std::size_t nb = p / 5;
  const std::size_t b2 = 40 * nb / 200, b3 = 120 * nb / 200;
  return {0, 2, 5 * b2, 5 * b2 + 3, 5 * b3, 5 * b3 + 1, 5 * b3 + 2};
}

}  // namespace

RegressionSpec regression(int id, std::size_t p) {
  RegressionSpec r;
  r.id = id;
  switch (id) {
    case 1: r.signal = {3}; break;
    case 2: r.signal = {0, 3}; break;
    case 3: r.signal = {0, 1}; break;
    case 4: r.signal = {0, 1, 3}; break;
    case 5: r.signal = {0, 1}; break;
    case 6: r.signal = {0, 3}; break;
    case 7: r.signal = {0, 1, 3}; break;
    case 8:
    case 9:
    case 10: r.signal = interaction_signal(p); break;
    default: throw ValidationError("regression id must be in 1..10, got " + std::to_string(id));
  }
  for (auto s : r.signal)
    if (s >= p) throw ValidationError("f" + std::to_string(id) + " needs at least " + std::to_string(s + 1) + " features");
  return r;
}

double RegressionSpec::operator()(std::span<const double> x) const {
  const auto& s = signal;
  switch (id) {
    case 1: return x[3];
    case 2: return x[0] + x[3];
    case 3: return x[0] + x[1];
    case 4: return x[0] + x[1] + x[3];
    case 5: return ind(x[0], 0) * ind(x[1], 0);
    case 6: return ind(x[0], 0) * ind(x[3], 0);
    case 7: return ind(x[0], 0) * ind(x[1], 0) + ind(x[3], 0);
    case 8: {
      double t = 0.0;
      for (auto i : s) t += x[i];
      return t;
    }
    case 9: {
      double t = 0.0;
      for (auto i : s) t += ind(x[i], 1);
      return t;
    }
    case 10:
      return ind(x[s[0]], 1) * ind(x[s[1]], 1) + ind(x[s[2]], 1) * ind(x[s[3]], 1) +
             ind(x[s[4]], 1) * ind(x[s[5]], 1) * ind(x[s[6]], 1);
  }
  throw ValidationError("unknown regression id");
}

Eigen::VectorXd RegressionSpec::evaluate(const Eigen::MatrixXd& x) const {
  Eigen::VectorXd out(x.rows());
  std::vector<double> row(x.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) row[j] = x(i, j);
    out(i) = (*this)(row);
  }
  return out;
}

// ---------------------------------------------------------------- feature models

FeatureModel FeatureModel::continuous(Eigen::MatrixXd sigma) {
  FeatureModel m;
  m.p_ = static_cast<std::size_t>(sigma.rows());
  Eigen::LLT<Eigen::MatrixXd> llt(sigma);
  if (llt.info() != Eigen::Success) throw NumericalError("covariance is not positive definite");
  m.chol_ = llt.matrixL();
  return m;
}

FeatureModel FeatureModel::discrete(JointDistribution block, std::size_t n_blocks, std::size_t p, DiscreteMarginal tail) {
  if (block.dims() * n_blocks > p) throw ValidationError("blocks exceed the number of features");
  FeatureModel m;
  m.discrete_ = true;
  m.p_ = p;
  m.block_ = std::move(block);
  m.n_blocks_ = n_blocks;
  m.tail_ = std::move(tail);
  return m;
}

std::vector<FeatureKind> FeatureModel::kinds() const {
  std::vector<FeatureKind> k;
  for (std::size_t j = 0; j < p_; ++j) {
    if (!discrete_) {
      k.push_back(FeatureKind::continuous());
    } else if (j < block_.dims() * n_blocks_) {
      k.push_back(FeatureKind::discrete(block_.marginals()[j % block_.dims()].levels));
    } else {
      k.push_back(FeatureKind::discrete(tail_.levels));
    }
  }
  return k;
}

namespace {

void fill_iid(Eigen::MatrixXd& x, std::size_t col, const DiscreteMarginal& m, Rng& rng) {
  std::discrete_distribution<std::size_t> d(m.probs.begin(), m.probs.end());
  for (Eigen::Index i = 0; i < x.rows(); ++i) x(i, col) = m.levels[d(rng)];
}

}  // namespace

Eigen::MatrixXd FeatureModel::sample(std::size_t n, Rng& rng) const {
  if (!discrete_) {
    Eigen::MatrixXd z(n, p_);
    std::normal_distribution<double> nd;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < p_; ++j) z(i, j) = nd(rng);
    return z * chol_.transpose();
  }
  Eigen::MatrixXd x(n, p_);
  const std::size_t b = block_.dims();
  for (std::size_t k = 0; k < n_blocks_; ++k) x.middleCols(k * b, b) = sample_joint(block_, n, rng);
  for (std::size_t j = b * n_blocks_; j < p_; ++j) fill_iid(x, j, tail_, rng);
  return x;
}

Eigen::MatrixXd FeatureModel::sample_independent(std::size_t n, Rng& rng) const {
  Eigen::MatrixXd x(n, p_);
  if (!discrete_) {
    std::normal_distribution<double> nd;
    for (std::size_t j = 0; j < p_; ++j) {
      const double sd = chol_.row(j).norm();
      for (std::size_t i = 0; i < n; ++i) x(i, j) = sd * nd(rng);
    }
    return x;
  }
  const std::size_t b = block_.dims();
  for (std::size_t j = 0; j < p_; ++j)
    fill_iid(x, j, j < b * n_blocks_ ? block_.marginals()[j % b] : tail_, rng);
  return x;
}

double signal_variance(const FeatureModel& model, const RegressionSpec& f, std::size_t n, Rng& rng) {
  Eigen::VectorXd v = f.evaluate(model.sample(n, rng));
  const double mean = v.mean();
  return (v.array() - mean).square().sum() / static_cast<double>(n - 1);
}

Eigen::VectorXd gaussian_noise(std::size_t n, double variance, Rng& rng) {
  if (variance < 0.0) throw ValidationError("noise variance must be nonnegative");
  std::normal_distribution<double> nd(0.0, std::sqrt(variance));
  Eigen::VectorXd e(n);
  for (std::size_t i = 0; i < n; ++i) e(i) = nd(rng);
  return e;
}

// ---------------------------------------------------------------- population quantities

MarginalFunctions marginal_functions(const JointDistribution& joint,
                                     const std::function<double(std::span<const double>)>& f, std::size_t p) {
  if (p >= joint.dims()) throw ValidationError("feature index out of range");
  const auto& levels = joint.marginals()[p].levels;
  const std::size_t k = levels.size();
  MarginalFunctions out;
  out.levels = levels;
  std::vector<double> mass(k, 0.0), assoc(k, 0.0), eff(k, 0.0);
  double total = 0.0;
  for (std::size_t a = 0; a < joint.size(); ++a) {
    const double pa = joint.prob()(a);
    if (pa == 0.0) continue;
    auto x = joint.atom_values(a);
    const std::size_t c = joint.level_code(a, p);
    mass[c] += pa;
    assoc[c] += pa * f(x);
    total += pa;
    for (std::size_t l = 0; l < k; ++l) {
      x[p] = levels[l];
      eff[l] += pa * f(x);
    }
  }
  for (std::size_t l = 0; l < k; ++l) {
    out.association.push_back(mass[l] > 0.0 ? std::optional<double>(assoc[l] / mass[l]) : std::nullopt);
    out.effect.push_back(eff[l] / total);
  }
  return out;
}

std::vector<std::optional<double>> population_losaw_weights(const JointDistribution& joint, std::size_t p) {
  if (p >= joint.dims()) throw ValidationError("feature index out of range");
  const std::size_t k = joint.marginals()[p].levels.size();
  // Mass of X_-p patterns, keyed by the atom index with feature p zeroed out.
  std::vector<double> rest(joint.size(), 0.0), marg(k, 0.0);
  std::size_t stride = 1;
  for (std::size_t j = p + 1; j < joint.dims(); ++j) stride *= joint.marginals()[j].levels.size();
  for (std::size_t a = 0; a < joint.size(); ++a) {
    const std::size_t c = joint.level_code(a, p);
    rest[a - c * stride] += joint.prob()(a);
    marg[c] += joint.prob()(a);
  }
  std::vector<std::optional<double>> w(joint.size());
  for (std::size_t a = 0; a < joint.size(); ++a) {
    const double pa = joint.prob()(a);
    if (!(pa > 0.0)) continue;
    const std::size_t c = joint.level_code(a, p);
    const double cond = pa / rest[a - c * stride];
    w[a] = marg[c] / cond;
  }
  return w;
}

}  // namespace losaw
