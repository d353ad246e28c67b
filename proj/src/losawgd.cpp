#include "losaw/losawgd.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <random>

#include "losaw/error.hpp"
#include "losaw/weights.hpp"

namespace losaw {

DenseNet DenseNet::create(std::size_t inputs, std::span<const std::size_t> hidden, Rng& rng) {
  if (inputs == 0) throw ValidationError("network needs at least one input");
  DenseNet net;
  net.sizes.push_back(inputs);
  for (auto h : hidden) {
    if (h == 0) throw ValidationError("hidden layer width must be positive");
    net.sizes.push_back(h);
  }
  net.sizes.push_back(1);
  for (std::size_t l = 0; l + 1 < net.sizes.size(); ++l) {
    const auto fan_in = static_cast<double>(net.sizes[l]);
    const auto fan_out = static_cast<double>(net.sizes[l + 1]);
    const bool output = l + 2 == net.sizes.size();
    const double limit = output ? std::sqrt(6.0 / (fan_in + fan_out)) : std::sqrt(6.0 / fan_in);
    std::uniform_real_distribution<double> u(-limit, limit);
    Eigen::MatrixXd w(net.sizes[l + 1], net.sizes[l]);
    for (Eigen::Index i = 0; i < w.rows(); ++i)
      for (Eigen::Index j = 0; j < w.cols(); ++j) w(i, j) = u(rng);
    net.weights.push_back(std::move(w));
    net.biases.push_back(Eigen::VectorXd::Zero(static_cast<Eigen::Index>(net.sizes[l + 1])));
  }
  return net;
}

std::size_t DenseNet::num_parameters() const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < layers(); ++l) n += weights[l].size() + biases[l].size();
  return n;
}

void DenseNet::validate() const {
  if (sizes.size() < 2 || sizes.back() != 1) throw ValidationError("network must end in a single output");
  if (weights.size() != sizes.size() - 1 || biases.size() != weights.size())
    throw ValidationError("network layer count does not match its sizes");
  for (std::size_t l = 0; l < layers(); ++l) {
    if (static_cast<std::size_t>(weights[l].rows()) != sizes[l + 1] ||
        static_cast<std::size_t>(weights[l].cols()) != sizes[l] ||
        static_cast<std::size_t>(biases[l].size()) != sizes[l + 1])
      throw ValidationError("layer " + std::to_string(l + 1) + " has inconsistent shapes");
    if (!weights[l].allFinite() || !biases[l].allFinite())
      throw NumericalError("layer " + std::to_string(l + 1) + " has non-finite parameters");
  }
}

namespace {

// Pre-activations of every layer; rows are samples.
std::vector<Eigen::MatrixXd> forward_all(const DenseNet& net, const Eigen::MatrixXd& x) {
  if (static_cast<std::size_t>(x.cols()) != net.sizes.front())
    throw ValidationError("input has " + std::to_string(x.cols()) + " columns, network expects " +
                          std::to_string(net.sizes.front()));
  std::vector<Eigen::MatrixXd> z;
  z.reserve(net.layers());
  Eigen::MatrixXd a = x;
  for (std::size_t l = 0; l < net.layers(); ++l) {
    Eigen::MatrixXd zl = a * net.weights[l].transpose();
    zl.rowwise() += net.biases[l].transpose();
    if (l + 1 < net.layers()) a = zl.cwiseMax(0.0);
    z.push_back(std::move(zl));
  }
  return z;
}

// Backpropagates d_out (rows x 1) and fills parameter gradients when g is given.
Eigen::MatrixXd backprop(const DenseNet& net, const Eigen::MatrixXd& x, const std::vector<Eigen::MatrixXd>& z,
                         Eigen::MatrixXd d, NetGradients* g) {
  for (std::size_t l = net.layers(); l-- > 0;) {
    if (g) {
      const Eigen::MatrixXd a_prev = l == 0 ? x : Eigen::MatrixXd(z[l - 1].cwiseMax(0.0));
      g->weights[l] = d.transpose() * a_prev;
      g->biases[l] = d.colwise().sum().transpose();
    }
    Eigen::MatrixXd da = d * net.weights[l];
    if (l > 0) da = da.cwiseProduct((z[l - 1].array() > 0.0).cast<double>().matrix());
    d = std::move(da);
  }
  return d;
}

}  // namespace

Eigen::VectorXd DenseNet::predict(const Eigen::MatrixXd& x) const {
  return forward_all(*this, x).back().col(0);
}

NetGradients backward(const DenseNet& net, const Eigen::MatrixXd& x, const Eigen::VectorXd& y) {
  if (x.rows() == 0 || y.size() != x.rows()) throw ValidationError("batch and response sizes differ");
  const auto z = forward_all(net, x);
  const Eigen::VectorXd resid = z.back().col(0) - y;
  const double b = static_cast<double>(x.rows());
  NetGradients g;
  g.weights.resize(net.layers());
  g.biases.resize(net.layers());
  g.loss = resid.squaredNorm() / b;
  g.inputs = backprop(net, x, z, (2.0 / b) * resid, &g);
  return g;
}

Eigen::MatrixXd input_gradients(const DenseNet& net, const Eigen::MatrixXd& x) {
  const auto z = forward_all(net, x);
  return backprop(net, x, z, Eigen::MatrixXd::Ones(x.rows(), 1), nullptr);
}

void Adam::step(DenseNet& net, const NetGradients& g) {
  if (m_w.empty()) {
    for (std::size_t l = 0; l < net.layers(); ++l) {
      m_w.push_back(Eigen::MatrixXd::Zero(net.weights[l].rows(), net.weights[l].cols()));
      v_w.push_back(m_w.back());
      m_b.push_back(Eigen::VectorXd::Zero(net.biases[l].size()));
      v_b.push_back(m_b.back());
    }
  }
  ++t;
  const double c1 = 1.0 - std::pow(beta1, static_cast<double>(t));
  const double c2 = 1.0 - std::pow(beta2, static_cast<double>(t));
  auto update = [&](auto& param, auto& m, auto& v, const auto& grad) {
    m = beta1 * m + (1.0 - beta1) * grad;
    v = beta2 * v + (1.0 - beta2) * grad.cwiseProduct(grad);
    param.array() -= learning_rate * (m.array() / c1) / ((v.array() / c2).sqrt() + epsilon);
  };
  for (std::size_t l = 0; l < net.layers(); ++l) {
    update(net.weights[l], m_w[l], v_w[l], g.weights[l]);
    update(net.biases[l], m_b[l], v_b[l], g.biases[l]);
  }
}

std::vector<double> saliency(const DenseNet& net, const Eigen::MatrixXd& x, SaliencyMode mode) {
  const Eigen::MatrixXd g = input_gradients(net, x).cwiseAbs();
  const auto p = static_cast<std::size_t>(g.cols());
  std::vector<double> s(p);
  for (std::size_t j = 0; j < p; ++j) {
    const auto col = g.col(static_cast<Eigen::Index>(j));
    s[j] = mode == SaliencyMode::kClampPerSample ? col.cwiseMin(1.0).mean() : col.mean();
  }
  if (mode == SaliencyMode::kMinMax) {
    const auto [lo, hi] = std::minmax_element(s.begin(), s.end());
    const double a = *lo, range = *hi - *lo;
    for (auto& v : s) v = range > 0.0 ? (v - a) / range : 0.0;
  }
  const double total = std::accumulate(s.begin(), s.end(), 0.0);
  if (!(total > 0.0) || !std::isfinite(total)) return std::vector<double>(p, 1.0 / static_cast<double>(p));
  for (auto& v : s) v /= total;
  return s;
}

std::vector<std::size_t> draw_batch(std::span<const double> w, std::size_t batch, Rng& rng) {
  std::discrete_distribution<std::size_t> dist(w.begin(), w.end());
  std::vector<std::size_t> idx(batch);
  for (auto& i : idx) i = dist(rng);
  return idx;
}

void GdConfig::validate() const {
  if (batch == 0) throw ValidationError("batch: must be at least 1");
  if (!(learning_rate >= 0.0) || !std::isfinite(learning_rate))
    throw ValidationError("learning_rate: must be finite and nonnegative");
  if (!(corr_threshold >= 0.0 && corr_threshold <= 1.0)) throw ValidationError("corr_threshold: must lie in [0, 1]");
  for (auto h : hidden)
    if (h == 0) throw ValidationError("hidden: widths must be positive");
  EssConfig{eta, alpha}.validate();
}

nlohmann::json to_json(const GdConfig& cfg) {
  return {{"steps", cfg.steps},
          {"batch", cfg.batch},
          {"learning_rate", cfg.learning_rate},
          {"eta", cfg.eta},
          {"alpha", cfg.alpha},
          {"hidden", cfg.hidden},
          {"saliency", cfg.saliency_mode == SaliencyMode::kClampPerSample ? "clamp" : "minmax"},
          {"corr_threshold", cfg.corr_threshold},
          {"q_max", cfg.q_max},
          {"cache_propensity", cfg.cache_propensity},
          {"uniform_saliency", cfg.uniform_saliency},
          {"logistic_solver", cfg.propensity.solver == LogisticSolver::kNewton ? "newton" : "gradient_descent"}};
}

GdConfig gd_config_from_json(const nlohmann::json& j) {
  GdConfig c;
  try {
    c.steps = j.value("steps", c.steps);
    c.batch = j.value("batch", c.batch);
    c.learning_rate = j.value("learning_rate", c.learning_rate);
    c.eta = j.value("eta", c.eta);
    c.alpha = j.value("alpha", c.alpha);
    c.hidden = j.value("hidden", c.hidden);
    c.corr_threshold = j.value("corr_threshold", c.corr_threshold);
    c.q_max = j.value("q_max", c.q_max);
    c.cache_propensity = j.value("cache_propensity", c.cache_propensity);
    c.uniform_saliency = j.value("uniform_saliency", c.uniform_saliency);
    const std::string mode = j.value("saliency", std::string("clamp"));
    if (mode == "minmax") c.saliency_mode = SaliencyMode::kMinMax;
    else if (mode != "clamp") throw ValidationError("saliency: unknown value '" + mode + "'");
    const std::string solver = j.value("logistic_solver", std::string("newton"));
    if (solver == "gradient_descent") c.propensity.solver = LogisticSolver::kGradientDescent;
    else if (solver != "newton") throw ValidationError("logistic_solver: unknown value '" + solver + "'");
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("gd config: ") + e.what());
  }
  return c;
}

namespace {

Eigen::MatrixXd gather_rows(const Eigen::MatrixXd& x, std::span<const std::size_t> idx) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(idx.size()), x.cols());
  for (std::size_t i = 0; i < idx.size(); ++i) out.row(static_cast<Eigen::Index>(i)) = x.row(static_cast<Eigen::Index>(idx[i]));
  return out;
}

Eigen::VectorXd gather(const Eigen::VectorXd& y, std::span<const std::size_t> idx) {
  Eigen::VectorXd out(static_cast<Eigen::Index>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i) out(static_cast<Eigen::Index>(i)) = y(static_cast<Eigen::Index>(idx[i]));
  return out;
}

double multiplicity_ess(std::span<const std::size_t> idx) {
  std::map<std::size_t, double> counts;
  for (auto i : idx) counts[i] += 1.0;
  std::vector<double> c;
  c.reserve(counts.size());
  for (const auto& [k, v] : counts) c.push_back(v);
  return kish_ess(c);
}

void check_training_inputs(const Dataset& data, const DenseNet& net, const GdConfig& cfg) {
  cfg.validate();
  data.validate();
  net.validate();
  if (net.sizes.front() != data.p())
    throw ValidationError("network expects " + std::to_string(net.sizes.front()) + " inputs, dataset has " +
                          std::to_string(data.p()));
  if (data.n() == 0) throw ValidationError("dataset is empty");
}

}  // namespace

GdResult train_losawgd(const Dataset& data, DenseNet net, const GdConfig& cfg, std::uint64_t seed) {
  check_training_inputs(data, net, cfg);
  const std::size_t p = data.p();
  Rng feature_rng = make_rng(seed, "feature");
  Rng batch_rng = make_rng(seed, "batch");
  Adam opt;
  opt.learning_rate = cfg.learning_rate;

  const bool weighted = cfg.eta < 1.0;
  const std::vector<double> flat_fi(p, 1.0);
  const std::size_t q = cfg.q_max == 0 ? p : cfg.q_max;
  std::vector<AdjustmentSet> adjustments;
  if (weighted)
    for (std::size_t f = 0; f < p; ++f)
      adjustments.push_back(select_adjustment_features(data, f, flat_fi, q, cfg.corr_threshold));
  const auto rows = all_rows(data);
  const std::vector<double> uniform(data.n(), 1.0 / static_cast<double>(data.n()));
  std::map<std::size_t, std::vector<double>> cache;
  auto weights_for = [&](std::size_t f) -> std::vector<double> {
    if (!weighted) return uniform;
    if (cfg.cache_propensity)
      if (auto it = cache.find(f); it != cache.end()) return it->second;
    const auto model = fit_propensity(data, rows, adjustments[f], cfg.propensity);
    auto w = weights_from_propensities(stabilized_scores(model, data, rows), EssConfig{cfg.eta, cfg.alpha});
    if (cfg.cache_propensity) cache[f] = w;
    return w;
  };

  GdResult out;
  for (std::size_t d = 0; d < cfg.steps; ++d) {
    const auto s = cfg.uniform_saliency ? std::vector<double>(p, 1.0) : saliency(net, data.x, cfg.saliency_mode);
    std::discrete_distribution<std::size_t> pick(s.begin(), s.end());
    const std::size_t f = pick(feature_rng);
    const auto w = weights_for(f);
    const auto idx = draw_batch(w, cfg.batch, batch_rng);
    const auto g = backward(net, gather_rows(data.x, idx), gather(data.y, idx));
    opt.step(net, g);
    out.trace.push_back({d, f, multiplicity_ess(idx), g.loss});
  }
  net.validate();
  out.net = std::move(net);
  return out;
}

GdResult train_standard(const Dataset& data, DenseNet net, const GdConfig& cfg, std::uint64_t seed) {
  check_training_inputs(data, net, cfg);
  Rng shuffle_rng = make_rng(seed, "shuffle");
  Adam opt;
  opt.learning_rate = cfg.learning_rate;
  std::vector<std::size_t> order(data.n());
  std::size_t cursor = order.size();
  const std::size_t b = std::min(cfg.batch, data.n());
  GdResult out;
  for (std::size_t d = 0; d < cfg.steps; ++d) {
    if (cursor + b > order.size()) {
      std::iota(order.begin(), order.end(), std::size_t{0});
      std::shuffle(order.begin(), order.end(), shuffle_rng);
      cursor = 0;
    }
    const std::span<const std::size_t> idx(order.data() + cursor, b);
    cursor += b;
    const auto g = backward(net, gather_rows(data.x, idx), gather(data.y, idx));
    opt.step(net, g);
    out.trace.push_back({d, 0, static_cast<double>(b), g.loss});
  }
  net.validate();
  out.net = std::move(net);
  return out;
}

nlohmann::json to_json(const DenseNet& net) {
  nlohmann::json layers = nlohmann::json::array();
  for (std::size_t l = 0; l < net.layers(); ++l) {
    std::vector<double> w;
    w.reserve(net.weights[l].size());
    for (Eigen::Index i = 0; i < net.weights[l].rows(); ++i)
      for (Eigen::Index j = 0; j < net.weights[l].cols(); ++j) w.push_back(net.weights[l](i, j));
    std::vector<double> b(net.biases[l].data(), net.biases[l].data() + net.biases[l].size());
    layers.push_back({{"weights", w}, {"biases", b}});
  }
  return {{"schema", "losaw-net-v1"}, {"sizes", net.sizes}, {"layers", layers}};
}

DenseNet dense_net_from_json(const nlohmann::json& j) {
  DenseNet net;
  try {
    if (j.at("schema").get<std::string>() != "losaw-net-v1") throw ValidationError("unsupported network schema");
    net.sizes = j.at("sizes").get<std::vector<std::size_t>>();
    const auto& layers = j.at("layers");
    if (net.sizes.size() < 2 || layers.size() != net.sizes.size() - 1)
      throw ValidationError("network layer count does not match its sizes");
    for (std::size_t l = 0; l < layers.size(); ++l) {
      const auto w = layers[l].at("weights").get<std::vector<double>>();
      const auto b = layers[l].at("biases").get<std::vector<double>>();
      const auto rows = static_cast<Eigen::Index>(net.sizes[l + 1]), cols = static_cast<Eigen::Index>(net.sizes[l]);
      if (static_cast<Eigen::Index>(w.size()) != rows * cols || static_cast<Eigen::Index>(b.size()) != rows)
        throw ValidationError("layer " + std::to_string(l + 1) + " has the wrong number of parameters");
      Eigen::MatrixXd m(rows, cols);
      for (Eigen::Index i = 0; i < rows; ++i)
        for (Eigen::Index c = 0; c < cols; ++c) m(i, c) = w[static_cast<std::size_t>(i * cols + c)];
      net.weights.push_back(std::move(m));
      net.biases.push_back(Eigen::Map<const Eigen::VectorXd>(b.data(), rows));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("network: ") + e.what());
  }
  net.validate();
  return net;
}

void write_trace_csv(std::span<const GdTraceRow> trace, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << "step,feature,batch_ess,loss\n";
  for (const auto& r : trace)
    out << r.step << ',' << r.feature + 1 << ',' << format_double(r.batch_ess) << ',' << format_double(r.loss) << '\n';
}

}  // namespace losaw
