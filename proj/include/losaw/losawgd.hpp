#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"

#include "losaw/dataset.hpp"
#include "losaw/propensity.hpp"
#include "losaw/rng.hpp"

namespace losaw {

// Fully connected regression network: rectifier on hidden layers, identity output.
struct DenseNet {
  std::vector<std::size_t> sizes;  // input, hidden..., 1
  std::vector<Eigen::MatrixXd> weights;  // layer l: sizes[l+1] x sizes[l]
  std::vector<Eigen::VectorXd> biases;

  // He-uniform hidden weights, Glorot-uniform output weights, zero biases.
  static DenseNet create(std::size_t inputs, std::span<const std::size_t> hidden, Rng& rng);

  std::size_t layers() const { return weights.size(); }
  std::size_t num_parameters() const;
  void validate() const;

  Eigen::VectorXd predict(const Eigen::MatrixXd& x) const;  // one prediction per row
  bool operator==(const DenseNet&) const = default;
};

struct NetGradients {
  std::vector<Eigen::MatrixXd> weights;
  std::vector<Eigen::VectorXd> biases;
  Eigen::MatrixXd inputs;  // d loss / d x, one row per sample
  double loss = 0.0;       // mean squared error
};

// Gradients of the mean squared error over the rows of x.
NetGradients backward(const DenseNet& net, const Eigen::MatrixXd& x, const Eigen::VectorXd& y);

// d f(x_i) / d x for every row: rows x inputs.
Eigen::MatrixXd input_gradients(const DenseNet& net, const Eigen::MatrixXd& x);

struct Adam {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;

  std::int64_t t = 0;
  std::vector<Eigen::MatrixXd> m_w, v_w;
  std::vector<Eigen::VectorXd> m_b, v_b;

  void step(DenseNet& net, const NetGradients& g);
};

enum class SaliencyMode {
  kClampPerSample,  // |df/dx_p| clamped to [0, 1] per sample, then averaged
  kMinMax,          // mean |df/dx_p| rescaled to [0, 1] over features
};

// Nonnegative, sums to 1; uniform when every entry vanishes.
std::vector<double> saliency(const DenseNet& net, const Eigen::MatrixXd& x,
                             SaliencyMode mode = SaliencyMode::kClampPerSample);

// B indices drawn with replacement with probabilities proportional to w.
std::vector<std::size_t> draw_batch(std::span<const double> w, std::size_t batch, Rng& rng);

struct GdConfig {
  std::size_t steps = 400;
  std::size_t batch = 254;
  double learning_rate = 1e-3;
  double eta = 0.2;
  double alpha = 0.01;
  std::vector<std::size_t> hidden = {64, 32};
  SaliencyMode saliency_mode = SaliencyMode::kClampPerSample;
  double corr_threshold = 0.1;
  std::size_t q_max = 0;  // 0 keeps every feature above the correlation threshold
  bool cache_propensity = false;
  bool uniform_saliency = false;  // draw target features uniformly
  PropensityOptions propensity;

  void validate() const;
};

nlohmann::json to_json(const GdConfig& cfg);
GdConfig gd_config_from_json(const nlohmann::json& j);

struct GdTraceRow {
  std::size_t step = 0;
  std::size_t feature = 0;
  double batch_ess = 0.0;  // Kish size of the batch multiplicities
  double loss = 0.0;       // batch loss before the update
};

struct GdResult {
  DenseNet net;
  std::vector<GdTraceRow> trace;
};

// Saliency-driven feature draws with losaw-weighted batches sampled with replacement.
GdResult train_losawgd(const Dataset& data, DenseNet net, const GdConfig& cfg, std::uint64_t seed);

// Uniform batches without replacement, reshuffled every epoch.
GdResult train_standard(const Dataset& data, DenseNet net, const GdConfig& cfg, std::uint64_t seed);

nlohmann::json to_json(const DenseNet& net);
DenseNet dense_net_from_json(const nlohmann::json& j);
void write_trace_csv(std::span<const GdTraceRow> trace, const std::filesystem::path& path);

}  // namespace losaw
