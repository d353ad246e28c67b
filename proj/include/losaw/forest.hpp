#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "json.hpp"
#include "losaw/dataset.hpp"
#include "losaw/propensity.hpp"
#include "losaw/rng.hpp"

namespace losaw {

// Splits whose relative impurity decrease differ by at most this are ties.
inline constexpr double kSplitTieTolerance = 1e-12;

// Weighted impurity decrease of a split with left weight sum w_left and left
// weighted response sum t_left, for a node with totals t_total and w_total.
double impurity_decrease(double t_left, double w_left, double t_total, double w_total = 1.0);

struct SplitCandidate {
  double value = 0.0;      // go left when x <= value
  double delta_rel = 0.0;  // impurity decrease relative to the node's weighted MSE
  std::size_t left_count = 0;
};

// Best split of `rows` on one feature under weights w (aligned with rows).
// Continuous and discrete features both split at observed values. Children
// need at least min_leaf rows and positive weight.
std::optional<SplitCandidate> best_split(const Dataset& data, std::span<const std::size_t> rows,
                                         std::span<const double> w, std::size_t feature, std::size_t min_leaf = 1);

struct SplitDecision {
  std::size_t feature = 0;
  double value = 0.0;
  double delta_rel = 0.0;
};

// Weights for a candidate feature over the node rows, or nullopt to skip it.
using WeightProvider = std::function<std::optional<std::vector<double>>(std::size_t feature)>;

// Argmax of delta_rel over candidates; ties go to the lowest feature index,
// then the lowest split value.
std::optional<SplitDecision> select_split(const Dataset& data, std::span<const std::size_t> rows,
                                          std::span<const std::size_t> candidates, std::size_t min_leaf,
                                          const WeightProvider& weights);

enum class ImportanceScale {
  kUnweightedVariance,  // node response variance
  kWeightedMse,         // weighted MSE under the chosen feature's weights
};

struct ForestConfig {
  std::size_t n_tree = 100;
  std::size_t max_depth = 10;
  std::size_t min_leaf = 5;
  std::size_t mtry = 0;  // 0 selects floor(P / 3), at least 1
  double eta = 0.25;     // 1 gives a plain random forest
  double alpha = 0.01;
  std::size_t q_max = 10;
  double corr_threshold = 0.1;
  ImportanceScale importance_scale = ImportanceScale::kUnweightedVariance;
  // Route eta = 1 through propensity fitting instead of the uniform shortcut.
  bool propensity_at_unit_eta = false;
  std::size_t threads = 0;  // 0 uses the hardware concurrency
  PropensityOptions propensity;

  std::size_t resolved_mtry(std::size_t p) const;
  bool uses_propensity() const { return eta < 1.0 || propensity_at_unit_eta; }
  void validate(std::size_t p) const;
};

nlohmann::json to_json(const ForestConfig& cfg);
ForestConfig forest_config_from_json(const nlohmann::json& j);

struct TreeNode {
  int feature = -1;  // -1 marks a leaf
  double value = 0.0;
  double delta_rel = 0.0;
  double mse = 0.0;
  std::size_t n = 0;
  double prediction = 0.0;  // unweighted mean response of the node sample
  int left = -1;
  int right = -1;

  bool operator==(const TreeNode&) const = default;
};

struct Tree {
  std::vector<TreeNode> nodes;  // nodes[0] is the root

  template <class Row>
  double predict(const Row& x) const {
    int k = 0;
    while (nodes[k].feature >= 0) k = x(nodes[k].feature) <= nodes[k].value ? nodes[k].left : nodes[k].right;
    return nodes[k].prediction;
  }
  bool operator==(const Tree&) const = default;
};

// Shared inputs for growing the trees of one forest.
struct TreeContext {
  std::vector<AdjustmentSet> adjustments;  // one per feature
  std::vector<NormalParams> marginals;     // full-sample normal fit per feature
};

Tree grow_tree(const Dataset& data, std::span<const std::size_t> sample, const ForestConfig& cfg,
               const TreeContext& ctx, Rng& mtry_rng);

struct Forest {
  ForestConfig config;
  std::size_t n_features = 0;
  std::uint64_t seed = 0;
  std::vector<AdjustmentSet> adjustments;
  std::vector<Tree> trees;

  double predict_row(const Eigen::MatrixXd& x, Eigen::Index row) const;
  Eigen::VectorXd predict(const Eigen::MatrixXd& x) const;
};

// Adjustment sets from the MDI of a preliminary plain forest on the same data.
std::vector<AdjustmentSet> preliminary_adjustments(const Dataset& data, const ForestConfig& cfg, std::uint64_t seed);

// When cfg uses propensities and adjustments is empty, they come from preliminary_adjustments.
Forest fit_forest(const Dataset& data, const ForestConfig& cfg, std::uint64_t seed,
                  std::vector<AdjustmentSet> adjustments = {});

// Per-tree normalized sums of delta_rel * mse * n over nodes split on each
// feature, averaged over trees. Trees without splits contribute zeros.
std::vector<double> mdi_importance(const Forest& forest);

nlohmann::json to_json(const Forest& forest);
Forest forest_from_json(const nlohmann::json& j);

// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, std::size_t threads, const std::function<void(std::size_t)>& fn);

}  // namespace losaw
