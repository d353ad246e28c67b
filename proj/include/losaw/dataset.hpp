#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include "json.hpp"

namespace losaw {

class FeatureKind {
 public:
  static FeatureKind continuous() { return FeatureKind(); }
  static FeatureKind discrete(std::vector<double> levels);

  bool is_discrete() const { return discrete_; }
  const std::vector<double>& levels() const { return levels_; }
  std::size_t num_levels() const { return levels_.size(); }
  // Index of an exact level value, nullopt when the value is not a level.
  std::optional<std::size_t> level_index(double value) const;

  bool operator==(const FeatureKind&) const = default;

 private:
  bool discrete_ = false;
  std::vector<double> levels_;
};

nlohmann::json to_json(const FeatureKind& kind);
FeatureKind feature_kind_from_json(const nlohmann::json& j);

// Column-major design matrix (N x P) plus response.
struct Dataset {
  Eigen::MatrixXd x;
  Eigen::VectorXd y;
  std::vector<FeatureKind> kinds;
  nlohmann::json meta = nlohmann::json::object();

  std::size_t n() const { return static_cast<std::size_t>(x.rows()); }
  std::size_t p() const { return static_cast<std::size_t>(x.cols()); }

  // Throws ValidationError on shape mismatch, non-finite values or off-level discrete values.
  void validate() const;
};

// CSV holds x1..xP,y; the JSON sidecar (<path>.json) holds kinds and metadata.
void write_dataset(const Dataset& data, const std::filesystem::path& csv_path);
Dataset read_dataset(const std::filesystem::path& csv_path);

std::string format_double(double v);

}  // namespace losaw
