#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "losaw/datagen.hpp"
#include "losaw/dataset.hpp"
#include "losaw/forest.hpp"
#include "losaw/losawgd.hpp"

namespace losaw {

enum class Algorithm { kRf, kLosawRf, kGd, kLosawGd };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

enum class CorrelationFamily {
  kBlock,     // two 3-feature blocks plus an independent tail
  kExample,   // five features, pair (1,2) at example_a, 0.8 elsewhere
  kIdentity,  // independent features
  kGdBlocks,  // repeated random 5x5 blocks, one draw per run
};

std::string to_string(CorrelationFamily c);
CorrelationFamily correlation_from_string(const std::string& s);

struct ExperimentConfig {
  bool discrete = false;
  std::size_t n = 500;
  std::size_t n_test = 1000;
  std::size_t n_independent = 1000;
  std::size_t p = 10;
  double phi = 0.1;
  std::optional<double> noise_variance;  // fixed noise variance instead of phi * var f(X)
  int regression = 3;
  CorrelationFamily correlation = CorrelationFamily::kBlock;
  double example_a = 0.5;
  GdSigmaVariant gd_variant = GdSigmaVariant::kOverwriteRandomBase;
  // Noise on the independent-features set; defaults to on for network training only.
  std::optional<bool> noise_on_independent;
  Algorithm algorithm = Algorithm::kLosawRf;
  double eta = 0.25;
  double alpha = 0.01;
  ForestConfig forest;
  GdConfig gd;
  std::size_t runs = 1;
  std::uint64_t seed = 0;
  std::size_t threads = 0;
  std::string output;

  bool is_forest() const { return algorithm == Algorithm::kRf || algorithm == Algorithm::kLosawRf; }
  bool independent_noise() const { return noise_on_independent.value_or(!is_forest()); }
  ForestConfig resolved_forest() const;
  GdConfig resolved_gd() const;
  void validate() const;
};

nlohmann::json to_json(const ExperimentConfig& cfg);
// Unknown fields and out-of-range values raise ValidationError naming the field.
// The seed is required.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

struct GeneratedData {
  Dataset train;
  Dataset test;
  Dataset independent;
  RegressionSpec f;
  double noise_variance = 0.0;
};

// Training, test and independent-features sets of one Monte Carlo run.
GeneratedData generate_data(const ExperimentConfig& cfg, std::uint64_t run_seed);

std::uint64_t run_seed(const ExperimentConfig& cfg, std::size_t run);

struct RunResult {
  std::size_t run = 0;
  double r2_test = 0.0;
  double r2_ind = 0.0;
  double pr_auc = 0.0;
  double fi_gap = 0.0;
  std::vector<double> importance;
  double seconds = 0.0;  // fit time; kept out of the result files
};

RunResult run_single(const ExperimentConfig& cfg, std::size_t run);
// Rows sorted by run index.
std::vector<RunResult> run_experiment(const ExperimentConfig& cfg);

struct Summary {
  double r2_test = 0.0;
  double r2_ind = 0.0;
  double pr_auc = 0.0;
  double fi_gap = 0.0;
};

Summary summarize(const std::vector<RunResult>& rows);

// results.csv, results.json, timings.csv and config.resolved.json under dir.
void write_experiment(const ExperimentConfig& cfg, const std::vector<RunResult>& rows,
                      const std::filesystem::path& dir);

struct EtaSweepRow {
  double eta = 0.0;
  std::size_t runs = 0;
  double r2_test = 0.0;
  double r2_test_lo = 0.0;  // 2.5% and 97.5% empirical quantiles over runs
  double r2_test_hi = 0.0;
  double pr_auc = 0.0;
  double pr_auc_lo = 0.0;
  double pr_auc_hi = 0.0;
};

// losaw forest at each eta on paired data.
std::vector<EtaSweepRow> eta_sweep(const ExperimentConfig& cfg, const std::vector<double>& grid);
void write_eta_sweep(const std::vector<EtaSweepRow>& rows, const std::filesystem::path& csv_path);

// Configuration of the tradeoff study: ten Gaussian features, Y = X1 + X2 + N(0, 1).
ExperimentConfig tradeoff_config();

struct ReproduceOptions {
  std::size_t runs = 20;
  double n_factor = 1.0;  // scales training size
  std::size_t gd_p = 50;  // feature count substituted for the network table
  std::vector<int> regressions;  // empty keeps all
  std::vector<int> sizes;        // empty keeps all published N
  std::vector<double> phis;      // empty keeps all published phi
  std::uint64_t seed = 0;
  std::size_t threads = 0;
};

struct ReproduceRow {
  int regression = 0;
  double phi = 0.0;
  int n = 0;
  std::string metric;
  std::string algorithm;
  double published = 0.0;
  double reproduced = 0.0;
  double gap = 0.0;  // reproduced - published
};

std::vector<ReproduceRow> reproduce_table(const std::string& table_id, const ReproduceOptions& opts);
void write_reproduction(const std::vector<ReproduceRow>& rows, const std::filesystem::path& csv_path);

}  // namespace losaw
