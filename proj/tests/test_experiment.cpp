#include "doctest.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "losaw/error.hpp"
#include "losaw/experiment.hpp"
#include "losaw/metrics.hpp"
#include "losaw/reference_tables.hpp"

using namespace losaw;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  auto p = fs::temp_directory_path() / ("losaw_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

ExperimentConfig tiny(Algorithm a = Algorithm::kLosawRf) {
  ExperimentConfig c;
  c.n = 120;
  c.n_test = 60;
  c.n_independent = 60;
  c.p = 6;
  c.regression = 3;
  c.algorithm = a;
  c.forest.n_tree = 5;
  c.forest.threads = 1;
  c.gd.steps = 5;
  c.gd.batch = 16;
  c.gd.hidden = {4};
  c.runs = 2;
  c.seed = 9;
  c.threads = 1;
  return c;
}

}  // namespace

TEST_CASE("config parsing and validation") {
  auto j = to_json(tiny());
  auto back = experiment_config_from_json(j);
  CHECK(to_json(back) == j);

  auto missing = j;
  missing.erase("seed");
  CHECK_THROWS_WITH_AS(experiment_config_from_json(missing), "seed: required", ValidationError);

  auto unknown = j;
  unknown["tress"] = 3;
  CHECK_THROWS_WITH_AS(experiment_config_from_json(unknown), "tress: unknown field", ValidationError);

  auto nested = j;
  nested["forest"]["depth"] = 3;
  CHECK_THROWS_WITH_AS(experiment_config_from_json(nested), "forest.depth: unknown field", ValidationError);

  auto bad_type = j;
  bad_type["n"] = "many";
  CHECK_THROWS_AS(experiment_config_from_json(bad_type), ValidationError);

  auto small_p = j;
  small_p["p"] = 4;
  CHECK_THROWS_AS(experiment_config_from_json(small_p), ValidationError);

  auto bad_eta = j;
  bad_eta["eta"] = 1.5;
  CHECK_THROWS_AS(experiment_config_from_json(bad_eta), ValidationError);

  auto gd = j;
  gd["algorithm"] = "losaw-gd";
  gd["correlation"] = "gd_blocks";
  gd["p"] = 7;
  CHECK_THROWS_AS(experiment_config_from_json(gd), ValidationError);
}

TEST_CASE("generated data follows the configuration") {
  auto c = tiny();
  c.n = 10000;
  c.phi = 0.5;
  auto g = generate_data(c, 17);
  CHECK(g.train.n() == 10000);
  CHECK(g.test.n() == 60);
  const Eigen::VectorXd f = g.f.evaluate(g.train.x);
  const Eigen::VectorXd eps = g.train.y - f;
  const double var_f = (f.array() - f.mean()).square().sum() / (f.size() - 1);
  const double var_e = (eps.array() - eps.mean()).square().sum() / (eps.size() - 1);
  CHECK(var_e / var_f > 0.5 * 0.9);
  CHECK(var_e / var_f < 0.5 * 1.1);
  // No noise on the independent set for forests.
  CHECK((g.independent.y - g.f.evaluate(g.independent.x)).cwiseAbs().maxCoeff() == 0.0);
  const Eigen::MatrixXd xi = g.independent.x;
  CHECK(std::abs(pearson_corr(std::vector<double>(xi.col(0).data(), xi.col(0).data() + xi.rows()),
                              std::vector<double>(xi.col(2).data(), xi.col(2).data() + xi.rows()))) < 0.35);

  auto d = tiny();
  d.discrete = true;
  auto gd = generate_data(d, 3);
  gd.train.validate();
  for (std::size_t f2 = 0; f2 < d.p; ++f2) CHECK(gd.train.kinds[f2].is_discrete());

  auto net = tiny(Algorithm::kLosawGd);
  net.correlation = CorrelationFamily::kGdBlocks;
  net.discrete = true;
  net.p = 50;
  net.regression = 10;
  auto gn = generate_data(net, 5);
  CHECK(gn.f.signal.size() == 7);
  CHECK((gn.independent.y - gn.f.evaluate(gn.independent.x)).cwiseAbs().maxCoeff() > 0.0);
}

TEST_CASE("datasets round-trip bit-exactly") {
  auto g = generate_data(tiny(), 23);
  auto dir = scratch("roundtrip");
  write_dataset(g.train, dir / "train.csv");
  auto back = read_dataset(dir / "train.csv");
  CHECK(back.x == g.train.x);
  CHECK(back.y == g.train.y);
  CHECK(back.kinds == g.train.kinds);
}

TEST_CASE("single run and deterministic outputs") {
  for (auto a : {Algorithm::kRf, Algorithm::kLosawRf, Algorithm::kGd, Algorithm::kLosawGd}) {
    auto c = tiny(a);
    auto rows = run_experiment(c);
    REQUIRE(rows.size() == 2);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      CHECK(rows[r].run == r);
      CHECK(std::isfinite(rows[r].r2_test));
      CHECK(std::isfinite(rows[r].r2_ind));
      CHECK(rows[r].pr_auc >= 0.0);
      CHECK(rows[r].pr_auc <= 1.0);
      CHECK(rows[r].importance.size() == c.p);
    }
    auto d1 = scratch("det1"), d2 = scratch("det2");
    write_experiment(c, rows, d1);
    write_experiment(c, run_experiment(c), d2);
    for (const char* f : {"results.csv", "results.json", "config.resolved.json"})
      CHECK(slurp(d1 / f) == slurp(d2 / f));
    auto j = nlohmann::json::parse(slurp(d1 / "results.json"));
    CHECK(j["schema"] == "losaw-result-v1");
    CHECK(j["runs"][1]["r2_test"].get<double>() == rows[1].r2_test);
    CHECK(experiment_config_from_json(nlohmann::json::parse(slurp(d1 / "config.resolved.json"))).runs == 2);
  }
}

TEST_CASE("parallel runs match sequential runs") {
  auto c = tiny();
  c.runs = 3;
  c.threads = 3;
  auto par = run_experiment(c);
  for (std::size_t r = 0; r < 3; ++r) {
    auto one = run_single(c, r);
    CHECK(one.r2_test == par[r].r2_test);
    CHECK(one.importance == par[r].importance);
  }
}

TEST_CASE("unit eta in the sweep equals the plain forest") {
  auto c = tiny(Algorithm::kRf);
  const Summary rf = summarize(run_experiment(c));
  auto sweep = eta_sweep(c, {1.0});
  REQUIRE(sweep.size() == 1);
  CHECK(sweep[0].r2_test == rf.r2_test);
  CHECK(sweep[0].pr_auc == rf.pr_auc);
  CHECK(sweep[0].r2_test_lo <= sweep[0].r2_test);
  CHECK(sweep[0].r2_test_hi >= sweep[0].r2_test);
  CHECK_THROWS_AS(eta_sweep(c, {}), ValidationError);
}

TEST_CASE("sweep csv schema") {
  auto dir = scratch("sweep");
  write_eta_sweep({{0.5, 3, 0.8, 0.7, 0.9, 0.6, 0.5, 1.0}}, dir / "s.csv");
  CHECK(slurp(dir / "s.csv") ==
        "eta,runs,r2_test,r2_test_lo,r2_test_hi,pr_auc,pr_auc_lo,pr_auc_hi\n0.5,3,0.8,0.7,0.9,0.6,0.5,1\n");
}

TEST_CASE("tradeoff configuration") {
  auto c = tradeoff_config();
  CHECK(c.p == 10);
  CHECK(c.n == 1000);
  CHECK(*c.noise_variance == 1.0);
  CHECK(regression(c.regression, c.p).signal == std::vector<std::size_t>{0, 1});
}

TEST_CASE("published reference cells") {
  auto find = [](const std::string& t, int n, int reg, const std::string& metric, const std::string& alg,
                 double phi = 0.1) {
    for (const auto& v : reference_values())
      if (t == v.table && v.n == n && v.regression == reg && metric == v.metric && alg == v.algorithm && v.phi == phi)
        return v.value;
    return -1.0;
  };
  CHECK(find("3", 5000, 3, "pr_auc", "rf") == 0.417);
  CHECK(find("3", 5000, 3, "pr_auc", "losaw-rf") == 0.999);
  CHECK(find("2", 500, 5, "pr_auc", "rf") == 0.629);
  CHECK(find("2", 500, 5, "pr_auc", "losaw-rf") == 0.959);
  CHECK(find("A1", 5000, 3, "pr_auc", "losaw-rf") == 1.0);
  CHECK(find("5", 50000, 10, "fi_gap", "losaw-gd", 1.0) == 0.064);
  CHECK(reference_table_ids().size() == 9);
  CHECK(reference_values().size() == 1200);
}

TEST_CASE("reproduce populates comparison rows") {
  ReproduceOptions o;
  o.runs = 1;
  o.n_factor = 0.2;
  o.regressions = {1};
  o.sizes = {500};
  o.phis = {0.1};
  o.threads = 1;
  auto rows = reproduce_table("A1", o);
  CHECK(rows.size() == 6);
  for (const auto& r : rows) {
    CHECK(r.n == 500);
    CHECK(r.gap == doctest::Approx(r.reproduced - r.published));
  }
  CHECK_THROWS_AS(reproduce_table("9", o), ValidationError);
  o.regressions = {8};
  CHECK_THROWS_AS(reproduce_table("A1", o), ValidationError);
}
