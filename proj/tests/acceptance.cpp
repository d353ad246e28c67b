// Acceptance runner: one PASS/FAIL line per criterion. `--only N` runs a single criterion.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "checks.hpp"
#include "losaw/experiment.hpp"
#include "losaw/metrics.hpp"

using namespace losaw;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v, int digits = 3) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::vector<double> mean_importance(const std::vector<RunResult>& rows) {
  std::vector<double> m(rows.front().importance.size(), 0.0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += r.importance[i] / static_cast<double>(rows.size());
  return m;
}

// Mean MDI ordering of noise {3,4,5} against signal {1,2} on the five-feature example.
Verdict criterion1() {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig c;
  c.n = 1000;
  c.n_test = 200;
  c.n_independent = 200;
  c.p = 5;
  c.regression = 3;
  c.noise_variance = 1.0;
  c.algorithm = Algorithm::kRf;
  c.forest.mtry = 2;
  c.runs = 100;
  c.seed = 101;
  c.correlation = CorrelationFamily::kExample;
  c.example_a = 0.5;
  const auto het = mean_importance(run_experiment(c));
  c.correlation = CorrelationFamily::kIdentity;
  const auto ind = mean_importance(run_experiment(c));
  const double secs = seconds_since(t0);
  const double het_noise_min = std::min({het[2], het[3], het[4]}), het_signal_max = std::max(het[0], het[1]);
  const double ind_noise_max = std::max({ind[2], ind[3], ind[4]}), ind_signal_min = std::min(ind[0], ind[1]);
  Verdict v;
  v.pass = het_noise_min > het_signal_max && ind_signal_min > ind_noise_max && secs <= 300.0;
  v.detail = "correlated: min noise MDI " + fmt(het_noise_min) + " vs max signal " + fmt(het_signal_max) +
             "; independent: min signal " + fmt(ind_signal_min) + " vs max noise " + fmt(ind_noise_max) + "; " +
             fmt(secs, 0) + " s";
  return v;
}

std::pair<Summary, Summary> paired(ExperimentConfig c) {
  c.algorithm = Algorithm::kRf;
  const Summary rf = summarize(run_experiment(c));
  c.algorithm = Algorithm::kLosawRf;
  const Summary lo = summarize(run_experiment(c));
  return {rf, lo};
}

// Ten discrete features, f3, N=5000, low noise.
Verdict criterion2() {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig c;
  c.discrete = true;
  c.n = 5000;
  c.p = 10;
  c.phi = 0.1;
  c.regression = 3;
  c.runs = 20;
  c.seed = 202;
  const auto [rf, lo] = paired(c);
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = std::abs(rf.pr_auc - 0.417) <= 0.10 && lo.pr_auc >= 0.90 && std::abs(lo.r2_test - rf.r2_test) <= 0.03 &&
           secs <= 1200.0;
  v.detail = "pr_auc rf " + fmt(rf.pr_auc) + " (target 0.417 +- 0.10), losaw " + fmt(lo.pr_auc) +
             " (target >= 0.90); r2_test rf " + fmt(rf.r2_test) + " losaw " + fmt(lo.r2_test) + "; " + fmt(secs, 0) +
             " s";
  return v;
}

// 100 continuous features, f5, N=500, low noise.
Verdict criterion3() {
  const auto t0 = std::chrono::steady_clock::now();
  ExperimentConfig c;
  c.n = 500;
  c.p = 100;
  c.phi = 0.1;
  c.regression = 5;
  c.runs = 20;
  c.seed = 303;
  const auto [rf, lo] = paired(c);
  const double secs = seconds_since(t0);
  Verdict v;
  v.pass = lo.pr_auc - rf.pr_auc >= 0.20 && lo.r2_ind - rf.r2_ind >= 0.02 && secs <= 3600.0;
  v.detail = "pr_auc rf " + fmt(rf.pr_auc) + " losaw " + fmt(lo.pr_auc) + " (gap >= 0.20); r2_ind rf " +
             fmt(rf.r2_ind) + " losaw " + fmt(lo.r2_ind) + " (gap >= 0.02); " + fmt(secs, 0) + " s";
  return v;
}

// pr-AUC falls and R2 rises with eta, allowing one adjacent violation of at most 0.01.
Verdict criterion4() {
  ExperimentConfig c = tradeoff_config();
  c.runs = 50;
  c.seed = 404;
  const auto rows = eta_sweep(c, {0.05, 0.2, 0.5, 0.8});
  int violations = 0;
  bool large = false;
  std::string detail;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    detail += (i ? "; " : "") + std::string("eta ") + fmt(rows[i].eta, 2) + ": pr_auc " + fmt(rows[i].pr_auc) +
              " r2 " + fmt(rows[i].r2_test);
    if (i == 0) continue;
    const double dp = rows[i].pr_auc - rows[i - 1].pr_auc;  // must be < 0
    const double dr = rows[i].r2_test - rows[i - 1].r2_test;  // must be > 0
    for (double bad : {dp >= 0.0 ? dp : -1.0, dr <= 0.0 ? -dr : -1.0}) {
      if (bad < 0.0) continue;
      ++violations;
      if (bad > 0.01) large = true;
    }
  }
  return {violations <= 1 && !large, detail};
}

Verdict from(const checks::Outcome& o) { return {o.pass, o.detail}; }

Verdict criterion9() {
  const auto grad = checks::network_gradients(3);
  const auto sampler = checks::batch_sampler(6);
  ExperimentConfig c;
  c.discrete = true;
  c.correlation = CorrelationFamily::kGdBlocks;
  c.n = 5000;
  c.n_test = 1000;
  c.n_independent = 5000;
  c.p = 50;
  c.phi = 1.0;
  c.regression = 10;
  c.eta = 0.2;
  c.runs = 10;
  c.seed = 909;
  c.algorithm = Algorithm::kGd;
  const Summary gd = summarize(run_experiment(c));
  c.algorithm = Algorithm::kLosawGd;
  const Summary lo = summarize(run_experiment(c));
  Verdict v;
  v.pass = grad.pass && sampler.pass && lo.fi_gap >= gd.fi_gap;
  v.detail = "(a) " + grad.detail + "; (b) " + sampler.detail + "; (c) fi_gap gd " + fmt(gd.fi_gap) + " losaw " +
             fmt(lo.fi_gap) + ", pr_auc gd " + fmt(gd.pr_auc) + " losaw " + fmt(lo.pr_auc);
  return v;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Each subcommand twice in sibling directories with identical relative paths.
Verdict criterion10() {
  const fs::path root = fs::temp_directory_path() / "losaw_determinism";
  fs::remove_all(root);
  fs::create_directories(root / "common");
  {
    std::ofstream cfg(root / "common" / "experiment.json");
    cfg << R"({"data": "discrete", "n": 300, "n_test": 100, "n_independent": 100, "p": 8, "regression": 3,
               "algorithm": "losaw-rf", "forest": {"n_tree": 8}, "runs": 2, "seed": 5})";
    std::ofstream gd(root / "common" / "gd.json");
    gd << R"({"steps": 20, "batch": 32, "hidden": [8, 4]})";
  }
  const std::string cli = LOSAW_CLI_PATH;
  auto sh = [&](const fs::path& dir, const std::string& args) {
    const std::string cmd = "cd '" + dir.string() + "' && '" + cli + "' " + args + " > stdout.txt 2> stderr.txt";
    return std::system(cmd.c_str());
  };
  if (sh(root / "common", "gen --config experiment.json --out data") != 0) return {false, "gen failed"};
  if (sh(root / "common", "fit-rf --data data/train.csv --seed 1 --trees 5 --out forest.json") != 0)
    return {false, "fit-rf setup failed"};
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"gen", "gen --config ../../common/experiment.json --run 1 --out out"},
      {"fit-rf", "fit-rf --data ../../common/data/train.csv --eta 0.3 --trees 6 --seed 3 --out out/forest.json"},
      {"fit-gd", "fit-gd --data ../../common/data/train.csv --config ../../common/gd.json --seed 4 --out out/net.json"},
      {"eval", "eval --model ../../common/forest.json --data ../../common/data/test.csv --signal 1,2 --out out/eval.json"},
      {"run", "run --config ../../common/experiment.json --out out"},
      {"sweep-eta", "sweep-eta --config ../../common/experiment.json --grid 0.3,1 --runs 2 --out out/sweep.csv"},
      {"reproduce",
       "reproduce --table A1 --runs 1 --n-factor 0.1 --regressions 3 --sizes 500 --phis 0.1 --out out/table.csv"},
      {"selfcheck", "selfcheck --out out/selfcheck.json"},
  };
  std::string bad;
  for (const auto& [name, args] : commands) {
    std::map<std::string, std::string> files[2];
    bool ran = true;
    for (int k = 0; k < 2; ++k) {
      const fs::path dir = root / name / (k == 0 ? "a" : "b");
      fs::create_directories(dir);
      if (sh(dir, args) != 0) ran = false;
      for (const auto& e : fs::recursive_directory_iterator(dir / "out")) {
        if (!e.is_regular_file() || e.path().filename() == "timings.csv") continue;
        files[k][fs::relative(e.path(), dir).string()] = slurp(e.path());
      }
    }
    if (!ran) bad += (bad.empty() ? "" : ", ") + name + " (nonzero exit)";
    else if (files[0].empty() || files[0] != files[1]) bad += (bad.empty() ? "" : ", ") + name;
  }
  if (!bad.empty()) return {false, "differing or failed: " + bad};
  return {true, std::to_string(commands.size()) + " subcommands byte-identical across repeated runs"};
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--only") only = std::atoi(argv[i + 1]);
  const std::vector<std::function<Verdict()>> criteria = {
      criterion1,
      criterion2,
      criterion3,
      criterion4,
      [] { return from(checks::split_oracle(200, 5150)); },
      [] { return from(checks::weight_properties(1000, 6160)); },
      [] { return from(checks::decorrelation_identity()); },
      [] { return from(checks::joint_solver()); },
      criterion9,
      criterion10,
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && only != static_cast<int>(i + 1)) continue;
    Verdict v;
    try {
      v = criteria[i]();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    std::cout << "criterion " << i + 1 << ' ' << (v.pass ? "PASS" : "FAIL") << ": " << v.detail << std::endl;
    all = all && v.pass;
  }
  return all ? 0 : 1;
}
