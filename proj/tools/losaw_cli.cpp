#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "checks.hpp"
#include "losaw/dataset.hpp"
#include "losaw/error.hpp"
#include "losaw/experiment.hpp"
#include "losaw/forest.hpp"
#include "losaw/losawgd.hpp"
#include "losaw/metrics.hpp"
#include "losaw/reference_tables.hpp"

namespace fs = std::filesystem;
using namespace losaw;
using nlohmann::json;

namespace {

json read_json(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

void write_json(const fs::path& path, const json& j) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

// Every command leaves a copy of its resolved options next to its output.
void write_resolved(const fs::path& output, const std::string& command, json options) {
  options["command"] = command;
  write_json(output.string() + ".resolved.json", options);
}

std::vector<std::size_t> parse_signal(const std::string& s, std::size_t p) {
  std::vector<std::size_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    try {
      v = std::stoul(item);
    } catch (const std::exception&) {
      throw ValidationError("signal: '" + item + "' is not a feature number");
    }
    if (v < 1 || v > p) throw ValidationError("signal: feature " + item + " outside 1.." + std::to_string(p));
    out.push_back(v - 1);
  }
  return out;
}

void write_importance(const fs::path& path, const std::vector<double>& fi) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  out << "feature,importance\n";
  for (std::size_t i = 0; i < fi.size(); ++i) out << i + 1 << ',' << format_double(fi[i]) << '\n';
}

std::span<const double> as_span(const Eigen::VectorXd& v) {
  return {v.data(), static_cast<std::size_t>(v.size())};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally sample-weighted random forests and mini-batch training"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate the training, test and independent sets of one run");
  std::string gen_config, gen_out;
  std::size_t gen_run = 0;
  gen->add_option("--config", gen_config, "Experiment config JSON")->required()->check(CLI::ExistingFile);
  gen->add_option("--run", gen_run, "Monte Carlo run index");
  gen->add_option("--out", gen_out, "Output directory")->required();

  // fit-rf
  auto* fit_rf = app.add_subcommand("fit-rf", "Fit a (losaw) random forest to a dataset");
  std::string rf_data, rf_config, rf_out;
  std::optional<double> rf_eta;
  std::optional<std::size_t> rf_trees, rf_threads;
  std::uint64_t rf_seed = 0;
  fit_rf->add_option("--data", rf_data, "Dataset CSV")->required()->check(CLI::ExistingFile);
  fit_rf->add_option("--config", rf_config, "Forest config JSON")->check(CLI::ExistingFile);
  fit_rf->add_option("--eta", rf_eta, "Minimum relative effective sample size; 1 for a plain forest");
  fit_rf->add_option("--trees", rf_trees, "Number of trees");
  fit_rf->add_option("--threads", rf_threads, "Worker threads");
  fit_rf->add_option("--seed", rf_seed, "Seed")->required();
  fit_rf->add_option("--out", rf_out, "Forest JSON")->required();

  // fit-gd
  auto* fit_gd = app.add_subcommand("fit-gd", "Train a dense network with losaw or uniform mini-batches");
  std::string gd_data, gd_config, gd_out, gd_alg = "losaw-gd";
  std::optional<double> gd_eta;
  std::optional<std::size_t> gd_steps;
  std::uint64_t gd_seed = 0;
  fit_gd->add_option("--data", gd_data, "Dataset CSV")->required()->check(CLI::ExistingFile);
  fit_gd->add_option("--config", gd_config, "Training config JSON")->check(CLI::ExistingFile);
  fit_gd->add_option("--algorithm", gd_alg, "losaw-gd or gd")->check(CLI::IsMember({"losaw-gd", "gd"}));
  fit_gd->add_option("--eta", gd_eta, "Minimum relative effective sample size");
  fit_gd->add_option("--steps", gd_steps, "Training steps");
  fit_gd->add_option("--seed", gd_seed, "Seed")->required();
  fit_gd->add_option("--out", gd_out, "Network JSON")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate a fitted forest or network on a dataset");
  std::string ev_model, ev_data, ev_signal, ev_out;
  eval->add_option("--model", ev_model, "Forest or network JSON")->required()->check(CLI::ExistingFile);
  eval->add_option("--data", ev_data, "Dataset CSV")->required()->check(CLI::ExistingFile);
  eval->add_option("--signal", ev_signal, "Comma-separated 1-based signal features");
  eval->add_option("--out", ev_out, "Evaluation JSON")->required();

  // run
  auto* run = app.add_subcommand("run", "Run a Monte Carlo experiment");
  std::string run_config, run_out;
  run->add_option("--config", run_config, "Experiment config JSON")->required()->check(CLI::ExistingFile);
  run->add_option("--out", run_out, "Output directory (overrides the config)");

  // sweep-eta
  auto* sweep = app.add_subcommand("sweep-eta", "losaw forest metrics over a grid of eta values");
  std::string sw_config, sw_out;
  std::vector<double> sw_grid = {0.05, 0.2, 0.5, 0.8};
  std::optional<std::size_t> sw_runs;
  std::optional<std::uint64_t> sw_seed;
  sweep->add_option("--config", sw_config, "Experiment config JSON (default: the tradeoff study)")
      ->check(CLI::ExistingFile);
  sweep->add_option("--grid", sw_grid, "Eta values")->delimiter(',');
  sweep->add_option("--runs", sw_runs, "Monte Carlo runs per eta");
  sweep->add_option("--seed", sw_seed, "Seed");
  sweep->add_option("--out", sw_out, "Sweep CSV")->required();

  // reproduce
  auto* repro = app.add_subcommand("reproduce", "Compare published table cells with desk-scale estimates");
  std::string rp_table, rp_out;
  ReproduceOptions rp;
  repro->add_option("--table", rp_table, "Table id: " + [] {
    std::string s;
    for (const auto& id : reference_table_ids()) s += (s.empty() ? "" : ", ") + id;
    return s;
  }())->required();
  repro->add_option("--runs", rp.runs, "Monte Carlo runs per cell");
  repro->add_option("--n-factor", rp.n_factor, "Training size multiplier");
  repro->add_option("--gd-p", rp.gd_p, "Feature count for the network table");
  repro->add_option("--regressions", rp.regressions, "Regression ids to keep")->delimiter(',');
  repro->add_option("--sizes", rp.sizes, "Published N to keep")->delimiter(',');
  repro->add_option("--phis", rp.phis, "Noise ratios to keep")->delimiter(',');
  repro->add_option("--seed", rp.seed, "Seed");
  repro->add_option("--threads", rp.threads, "Worker threads");
  repro->add_option("--out", rp_out, "Comparison CSV")->required();

  // selfcheck
  auto* self = app.add_subcommand("selfcheck", "Run the oracle test battery");
  std::string sc_out;
  self->add_option("--out", sc_out, "Report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*gen) {
      auto cfg = load_experiment_config(gen_config);
      auto data = generate_data(cfg, run_seed(cfg, gen_run));
      const fs::path dir(gen_out);
      fs::create_directories(dir);
      write_dataset(data.train, dir / "train.csv");
      write_dataset(data.test, dir / "test.csv");
      write_dataset(data.independent, dir / "independent.csv");
      std::vector<std::size_t> signal1;
      for (auto s : data.f.signal) signal1.push_back(s + 1);
      write_json(dir / "config.resolved.json",
                 {{"command", "gen"}, {"config", to_json(cfg)}, {"run", gen_run}, {"signal", signal1},
                  {"noise_variance", data.noise_variance}});
    } else if (*fit_rf) {
      const Dataset data = read_dataset(rf_data);
      ForestConfig cfg = rf_config.empty() ? ForestConfig{} : forest_config_from_json(read_json(rf_config));
      if (rf_eta) cfg.eta = *rf_eta;
      if (rf_trees) cfg.n_tree = *rf_trees;
      if (rf_threads) cfg.threads = *rf_threads;
      const Forest forest = fit_forest(data, cfg, rf_seed);
      write_json(rf_out, to_json(forest));
      write_importance(rf_out + ".importance.csv", mdi_importance(forest));
      write_resolved(rf_out, "fit-rf", {{"data", rf_data}, {"forest", to_json(cfg)}, {"seed", rf_seed}});
    } else if (*fit_gd) {
      const Dataset data = read_dataset(gd_data);
      GdConfig cfg = gd_config.empty() ? GdConfig{} : gd_config_from_json(read_json(gd_config));
      if (gd_eta) cfg.eta = *gd_eta;
      if (gd_steps) cfg.steps = *gd_steps;
      const bool losaw = gd_alg == "losaw-gd";
      if (!losaw) cfg.eta = 1.0;
      Rng init = make_rng(gd_seed, "init");
      DenseNet net = DenseNet::create(data.p(), cfg.hidden, init);
      const auto res = losaw ? train_losawgd(data, std::move(net), cfg, gd_seed)
                             : train_standard(data, std::move(net), cfg, gd_seed);
      write_json(gd_out, to_json(res.net));
      write_trace_csv(res.trace, gd_out + ".trace.csv");
      write_importance(gd_out + ".importance.csv", saliency(res.net, data.x, cfg.saliency_mode));
      write_resolved(gd_out, "fit-gd",
                     {{"data", gd_data}, {"algorithm", gd_alg}, {"gd", to_json(cfg)}, {"seed", gd_seed}});
    } else if (*eval) {
      const Dataset data = read_dataset(ev_data);
      const json model = read_json(ev_model);
      const std::string schema = model.value("schema", std::string());
      Eigen::VectorXd pred;
      std::vector<double> fi;
      if (schema == "losaw-forest-v1") {
        const Forest forest = forest_from_json(model);
        if (forest.n_features != data.p()) throw ValidationError("forest and dataset feature counts differ");
        pred = forest.predict(data.x);
        fi = mdi_importance(forest);
      } else if (schema == "losaw-net-v1") {
        const DenseNet net = dense_net_from_json(model);
        if (net.sizes.front() != data.p()) throw ValidationError("network and dataset feature counts differ");
        pred = net.predict(data.x);
        fi = saliency(net, data.x);
      } else {
        throw ValidationError(ev_model + ": unknown model schema '" + schema + "'");
      }
      json out = {{"schema", "losaw-result-v1"}, {"kind", "evaluation"}, {"r2", r_squared(as_span(data.y), as_span(pred))},
                  {"importance", fi}};
      if (!ev_signal.empty()) {
        const auto signal = parse_signal(ev_signal, data.p());
        out["pr_auc"] = pr_auc(fi, signal);
        out["fi_gap"] = fi_gap(minmax_normalize(fi), signal);
      }
      write_json(ev_out, out);
      write_resolved(ev_out, "eval", {{"model", ev_model}, {"data", ev_data}, {"signal", ev_signal}});
    } else if (*run) {
      auto cfg = load_experiment_config(run_config);
      if (!run_out.empty()) cfg.output = run_out;
      if (cfg.output.empty()) throw ValidationError("output: set it in the config or pass --out");
      const auto rows = run_experiment(cfg);
      write_experiment(cfg, rows, cfg.output);
      const Summary s = summarize(rows);
      std::cout << to_string(cfg.algorithm) << " runs=" << rows.size() << " r2_test=" << s.r2_test
                << " r2_ind=" << s.r2_ind << " pr_auc=" << s.pr_auc << " fi_gap=" << s.fi_gap << '\n';
    } else if (*sweep) {
      ExperimentConfig cfg = sw_config.empty() ? tradeoff_config() : load_experiment_config(sw_config);
      if (sw_runs) cfg.runs = *sw_runs;
      if (sw_seed) cfg.seed = *sw_seed;
      const auto rows = eta_sweep(cfg, sw_grid);
      write_eta_sweep(rows, sw_out);
      write_resolved(sw_out, "sweep-eta", {{"config", to_json(cfg)}, {"grid", sw_grid}});
    } else if (*repro) {
      const auto rows = reproduce_table(rp_table, rp);
      write_reproduction(rows, rp_out);
      write_resolved(rp_out, "reproduce",
                     {{"table", rp_table}, {"runs", rp.runs}, {"n_factor", rp.n_factor}, {"gd_p", rp.gd_p},
                      {"regressions", rp.regressions}, {"sizes", rp.sizes}, {"phis", rp.phis}, {"seed", rp.seed},
                      {"label", "desk-scale estimate"}});
    } else if (*self) {
      const std::vector<std::pair<std::string, checks::Outcome>> results = {
          {"split oracle", checks::split_oracle(200, 77)},
          {"weight properties", checks::weight_properties(1000, 2024)},
          {"decorrelation identity", checks::decorrelation_identity()},
          {"joint solver", checks::joint_solver()},
          {"network gradients", checks::network_gradients(3)},
          {"batch sampler", checks::batch_sampler(6)},
      };
      bool ok = true;
      json report = json::array();
      for (const auto& [name, r] : results) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << name << ": " << r.detail << '\n';
        report.push_back({{"check", name}, {"pass", r.pass}, {"detail", r.detail}});
        ok = ok && r.pass;
      }
      if (!sc_out.empty()) write_json(sc_out, {{"schema", "losaw-result-v1"}, {"kind", "selfcheck"}, {"checks", report}});
      return ok ? 0 : 3;
    }
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
