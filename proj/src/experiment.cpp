#include "losaw/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <thread>
#include <tuple>

#include "losaw/error.hpp"
#include "losaw/metrics.hpp"
#include "losaw/reference_tables.hpp"

namespace losaw {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kRf: return "rf";
    case Algorithm::kLosawRf: return "losaw-rf";
    case Algorithm::kGd: return "gd";
    case Algorithm::kLosawGd: return "losaw-gd";
  }
  return "";
}

Algorithm algorithm_from_string(const std::string& s) {
  for (auto a : {Algorithm::kRf, Algorithm::kLosawRf, Algorithm::kGd, Algorithm::kLosawGd})
    if (to_string(a) == s) return a;
  throw ValidationError("algorithm: unknown value '" + s + "' (rf, losaw-rf, gd, losaw-gd)");
}

std::string to_string(CorrelationFamily c) {
  switch (c) {
    case CorrelationFamily::kBlock: return "block";
    case CorrelationFamily::kExample: return "example";
    case CorrelationFamily::kIdentity: return "identity";
    case CorrelationFamily::kGdBlocks: return "gd_blocks";
  }
  return "";
}

CorrelationFamily correlation_from_string(const std::string& s) {
  for (auto c : {CorrelationFamily::kBlock, CorrelationFamily::kExample, CorrelationFamily::kIdentity,
                 CorrelationFamily::kGdBlocks})
    if (to_string(c) == s) return c;
  throw ValidationError("correlation: unknown value '" + s + "' (block, example, identity, gd_blocks)");
}

ForestConfig ExperimentConfig::resolved_forest() const {
  ForestConfig f = forest;
  f.eta = algorithm == Algorithm::kLosawRf ? eta : 1.0;
  f.alpha = alpha;
  return f;
}

GdConfig ExperimentConfig::resolved_gd() const {
  GdConfig g = gd;
  g.eta = algorithm == Algorithm::kLosawGd ? eta : 1.0;
  g.alpha = alpha;
  return g;
}

void ExperimentConfig::validate() const {
  if (n < 2) throw ValidationError("n: must be at least 2");
  if (n_test < 2) throw ValidationError("n_test: must be at least 2");
  if (n_independent < 2) throw ValidationError("n_independent: must be at least 2");
  if (p < 2) throw ValidationError("p: must be at least 2");
  if (!(phi >= 0.0) || !std::isfinite(phi)) throw ValidationError("phi: must be finite and nonnegative");
  if (noise_variance && !(*noise_variance >= 0.0 && std::isfinite(*noise_variance)))
    throw ValidationError("noise_variance: must be finite and nonnegative");
  if (runs < 1) throw ValidationError("runs: must be at least 1");
  switch (correlation) {
    case CorrelationFamily::kBlock:
      if (p < 6) throw ValidationError("p: the block correlation needs at least 6 features");
      break;
    case CorrelationFamily::kExample:
      if (p != 5) throw ValidationError("p: the example correlation has exactly 5 features");
      if (!(example_a > -1.0 && example_a < 1.0)) throw ValidationError("example_a: must lie in (-1, 1)");
      break;
    case CorrelationFamily::kGdBlocks:
      if (p % 5 != 0) throw ValidationError("p: gd_blocks needs a multiple of 5 features");
      break;
    case CorrelationFamily::kIdentity: break;
  }
  try {
    losaw::regression(this->regression, p);
  } catch (const ValidationError& e) {
    throw ValidationError(std::string("regression: ") + e.what());
  }
  try {
    if (is_forest()) resolved_forest().validate(p);
    else resolved_gd().validate();
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(is_forest() ? "forest: " : "gd: ") + e.what());
  }
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  nlohmann::json j = {{"data", cfg.discrete ? "discrete" : "continuous"},
                      {"n", cfg.n},
                      {"n_test", cfg.n_test},
                      {"n_independent", cfg.n_independent},
                      {"p", cfg.p},
                      {"phi", cfg.phi},
                      {"regression", cfg.regression},
                      {"correlation", to_string(cfg.correlation)},
                      {"example_a", cfg.example_a},
                      {"gd_sigma", cfg.gd_variant == GdSigmaVariant::kTemplate ? "template" : "random_base"},
                      {"noise_on_independent", cfg.independent_noise()},
                      {"algorithm", to_string(cfg.algorithm)},
                      {"eta", cfg.eta},
                      {"alpha", cfg.alpha},
                      {"forest", to_json(cfg.resolved_forest())},
                      {"gd", to_json(cfg.resolved_gd())},
                      {"runs", cfg.runs},
                      {"seed", cfg.seed},
                      {"threads", cfg.threads},
                      {"output", cfg.output}};
  j["noise_variance"] = cfg.noise_variance ? nlohmann::json(*cfg.noise_variance) : nlohmann::json(nullptr);
  return j;
}

namespace {

void reject_unknown(const nlohmann::json& j, const nlohmann::json& allowed, const std::string& where) {
  if (!j.is_object()) throw ValidationError(where + ": expected an object");
  for (const auto& [k, v] : j.items())
    if (!allowed.contains(k)) throw ValidationError(where + k + ": unknown field");
}

template <class T>
void read(const nlohmann::json& j, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string(key) + ": wrong type, got " + j.at(key).dump());
  }
}

}  // namespace

ExperimentConfig experiment_config_from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  reject_unknown(j, to_json(c), "");
  if (!j.contains("seed")) throw ValidationError("seed: required");
  std::string data = "continuous", corr = "block", alg = "losaw-rf", gd_sigma = "random_base";
  read(j, "data", data);
  if (data != "discrete" && data != "continuous") throw ValidationError("data: must be discrete or continuous");
  c.discrete = data == "discrete";
  read(j, "n", c.n);
  read(j, "n_test", c.n_test);
  read(j, "n_independent", c.n_independent);
  read(j, "p", c.p);
  read(j, "phi", c.phi);
  if (j.contains("noise_variance") && !j.at("noise_variance").is_null()) {
    double v = 0.0;
    read(j, "noise_variance", v);
    c.noise_variance = v;
  }
  read(j, "regression", c.regression);
  read(j, "correlation", corr);
  c.correlation = correlation_from_string(corr);
  read(j, "example_a", c.example_a);
  read(j, "gd_sigma", gd_sigma);
  if (gd_sigma == "template") c.gd_variant = GdSigmaVariant::kTemplate;
  else if (gd_sigma != "random_base") throw ValidationError("gd_sigma: must be random_base or template");
  if (j.contains("noise_on_independent")) {
    bool b = false;
    read(j, "noise_on_independent", b);
    c.noise_on_independent = b;
  }
  read(j, "algorithm", alg);
  c.algorithm = algorithm_from_string(alg);
  read(j, "eta", c.eta);
  read(j, "alpha", c.alpha);
  if (j.contains("forest")) {
    reject_unknown(j["forest"], to_json(ForestConfig{}), "forest.");
    c.forest = forest_config_from_json(j["forest"]);
  }
  if (j.contains("gd")) {
    reject_unknown(j["gd"], to_json(GdConfig{}), "gd.");
    c.gd = gd_config_from_json(j["gd"]);
  }
  read(j, "runs", c.runs);
  read(j, "seed", c.seed);
  read(j, "threads", c.threads);
  read(j, "output", c.output);
  c.validate();
  return c;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
  try {
    return experiment_config_from_json(j);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

namespace {

// Fixed joints are solved once per process.
const JointDistribution& cached_joint(const std::string& key, const Eigen::MatrixXd& target,
                                      const std::vector<DiscreteMarginal>& marginals) {
  static std::mutex mu;
  static std::map<std::string, JointDistribution> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, solve_discrete_joint(target, marginals)).first;
  return it->second;
}

FeatureModel feature_model(const ExperimentConfig& cfg, Rng& sigma_rng) {
  const std::size_t p = cfg.p;
  if (!cfg.discrete) {
    switch (cfg.correlation) {
      case CorrelationFamily::kBlock: return FeatureModel::continuous(block_sigma(p));
      case CorrelationFamily::kExample: return FeatureModel::continuous(example_sigma(cfg.example_a));
      case CorrelationFamily::kIdentity: return FeatureModel::continuous(Eigen::MatrixXd::Identity(p, p));
      case CorrelationFamily::kGdBlocks:
        return FeatureModel::continuous(block_diagonal(sample_gd_block(sigma_rng, cfg.gd_variant).sigma, p));
    }
  }
  const auto cb = centered_binomial();
  switch (cfg.correlation) {
    case CorrelationFamily::kBlock:
      return FeatureModel::discrete(cached_joint("block", block_sigma(6), std::vector(6, cb)), 1, p, cb);
    case CorrelationFamily::kExample:
      return FeatureModel::discrete(
          cached_joint("example " + format_double(cfg.example_a), example_sigma(cfg.example_a), std::vector(5, cb)),
          1, p, cb);
    case CorrelationFamily::kIdentity:
      return FeatureModel::discrete(JointDistribution::product({cb}), 1, p, cb);
    case CorrelationFamily::kGdBlocks: {
      const auto b2 = binomial_two();
      auto block = sample_gd_block(sigma_rng, cfg.gd_variant);
      return FeatureModel::discrete(solve_discrete_joint(block.sigma, std::vector(5, b2)), p / 5, p, b2);
    }
  }
  throw ValidationError("unknown correlation family");
}

Dataset make_set(const FeatureModel& model, const RegressionSpec& f, Eigen::MatrixXd x, double noise_var, Rng& rng) {
  Dataset d;
  d.y = f.evaluate(x);
  if (noise_var > 0.0) d.y += gaussian_noise(static_cast<std::size_t>(x.rows()), noise_var, rng);
  d.x = std::move(x);
  d.kinds = model.kinds();
  return d;
}

}  // namespace

std::uint64_t run_seed(const ExperimentConfig& cfg, std::size_t run) { return derive_seed(cfg.seed, "run", run); }

GeneratedData generate_data(const ExperimentConfig& cfg, std::uint64_t seed) {
  Rng sigma_rng = make_rng(seed, "sigma");
  const FeatureModel model = feature_model(cfg, sigma_rng);
  GeneratedData g;
  g.f = regression(cfg.regression, cfg.p);
  if (cfg.noise_variance) {
    g.noise_variance = *cfg.noise_variance;
  } else if (cfg.phi > 0.0) {
    Rng var_rng = make_rng(seed, "variance");
    g.noise_variance = cfg.phi * signal_variance(model, g.f, 10000, var_rng);
  }
  Rng train_rng = make_rng(seed, "train");
  Rng test_rng = make_rng(seed, "test");
  Rng ind_rng = make_rng(seed, "independent");
  g.train = make_set(model, g.f, model.sample(cfg.n, train_rng), g.noise_variance, train_rng);
  g.test = make_set(model, g.f, model.sample(cfg.n_test, test_rng), g.noise_variance, test_rng);
  g.independent = make_set(model, g.f, model.sample_independent(cfg.n_independent, ind_rng),
                           cfg.independent_noise() ? g.noise_variance : 0.0, ind_rng);
  g.train.meta = {{"generator", to_json(cfg)}, {"run_seed", seed}, {"noise_variance", g.noise_variance}};
  return g;
}

namespace {

RunResult run_with_threads(const ExperimentConfig& cfg, std::size_t run, std::size_t threads) {
  const std::uint64_t seed = run_seed(cfg, run);
  const GeneratedData g = generate_data(cfg, seed);
  RunResult r;
  r.run = run;
  const auto start = std::chrono::steady_clock::now();
  Eigen::VectorXd pred_test, pred_ind;
  if (cfg.is_forest()) {
    ForestConfig fc = cfg.resolved_forest();
    fc.threads = threads;
    const Forest forest = fit_forest(g.train, fc, derive_seed(seed, "forest"));
    pred_test = forest.predict(g.test.x);
    pred_ind = forest.predict(g.independent.x);
    r.importance = mdi_importance(forest);
  } else {
    const GdConfig gc = cfg.resolved_gd();
    Rng init_rng = make_rng(seed, "init");
    DenseNet net = DenseNet::create(cfg.p, gc.hidden, init_rng);
    const std::uint64_t train_seed = derive_seed(seed, "gd");
    net = cfg.algorithm == Algorithm::kLosawGd ? train_losawgd(g.train, std::move(net), gc, train_seed).net
                                                : train_standard(g.train, std::move(net), gc, train_seed).net;
    pred_test = net.predict(g.test.x);
    pred_ind = net.predict(g.independent.x);
    r.importance = saliency(net, g.train.x, gc.saliency_mode);
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  auto span = [](const Eigen::VectorXd& v) { return std::span<const double>(v.data(), static_cast<std::size_t>(v.size())); };
  r.r2_test = r_squared(span(g.test.y), span(pred_test));
  r.r2_ind = r_squared(span(g.independent.y), span(pred_ind));
  r.pr_auc = pr_auc(r.importance, g.f.signal);
  r.fi_gap = fi_gap(minmax_normalize(r.importance), g.f.signal);
  return r;
}

std::size_t hardware_threads(std::size_t requested) {
  if (requested > 0) return requested;
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

}  // namespace

RunResult run_single(const ExperimentConfig& cfg, std::size_t run) {
  cfg.validate();
  return run_with_threads(cfg, run, cfg.threads);
}

std::vector<RunResult> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<RunResult> rows(cfg.runs);
  if (cfg.runs == 1) {
    rows[0] = run_with_threads(cfg, 0, cfg.threads);
    return rows;
  }
  parallel_for(cfg.runs, hardware_threads(cfg.threads), [&](std::size_t r) { rows[r] = run_with_threads(cfg, r, 1); });
  return rows;
}

Summary summarize(const std::vector<RunResult>& rows) {
  Summary s;
  if (rows.empty()) return s;
  for (const auto& r : rows) {
    s.r2_test += r.r2_test;
    s.r2_ind += r.r2_ind;
    s.pr_auc += r.pr_auc;
    s.fi_gap += r.fi_gap;
  }
  const double n = static_cast<double>(rows.size());
  s.r2_test /= n;
  s.r2_ind /= n;
  s.pr_auc /= n;
  s.fi_gap /= n;
  return s;
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write " + path.string());
  return out;
}

}  // namespace

void write_experiment(const ExperimentConfig& cfg, const std::vector<RunResult>& rows,
                      const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  {
    auto out = open_output(dir / "results.csv");
    out << "run,r2_test,r2_ind,pr_auc,fi_gap\n";
    for (const auto& r : rows)
      out << r.run << ',' << format_double(r.r2_test) << ',' << format_double(r.r2_ind) << ','
          << format_double(r.pr_auc) << ',' << format_double(r.fi_gap) << '\n';
  }
  {
    nlohmann::json runs = nlohmann::json::array();
    for (const auto& r : rows)
      runs.push_back({{"run", r.run},
                      {"r2_test", r.r2_test},
                      {"r2_ind", r.r2_ind},
                      {"pr_auc", r.pr_auc},
                      {"fi_gap", r.fi_gap},
                      {"importance", r.importance}});
    const Summary s = summarize(rows);
    nlohmann::json j = {{"schema", "losaw-result-v1"},
                        {"kind", "experiment"},
                        {"config", to_json(cfg)},
                        {"summary", {{"r2_test", s.r2_test}, {"r2_ind", s.r2_ind}, {"pr_auc", s.pr_auc}, {"fi_gap", s.fi_gap}}},
                        {"runs", runs}};
    open_output(dir / "results.json") << j.dump(2) << '\n';
  }
  {
    auto out = open_output(dir / "timings.csv");
    out << "run,seconds\n";
    for (const auto& r : rows) out << r.run << ',' << format_double(r.seconds) << '\n';
  }
  open_output(dir / "config.resolved.json") << to_json(cfg).dump(2) << '\n';
}

namespace {

double quantile(std::vector<double> v, double q) {
  std::sort(v.begin(), v.end());
  const double pos = q * static_cast<double>(v.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, v.size() - 1);
  return v[lo] + (pos - static_cast<double>(lo)) * (v[hi] - v[lo]);
}

}  // namespace

std::vector<EtaSweepRow> eta_sweep(const ExperimentConfig& cfg, const std::vector<double>& grid) {
  if (grid.empty()) throw ValidationError("eta grid is empty");
  std::vector<EtaSweepRow> out;
  for (double eta : grid) {
    ExperimentConfig c = cfg;
    c.algorithm = Algorithm::kLosawRf;
    c.eta = eta;
    // The tolerance band must stay inside (0, eta).
    c.alpha = std::min(cfg.alpha, eta / 10.0);
    const auto rows = run_experiment(c);
    std::vector<double> r2, pr;
    for (const auto& r : rows) {
      r2.push_back(r.r2_test);
      pr.push_back(r.pr_auc);
    }
    const Summary s = summarize(rows);
    out.push_back({eta, rows.size(), s.r2_test, quantile(r2, 0.025), quantile(r2, 0.975), s.pr_auc,
                   quantile(pr, 0.025), quantile(pr, 0.975)});
  }
  return out;
}

void write_eta_sweep(const std::vector<EtaSweepRow>& rows, const std::filesystem::path& csv_path) {
  auto out = open_output(csv_path);
  out << "eta,runs,r2_test,r2_test_lo,r2_test_hi,pr_auc,pr_auc_lo,pr_auc_hi\n";
  for (const auto& r : rows)
    out << format_double(r.eta) << ',' << r.runs << ',' << format_double(r.r2_test) << ','
        << format_double(r.r2_test_lo) << ',' << format_double(r.r2_test_hi) << ',' << format_double(r.pr_auc)
        << ',' << format_double(r.pr_auc_lo) << ',' << format_double(r.pr_auc_hi) << '\n';
}

ExperimentConfig tradeoff_config() {
  ExperimentConfig c;
  c.discrete = false;
  c.n = 1000;
  c.n_test = 1000;
  c.p = 10;
  c.regression = 3;
  c.correlation = CorrelationFamily::kBlock;
  c.noise_variance = 1.0;
  c.runs = 50;
  return c;
}

std::vector<ReproduceRow> reproduce_table(const std::string& table_id, const ReproduceOptions& opts) {
  const auto ids = reference_table_ids();
  if (std::find(ids.begin(), ids.end(), table_id) == ids.end()) {
    std::string list;
    for (const auto& i : ids) list += (list.empty() ? "" : ", ") + i;
    throw ValidationError("table: unknown id '" + table_id + "' (" + list + ")");
  }
  if (opts.runs < 1) throw ValidationError("runs: must be at least 1");
  if (!(opts.n_factor > 0.0)) throw ValidationError("n_factor: must be positive");
  auto keep = [](const auto& filter, auto v) { return filter.empty() || std::find(filter.begin(), filter.end(), v) != filter.end(); };

  // (phi, n, regression) -> algorithm -> metric -> published value
  std::map<std::tuple<double, int, int>, std::map<std::string, std::map<std::string, double>>> cells;
  bool discrete = false;
  for (const auto& v : reference_values()) {
    if (table_id != v.table) continue;
    if (!keep(opts.regressions, v.regression) || !keep(opts.sizes, v.n) || !keep(opts.phis, v.phi)) continue;
    discrete = std::string(v.data) == "discrete";
    cells[{v.phi, v.n, v.regression}][v.algorithm][v.metric] = v.value;
  }
  if (cells.empty()) throw ValidationError("no published cells match the filters");

  std::vector<ReproduceRow> out;
  for (const auto& [key, algs] : cells) {
    const auto [phi, n, reg] = key;
    for (const auto& [alg, metrics] : algs) {
      ExperimentConfig c;
      c.discrete = discrete;
      c.algorithm = algorithm_from_string(alg);
      c.regression = reg;
      c.phi = phi;
      c.n = std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(n * opts.n_factor)));
      c.runs = opts.runs;
      c.seed = opts.seed;
      c.threads = opts.threads;
      c.eta = c.is_forest() ? 0.25 : 0.2;
      if (c.is_forest()) {
        for (const auto& v : reference_values())
          if (table_id == v.table) {
            c.p = static_cast<std::size_t>(v.p);
            break;
          }
      } else {
        c.p = opts.gd_p;
        c.correlation = CorrelationFamily::kGdBlocks;
        c.n_test = 1000;
        c.n_independent = 5000;
      }
      const Summary s = summarize(run_experiment(c));
      for (const auto& [metric, published] : metrics) {
        const double got = metric == "r2_test" ? s.r2_test
                           : metric == "r2_ind" ? s.r2_ind
                           : metric == "pr_auc" ? s.pr_auc
                                                : s.fi_gap;
        out.push_back({reg, phi, n, metric, alg, published, got, got - published});
      }
    }
  }
  return out;
}

void write_reproduction(const std::vector<ReproduceRow>& rows, const std::filesystem::path& csv_path) {
  auto out = open_output(csv_path);
  out << "regression,phi,n,metric,algorithm,published,reproduced,gap\n";
  for (const auto& r : rows)
    out << r.regression << ',' << format_double(r.phi) << ',' << r.n << ',' << r.metric << ',' << r.algorithm << ','
        << format_double(r.published) << ',' << format_double(r.reproduced) << ',' << format_double(r.gap) << '\n';
}

}  // namespace losaw
