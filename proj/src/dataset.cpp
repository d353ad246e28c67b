#include "losaw/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "losaw/error.hpp"

namespace losaw {

FeatureKind FeatureKind::discrete(std::vector<double> levels) {
  if (levels.size() < 2) throw ValidationError("discrete feature needs at least two levels");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (!(levels[i] > levels[i - 1])) throw ValidationError("discrete levels must be strictly increasing");
  FeatureKind k;
  k.discrete_ = true;
  k.levels_ = std::move(levels);
  return k;
}

std::optional<std::size_t> FeatureKind::level_index(double value) const {
  auto it = std::lower_bound(levels_.begin(), levels_.end(), value);
  if (it == levels_.end() || *it != value) return std::nullopt;
  return static_cast<std::size_t>(it - levels_.begin());
}

nlohmann::json to_json(const FeatureKind& kind) {
  if (!kind.is_discrete()) return {{"kind", "continuous"}};
  return {{"kind", "discrete"}, {"levels", kind.levels()}};
}

FeatureKind feature_kind_from_json(const nlohmann::json& j) {
  const std::string k = j.at("kind").get<std::string>();
  if (k == "continuous") return FeatureKind::continuous();
  if (k == "discrete") return FeatureKind::discrete(j.at("levels").get<std::vector<double>>());
  throw ValidationError("unknown feature kind '" + k + "'");
}

void Dataset::validate() const {
  if (static_cast<std::size_t>(y.size()) != n())
    throw ValidationError("response length " + std::to_string(y.size()) + " does not match " +
                          std::to_string(n()) + " rows");
  if (kinds.size() != p())
    throw ValidationError("expected " + std::to_string(p()) + " feature kinds, got " +
                          std::to_string(kinds.size()));
  if (!x.allFinite() || !y.allFinite()) throw ValidationError("dataset contains non-finite values");
  for (std::size_t f = 0; f < p(); ++f) {
    if (!kinds[f].is_discrete()) continue;
    for (std::size_t i = 0; i < n(); ++i)
      if (!kinds[f].level_index(x(i, f)))
        throw ValidationError("feature " + std::to_string(f + 1) + " row " + std::to_string(i + 1) +
                              ": value " + format_double(x(i, f)) + " is not a declared level");
  }
}

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

namespace {

std::filesystem::path sidecar(const std::filesystem::path& csv) {
  auto s = csv;
  s += ".json";
  return s;
}

double parse_double(std::string_view s, std::size_t line) {
  double v = 0.0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size())
    throw ValidationError("line " + std::to_string(line) + ": cannot parse '" + std::string(s) + "'");
  return v;
}

}  // namespace

void write_dataset(const Dataset& data, const std::filesystem::path& csv_path) {
  data.validate();
  std::ofstream out(csv_path);
  if (!out) throw ValidationError("cannot write " + csv_path.string());
  for (std::size_t f = 0; f < data.p(); ++f) out << 'x' << (f + 1) << ',';
  out << "y\n";
  for (std::size_t i = 0; i < data.n(); ++i) {
    for (std::size_t f = 0; f < data.p(); ++f) out << format_double(data.x(i, f)) << ',';
    out << format_double(data.y(i)) << '\n';
  }
  nlohmann::json side;
  side["schema"] = "losaw-dataset-v1";
  side["n"] = data.n();
  side["p"] = data.p();
  side["kinds"] = nlohmann::json::array();
  for (const auto& k : data.kinds) side["kinds"].push_back(to_json(k));
  side["meta"] = data.meta;
  std::ofstream js(sidecar(csv_path));
  js << side.dump(2) << '\n';
}

Dataset read_dataset(const std::filesystem::path& csv_path) {
  std::ifstream js(sidecar(csv_path));
  if (!js) throw ValidationError("missing sidecar " + sidecar(csv_path).string());
  nlohmann::json side;
  try {
    js >> side;
  } catch (const nlohmann::json::exception& e) {
    throw ValidationError(std::string("bad sidecar: ") + e.what());
  }
  if (side.value("schema", "") != "losaw-dataset-v1") throw ValidationError("unsupported dataset schema");
  const std::size_t n = side.at("n").get<std::size_t>();
  const std::size_t p = side.at("p").get<std::size_t>();

  Dataset d;
  for (const auto& k : side.at("kinds")) d.kinds.push_back(feature_kind_from_json(k));
  d.meta = side.value("meta", nlohmann::json::object());
  d.x.resize(n, p);
  d.y.resize(n);

  std::ifstream in(csv_path);
  if (!in) throw ValidationError("cannot read " + csv_path.string());
  std::string line;
  std::getline(in, line);
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (row >= n) throw ValidationError("more rows than declared in sidecar");
    std::size_t col = 0, start = 0;
    while (true) {
      std::size_t end = line.find(',', start);
      std::string_view cell(line.data() + start, (end == std::string::npos ? line.size() : end) - start);
      if (col > p) throw ValidationError("line " + std::to_string(row + 2) + ": too many columns");
      double v = parse_double(cell, row + 2);
      if (col < p) d.x(row, col) = v; else d.y(row) = v;
      ++col;
      if (end == std::string::npos) break;
      start = end + 1;
    }
    if (col != p + 1) throw ValidationError("line " + std::to_string(row + 2) + ": expected " +
                                            std::to_string(p + 1) + " columns");
    ++row;
  }
  if (row != n) throw ValidationError("expected " + std::to_string(n) + " rows, found " + std::to_string(row));
  d.validate();
  return d;
}

}  // namespace losaw
