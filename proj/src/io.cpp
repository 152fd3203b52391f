#include "hartley/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace hartley {

namespace {

std::string at_line(const std::filesystem::path& path, int line, const std::string& what) {
  std::ostringstream os;
  os << path.string() << ":" << line << ": " << what;
  return os.str();
}

double parse_double(const std::string& token, const std::filesystem::path& path, int line) {
  errno = 0;
  char* end = nullptr;
  const double v = std::strtod(token.c_str(), &end);
  while (end && (*end == ' ' || *end == '\t' || *end == '\r')) ++end;
  if (end == token.c_str() || (end && *end != '\0') || errno == ERANGE)
    throw FormatError(at_line(path, line, "malformed number '" + token + "'"));
  return v;
}

struct Columns {
  std::vector<double> xs;
  std::vector<double> values;
};

Columns read_columns(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open file");

  std::string line;
  int lineno = 1;
  if (!std::getline(in, line)) throw FormatError(at_line(path, 1, "empty file"));
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "x,value") throw FormatError(at_line(path, 1, "expected header 'x,value'"));

  Columns cols;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos)
      throw FormatError(at_line(path, lineno, "expected two comma-separated columns"));
    const double x = parse_double(line.substr(0, comma), path, lineno);
    const double v = parse_double(line.substr(comma + 1), path, lineno);
    if (!std::isfinite(v)) throw FormatError(at_line(path, lineno, "non-finite value"));
    if (!cols.xs.empty() && x <= cols.xs.back())
      throw FormatError(at_line(path, lineno, "x column must be strictly increasing"));
    cols.xs.push_back(x);
    cols.values.push_back(v);
  }
  return cols;
}

Grid grid_from_xs(const std::vector<double>& xs, const std::filesystem::path& path) {
  const int n = static_cast<int>(xs.size());
  if (n < 3 || n % 2 == 0)
    throw GridMismatch(path.string() + ": row count must be an odd integer >= 3, got " +
                       std::to_string(n));
  const double l = xs.back();
  if (!(l > 0.0) || std::abs(xs.front() + l) > 1e-12 * std::max(1.0, l))
    throw GridMismatch(path.string() + ": x column is not symmetric about 0");
  const Grid grid = make_grid(l, n);
  for (int i = 0; i < n; ++i)
    if (std::abs(xs[static_cast<size_t>(i)] - grid.node(i)) > 1e-12 * std::max(1.0, l))
      throw GridMismatch(path.string() + ": x column does not reproduce uniform grid nodes");
  return grid;
}

void write_columns(std::ostream& out, const Grid& grid, std::span<const double> values) {
  out << "x,value\n";
  char buf[96];
  for (int i = 0; i < grid.size(); ++i) {
    // 17 significant digits round-trips every double exactly.
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", grid.node(i),
                  values[static_cast<size_t>(i)]);
    out << buf;
  }
}

void write_columns(const std::filesystem::path& path, const Grid& grid,
                   std::span<const double> values) {
  std::ofstream out(path);
  if (!out) throw FormatError(path.string() + ": cannot open file for writing");
  write_columns(out, grid, values);
  if (!out) throw FormatError(path.string() + ": write failed");
}

template <class Series>
Series read_series(const std::filesystem::path& path) {
  Columns cols = read_columns(path);
  Grid grid = grid_from_xs(cols.xs, path);
  return Series(std::move(grid), std::move(cols.values));
}

template <class Series>
Series read_series(const std::filesystem::path& path, const Grid& expected) {
  Series s = read_series<Series>(path);
  if (s.grid() != expected)
    throw GridMismatch(path.string() + ": file grid does not match the requested grid");
  return s;
}

}  // namespace

SampledFunction read_function(const std::filesystem::path& path) {
  return read_series<SampledFunction>(path);
}
SampledFunction read_function(const std::filesystem::path& path, const Grid& expected) {
  return read_series<SampledFunction>(path, expected);
}
void write_function(const std::filesystem::path& path, const SampledFunction& f) {
  write_columns(path, f.grid(), f.values());
}
void write_function(std::ostream& out, const SampledFunction& f) {
  write_columns(out, f.grid(), f.values());
}

Spectrum read_spectrum(const std::filesystem::path& path) { return read_series<Spectrum>(path); }
Spectrum read_spectrum(const std::filesystem::path& path, const Grid& expected) {
  return read_series<Spectrum>(path, expected);
}
void write_spectrum(const std::filesystem::path& path, const Spectrum& f) {
  write_columns(path, f.grid(), f.values());
}
void write_spectrum(std::ostream& out, const Spectrum& f) {
  write_columns(out, f.grid(), f.values());
}

const std::map<std::string, double>& default_tolerances() {
  static const std::map<std::string, double> ladder = {
      {"method_equivalence", 1e-10},   // relative, quadrature vs accelerated
      {"round_trip", 5e-5},            // H^-1(Hf) vs f, sup-norm
      {"factorization", 1e-5},         // H(f conv g) vs Hf*Hg, sup-norm
      {"cross_method", 1e-6},          // direct vs spectral convolution
      {"commutativity", 1e-8},
      {"associativity", 1e-6},
      {"bilinearity", 1e-10},
      {"character", 1e-5},             // relative multiplicativity defect
      {"wiener_levy_identity", 1e-8},  // (1+Hg) H eta - Hg, sup-norm
      {"neumann", 1e-4},
      {"fredholm_residual", 1e-6},     // relative L1 residual
      {"fredholm_paths", 1e-8},
      {"heat_agreement", 1e-5},        // spectral vs convolution solution
      {"heat_semigroup", 1e-5},
      {"heat_ode", 1e-3},
      {"gaussian_l1", 1e-6},
      {"nonvanishing_threshold", 1e-8},
  };
  return ladder;
}

double RunConfig::tol(const std::string& name) const {
  if (auto it = tolerances.find(name); it != tolerances.end()) return it->second;
  const auto& ladder = default_tolerances();
  if (auto it = ladder.find(name); it != ladder.end()) return it->second;
  throw InvalidParams("unknown tolerance name: " + name);
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path.string() + ": cannot open config file");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  RunConfig cfg;
  try {
    if (j.contains("a")) cfg.a = j.at("a").get<double>();
    if (j.contains("b")) cfg.b = j.at("b").get<double>();
    if (j.contains("L")) cfg.L = j.at("L").get<double>();
    if (j.contains("N")) cfg.N = j.at("N").get<int>();
    if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("tolerances")) {
      for (const auto& [name, value] : j.at("tolerances").items()) {
        if (!default_tolerances().count(name))
          throw FormatError(path.string() + ": unknown tolerance name '" + name + "'");
        cfg.tolerances[name] = value.get<double>();
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
  return cfg;
}

}  // namespace hartley
