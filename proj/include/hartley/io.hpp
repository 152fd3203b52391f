#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>

#include "hartley/grid.hpp"
#include "hartley/params.hpp"

namespace hartley {

// Function files are CSV with header "x,value" and one row per grid node,
// printed with 17 significant digits so that read(write(f)) reproduces every
// double bit-exactly. The x column must be a symmetric uniform odd-size grid.
SampledFunction read_function(const std::filesystem::path& path);
SampledFunction read_function(const std::filesystem::path& path, const Grid& expected);
void write_function(const std::filesystem::path& path, const SampledFunction& f);
void write_function(std::ostream& out, const SampledFunction& f);

// Spectra use the same file schema with x holding the frequency nodes.
Spectrum read_spectrum(const std::filesystem::path& path);
Spectrum read_spectrum(const std::filesystem::path& path, const Grid& expected);
void write_spectrum(const std::filesystem::path& path, const Spectrum& f);
void write_spectrum(std::ostream& out, const Spectrum& f);

// Run configuration shared by the CLI, the verification suites and the
// benchmark rig. Tolerance names follow the documented ladder (see README);
// unknown names are rejected at load time.
struct RunConfig {
  double a = 1.0;
  double b = 1.0;
  double L = 20.0;
  int N = 2049;
  std::uint64_t seed = 12345;
  std::map<std::string, double> tolerances;

  TransformParams params() const { return TransformParams(a, b, 1); }
  Grid grid() const { return make_grid(L, N); }
  double tol(const std::string& name) const;
};

// Built-in tolerance ladder.
const std::map<std::string, double>& default_tolerances();

// JSON config file: {"a":..., "b":..., "L":..., "N":..., "seed":...,
// "tolerances": {...}}; every key optional.
RunConfig load_config(const std::filesystem::path& path);

}  // namespace hartley
