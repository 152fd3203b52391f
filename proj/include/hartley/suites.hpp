#pragma once

#include <random>
#include <span>
#include <string>
#include <vector>

#include "hartley/io.hpp"
#include "hartley/report.hpp"

namespace hartley::verify {

// Deterministic Gaussian-mixture generator (1-3 terms). The default profile
// decays below ~1e-20 at |x| = 20; the tight profile keeps the relative L1
// mass outside [-L/2, L/2] under 1e-12 on the (L=20, N=2049) grid, as the
// round-trip and support-sensitive checks require.
SampledFunction random_mixture(const Grid& grid, std::mt19937_64& rng, bool tight = false);

// Smooth bump exp(-1/(1-u^2)), u = (x-center)/halfwidth, zero outside.
SampledFunction bump(const Grid& grid, double center, double halfwidth);

// Named suites: "young", "algebra", "heat", "fredholm", or "all".
// Reports aggregate each check family over its seeded instances; the worst
// instance is surfaced and diagnostics carry the instance count.
std::vector<VerificationReport> run_suite(const std::string& name, const RunConfig& config);

bool all_pass(const std::vector<VerificationReport>& reports);

struct BenchRow {
  int n = 0;
  double direct_time = 0.0;    // seconds, median of 5
  double spectral_time = 0.0;  // seconds, median of 5
  double max_discrepancy = 0.0;
};

// Direct-kernel vs spectral-factorization convolution timings over odd,
// ascending sizes. Small sizes are repeated until each timing sample covers
// at least a few milliseconds; the reported time is the median of 5 samples.
std::vector<BenchRow> run_bench(const RunConfig& config, std::span<const int> sizes);

// CSV with header "N,direct_time,spectral_time,max_discrepancy".
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace hartley::verify
