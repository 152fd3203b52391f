#include "hartley/norms.hpp"

#include <cmath>
#include <numbers>

#include "kahan.hpp"

namespace hartley {

namespace {

// Symmetric-pair accumulation: node pairs (j, N-1-j) are added together, so
// reflecting the samples permutes only commutative additions and the result
// is bit-identical.
double lp_norm_impl(const Grid& grid, std::span<const double> v, double p) {
  if (!(p >= 1.0)) throw InvalidExponent("lp_norm requires p >= 1");
  const int n = grid.size();
  if (p == kInf) {
    double m = 0.0;
    for (int j = 0; j < n; ++j) m = std::max(m, std::abs(v[static_cast<size_t>(j)]));
    return m;
  }
  const int mid = grid.center();
  detail::KahanSum acc;
  if (p == 1.0) {
    for (int j = 0; j < mid; ++j)
      acc.add(grid.weight(j) * (std::abs(v[static_cast<size_t>(j)]) +
                                std::abs(v[static_cast<size_t>(n - 1 - j)])));
    acc.add(grid.weight(mid) * std::abs(v[static_cast<size_t>(mid)]));
    return acc.value();
  }
  for (int j = 0; j < mid; ++j)
    acc.add(grid.weight(j) * (std::pow(std::abs(v[static_cast<size_t>(j)]), p) +
                              std::pow(std::abs(v[static_cast<size_t>(n - 1 - j)]), p)));
  acc.add(grid.weight(mid) * std::pow(std::abs(v[static_cast<size_t>(mid)]), p));
  return std::pow(acc.value(), 1.0 / p);
}

}  // namespace

double lp_norm(const SampledFunction& f, double p) { return lp_norm_impl(f.grid(), f.values(), p); }
double lp_norm(const Spectrum& f, double p) { return lp_norm_impl(f.grid(), f.values(), p); }

double l1_bound_constant(const TransformParams& params) {
  const double x = std::abs(3.0 * params.a * params.a - params.b * params.b);
  const double y = params.a * params.a + params.b * params.b;
  const double two_pi_pow = std::pow(2.0 * std::numbers::pi, 0.5 * params.n);
  return (x + 3.0 * y) / (4.0 * std::abs(params.a) * two_pi_pow);
}

double alpha_factor(const TransformParams& params) {
  if (params.a == 0.0) throw InvalidParams("alpha norm requires a != 0");
  return std::sqrt(l1_bound_constant(params));
}

double alpha_norm(const SampledFunction& f, const TransformParams& params) {
  return alpha_factor(params) * lp_norm(f, 1.0);
}

}  // namespace hartley
