#include "hartley/algebra.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "kahan.hpp"

namespace hartley {

namespace {

constexpr double kInvSqrt2Pi = 0.39894228040143267794;

double inv(double p) { return p == kInf ? 0.0 : 1.0 / p; }

bool in_range(double p) { return p == kInf || p >= 1.0; }

std::string exps_label(const char* what, const YoungExponents& e) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%s(p=%g,q=%g,r=%g)", what, e.p, e.q, e.r);
  return buf;
}

// Relative quadrature L1 mass outside [-L/2, L/2].
double outer_mass_fraction(const SampledFunction& f) {
  const Grid& g = f.grid();
  const double half = 0.5 * g.half_width();
  detail::KahanSum outer, total;
  for (int i = 0; i < g.size(); ++i) {
    const double t = g.weight(i) * std::abs(f[i]);
    total.add(t);
    if (std::abs(g.node(i)) > half) outer.add(t);
  }
  return total.value() > 0.0 ? outer.value() / total.value() : 0.0;
}

}  // namespace

void validate_trilinear(const YoungExponents& e) {
  const bool open = e.p > 1.0 && e.p < kInf && e.q > 1.0 && e.q < kInf && e.r > 1.0 && e.r < kInf;
  if (!open || std::abs(1.0 / e.p + 1.0 / e.q + 1.0 / e.r - 2.0) > 1e-12)
    throw ExponentRelationViolated(
        "trilinear mode requires p, q, r in (1, inf) with 1/p + 1/q + 1/r = 2");
}

void validate_convolution(const YoungExponents& e) {
  if (!in_range(e.p) || !in_range(e.q) || !in_range(e.r) ||
      std::abs(inv(e.p) + inv(e.q) - 1.0 - inv(e.r)) > 1e-12)
    throw ExponentRelationViolated(
        "convolution mode requires p, q, r in [1, inf] with 1/p + 1/q = 1 + 1/r");
}

SampledFunction conv_power(const SampledFunction& f, int k, const TransformParams& params,
                           TransformMethod method) {
  params.require_full_algebra("conv_power");
  if (k < 1) throw InvalidParams("convolution power requires k >= 1");
  const Spectrum hf = h_forward(f, params, method);
  std::vector<double> p(hf.values().begin(), hf.values().end());
  for (int step = 1; step < k; ++step)
    for (size_t i = 0; i < p.size(); ++i) p[i] *= hf.values()[i];
  return h_inverse(Spectrum(f.grid(), std::move(p)), params, f.grid(), method);
}

double spectral_radius_gelfand(const SampledFunction& f, const TransformParams& params,
                               TransformMethod method) {
  return lp_norm(h_forward(f, params, method), kInf);
}

RadiusTrace spectral_radius_trace(const SampledFunction& f, const TransformParams& params,
                                  int k_max, TransformMethod method) {
  params.require_full_algebra("spectral_radius_trace");
  if (k_max < 2) throw InvalidParams("radius trace requires k_max >= 2");
  if (outer_mass_fraction(f) >= 1e-10)
    throw InvalidFunction("radius trace input carries L1 mass outside [-L/2, L/2]");

  const Spectrum hf = h_forward(f, params, method);
  const double alpha = alpha_factor(params);

  RadiusTrace trace;
  trace.k_max = k_max;
  trace.gelfand_value = lp_norm(hf, kInf);
  trace.roots.reserve(static_cast<size_t>(k_max));
  trace.outer_mass.reserve(static_cast<size_t>(k_max));

  std::vector<double> power(hf.values().begin(), hf.values().end());
  for (int k = 1; k <= k_max; ++k) {
    if (k > 1)
      for (size_t i = 0; i < power.size(); ++i) power[i] *= hf.values()[i];
    const SampledFunction fk =
        h_inverse(Spectrum(f.grid(), std::vector<double>(power)), params, f.grid(), method);
    trace.roots.push_back(std::pow(alpha * lp_norm(fk, 1.0), 1.0 / static_cast<double>(k)));
    trace.outer_mass.push_back(outer_mass_fraction(fk));
  }
  return trace;
}

double character_eval(const SampledFunction& f, double y, const TransformParams& params) {
  if (!f.grid().index_of(y)) throw NodeNotOnGrid("character frequency must be a grid node");
  const Grid& grid = f.grid();
  detail::KahanSum acc;
  for (int j = 0; j < grid.size(); ++j) {
    const double x = grid.node(j);
    acc.add(grid.weight(j) * (params.a * std::cos(x * y) + params.b * std::sin(x * y)) * f[j]);
  }
  return kInvSqrt2Pi * acc.value();
}

double young_constant(const TransformParams& params, double q, int n) {
  if (params.a == 0.0) throw InvalidParams("Young constant requires a != 0");
  if (!(q >= 1.0)) throw InvalidParams("Young constant requires q >= 1");
  const double x = std::abs(3.0 * params.a * params.a - params.b * params.b);
  const double y = params.a * params.a + params.b * params.b;
  const double scale = 1.0 / (std::abs(params.a) * std::pow(2.0 * std::numbers::pi, 0.5 * n));
  if (q == kInf) return scale * std::max(x, y);
  return scale * std::pow((std::pow(x, q) + 3.0 * std::pow(y, q)) / 4.0, 1.0 / q);
}

VerificationReport verify_young_conv(const SampledFunction& f, const SampledFunction& g,
                                     const YoungExponents& exps, const TransformParams& params) {
  validate_convolution(exps);
  const double lhs = lp_norm(convolve_direct(f, g, params), exps.r);
  const double c = young_constant(params, exps.q, params.n);
  const double rhs = c * lp_norm(f, exps.q) * lp_norm(g, exps.p);
  auto report = VerificationReport::upper(exps_label("young_conv", exps), lhs, rhs,
                                          1e-12 * (1.0 + std::abs(rhs)));
  report.diagnostics["young_constant"] = c;
  return report;
}

VerificationReport verify_young_trilinear(const SampledFunction& f, const SampledFunction& g,
                                          const SampledFunction& h, const YoungExponents& exps,
                                          const TransformParams& params) {
  validate_trilinear(exps);
  if (h.grid() != f.grid()) throw GridMismatch("trilinear operands must share one grid");
  const SampledFunction conv = convolve_direct(f, g, params);
  detail::KahanSum acc;
  for (int i = 0; i < conv.size(); ++i) acc.add(conv.grid().weight(i) * conv[i] * h[i]);
  const double lhs = std::abs(acc.value());
  const double c = young_constant(params, exps.q, params.n);
  const double rhs = c * lp_norm(f, exps.q) * lp_norm(g, exps.p) * lp_norm(h, exps.r);
  auto report = VerificationReport::upper(exps_label("young_trilinear", exps), lhs, rhs,
                                          1e-12 * (1.0 + std::abs(rhs)));
  report.diagnostics["young_constant"] = c;
  return report;
}

VerificationReport crude_constant_compare(const TransformParams& params, double r) {
  if (!(r >= 1.0) || r == kInf) throw InvalidParams("crude comparison requires finite r >= 1");
  // q = r pairs with p = 1 in the convolution relation 1/p + 1/q = 1 + 1/r.
  const double sharp = young_constant(params, r, params.n);
  const double x = std::abs(3.0 * params.a * params.a - params.b * params.b);
  const double y = params.a * params.a + params.b * params.b;
  const double crude = (std::pow(x, r) + 3.0 * std::pow(y, r)) / (4.0 * std::abs(params.a));
  char buf[96];
  std::snprintf(buf, sizeof(buf), "sharp_vs_crude(a=%g,b=%g,r=%g)", params.a, params.b, r);
  return VerificationReport::upper(buf, sharp, crude);
}

}  // namespace hartley
