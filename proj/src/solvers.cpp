#include "hartley/solvers.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "hartley/algebra.hpp"

namespace hartley {

SampledFunction solve_fredholm(const FredholmProblem& prob, TransformMethod method) {
  if (prob.g.grid() != prob.k_rhs.grid())
    throw GridMismatch("Fredholm generators must share one grid");
  const SampledFunction eta = wiener_levy_eta(prob.g, prob.params, method);
  return convolve_spectral(eta, prob.k_rhs, prob.params, method);
}

SampledFunction gaussian_kernel(double t, double k, const Grid& grid) {
  if (!(t > 0.0)) throw InvalidTime("heat Gaussian requires t > 0");
  if (!(k > 0.0)) throw InvalidParams("heat Gaussian requires diffusion k > 0");
  const double kt = k * t;
  const double amp = 1.0 / std::sqrt(kt);
  const double inv4kt = 1.0 / (4.0 * kt);
  return SampledFunction::sample(grid,
                                 [&](double xi) { return amp * std::exp(-xi * xi * inv4kt); });
}

double gaussian_lp_norm(double t, double k, double p) {
  if (!(p >= 1.0) || p == kInf) throw InvalidExponent("closed-form Lp norm requires finite p >= 1");
  if (!(t > 0.0)) throw InvalidTime("heat Gaussian requires t > 0");
  if (!(k > 0.0)) throw InvalidParams("heat Gaussian requires diffusion k > 0");
  const double kt = k * t;
  return std::pow(2.0, 1.0 / p) * std::pow(std::numbers::pi / p, 0.5 / p) *
         std::pow(kt, -(p - 1.0) / (2.0 * p));
}

SampledFunction solve_heat_spectral(const HeatProblem& prob, TransformMethod method) {
  if (!(prob.diffusion > 0.0)) throw InvalidParams("heat problem requires diffusion k > 0");
  if (prob.time < 0.0) throw InvalidTime("heat problem requires t >= 0");
  prob.params.require_full_algebra("solve_heat_spectral");

  const Spectrum hphi = h_forward(prob.initial, prob.params, method);
  const double kt = prob.diffusion * prob.time;
  std::vector<double> u(static_cast<size_t>(hphi.size()));
  for (int i = 0; i < hphi.size(); ++i) {
    const double y = hphi.grid().node(i);
    u[static_cast<size_t>(i)] = std::exp(-kt * y * y) * hphi[i];
  }
  return h_inverse(Spectrum(prob.initial.grid(), std::move(u)), prob.params,
                   prob.initial.grid(), method);
}

SampledFunction solve_heat_convolution(const HeatProblem& prob, TransformMethod method) {
  if (!(prob.diffusion > 0.0)) throw InvalidParams("heat problem requires diffusion k > 0");
  if (prob.params.a == 0.0)
    throw InvalidParams(
        "heat convolution form requires a != 0: the Gaussian factor exp(-k t y^2) is not an "
        "H-transform of g_t when a = 0 (its sine transform vanishes); use the spectral solver");
  if (!(prob.time > 0.0))
    throw InvalidTime("heat convolution form requires t > 0: g_t has no t -> 0 sample limit");

  const SampledFunction gt = gaussian_kernel(prob.time, prob.diffusion, prob.initial.grid());
  const SampledFunction conv = convolve_spectral(gt, prob.initial, prob.params, method);
  return conv.scaled(1.0 / (prob.params.a * std::sqrt(2.0)));
}

VerificationReport heat_estimate_report(const HeatProblem& prob, double p, double q, double r,
                                        TransformMethod method) {
  if (!(p >= 1.0) || p == kInf || !(q >= 1.0) || q == kInf)
    throw ExponentRelationViolated("heat estimate requires finite p, q >= 1");
  validate_convolution(YoungExponents{p, q, r});

  const SampledFunction u = solve_heat_convolution(prob, method);
  const double measured = lp_norm(u, r);

  const double c = young_constant(prob.params, q, prob.params.n);
  const double gt_norm = gaussian_lp_norm(prob.time, prob.diffusion, p);
  const double bound = c / (std::abs(prob.params.a) * std::sqrt(2.0)) * gt_norm *
                       lp_norm(prob.initial, q);

  const char* which = (p == 1.0 && q == 1.0 && r == 1.0) ? "i" : (r == kInf ? "iii" : "ii");
  char buf[96];
  std::snprintf(buf, sizeof(buf), "heat_estimate_%s(p=%g,q=%g,r=%g)", which, p, q, r);
  auto report = VerificationReport::upper(buf, measured, bound, 1e-12 * (1.0 + std::abs(bound)));
  report.diagnostics["gaussian_lp_norm"] = gt_norm;
  report.diagnostics["young_constant"] = c;
  report.diagnostics["t"] = prob.time;
  report.diagnostics["k"] = prob.diffusion;
  return report;
}

}  // namespace hartley
