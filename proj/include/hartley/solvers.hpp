#pragma once

#include "hartley/convolution.hpp"
#include "hartley/grid.hpp"
#include "hartley/params.hpp"
#include "hartley/report.hpp"
#include "hartley/wiener_levy.hpp"

namespace hartley {

// Cauchy problem  k u_xx = u_t,  u(.,0) = phi  on the line.
struct HeatProblem {
  double diffusion = 1.0;  // k > 0
  double time = 0.0;       // t >= 0
  SampledFunction initial;
  TransformParams params;
};

// f + f conv g = g conv k_rhs, lambda fixed at 1.
struct FredholmProblem {
  SampledFunction g;
  SampledFunction k_rhs;
  TransformParams params;
};

// f = eta conv k_rhs with (H eta) = (Hg)/(1 + Hg). Propagates SingularSymbol
// when 1 + Hg vanishes on the grid.
SampledFunction solve_fredholm(const FredholmProblem& prob,
                               TransformMethod method = TransformMethod::Accelerated);

// g_t(xi) = exp(-xi^2/(4 k t)) / sqrt(k t). Throws InvalidTime for t <= 0,
// InvalidParams for k <= 0.
SampledFunction gaussian_kernel(double t, double k, const Grid& grid);

// ||g_t||_p = 2^(1/p) (pi/p)^(1/(2p)) (k t)^(-(p-1)/(2p)), finite p >= 1.
double gaussian_lp_norm(double t, double k, double p);

// u(.,t) = H^-1(exp(-k t y^2) * H phi). Works for every t >= 0.
SampledFunction solve_heat_spectral(const HeatProblem& prob,
                                    TransformMethod method = TransformMethod::Accelerated);

// u(.,t) = 1/(a sqrt(2)) (g_t conv phi). Requires a != 0 (the Gaussian factor
// has no H-transform representation when a = 0) and t > 0 (g_t has no sample
// limit at t = 0 on a fixed grid).
SampledFunction solve_heat_convolution(const HeatProblem& prob,
                                       TransformMethod method = TransformMethod::Accelerated);

// ||u(.,t)||_r against the case bound C(q)/(|a| sqrt(2)) ||g_t||_p ||phi||_q
// for exponents with 1/p + 1/q = 1 + 1/r: case (i) p=q=r=1, case (ii) finite
// r, case (iii) r = inf.
VerificationReport heat_estimate_report(const HeatProblem& prob, double p, double q, double r,
                                        TransformMethod method = TransformMethod::Accelerated);

}  // namespace hartley
