#pragma once

#include <vector>

#include "hartley/convolution.hpp"
#include "hartley/grid.hpp"
#include "hartley/norms.hpp"
#include "hartley/params.hpp"
#include "hartley/report.hpp"

namespace hartley {

// Exponent triple for the Young inequalities. Infinite entries use kInf.
// Trilinear mode: p, q, r in (1, inf) with 1/p + 1/q + 1/r = 2.
// Convolution mode: p, q, r in [1, inf] with 1/p + 1/q = 1 + 1/r.
struct YoungExponents {
  double p = 1.0;
  double q = 1.0;
  double r = 1.0;
};

// Throw ExponentRelationViolated unless the respective relation holds.
void validate_trilinear(const YoungExponents& e);
void validate_convolution(const YoungExponents& e);

// Numerical witness of the spectral-radius equalities: the sequence
// roots[k-1] = alpha_norm(f^(conv k))^(1/k) against gelfand_value = ||Hf||_inf.
// outer_mass[k-1] records the fraction of quadrature L1 mass of f^(conv k)
// outside [-L/2, L/2], a truncation diagnostic for the spreading powers.
struct RadiusTrace {
  int k_max = 0;
  std::vector<double> roots;
  double gelfand_value = 0.0;
  std::vector<double> outer_mass;
};

// k-th convolution power, computed spectrally as H^-1((Hf)^k).
// Requires a != 0, b != 0 and k >= 1.
SampledFunction conv_power(const SampledFunction& f, int k, const TransformParams& params,
                           TransformMethod method = TransformMethod::Accelerated);

// sup over frequency nodes of |(Hf)(y)|.
double spectral_radius_gelfand(const SampledFunction& f, const TransformParams& params,
                               TransformMethod method = TransformMethod::Accelerated);

// Requires k_max >= 2. Input truncation: the relative L1 mass of f outside
// [-L/2, L/2] must be below 1e-10 (InvalidFunction otherwise); the spread of
// the powers themselves is reported through outer_mass, not enforced.
RadiusTrace spectral_radius_trace(const SampledFunction& f, const TransformParams& params,
                                  int k_max,
                                  TransformMethod method = TransformMethod::Accelerated);

// Character value Phi_y[f] = (Hf)(y); y must be a frequency node.
double character_eval(const SampledFunction& f, double y, const TransformParams& params);

// C = 1/(|a| (2 pi)^(n/2)) * ((|3a^2-b^2|^q + 3 (a^2+b^2)^q)/4)^(1/q);
// q = inf takes the limiting value max(|3a^2-b^2|, a^2+b^2)/(|a| (2 pi)^(n/2)).
double young_constant(const TransformParams& params, double q, int n);

// || f conv g ||_r <= C(q) ||f||_q ||g||_p  (convolution-mode exponents).
VerificationReport verify_young_conv(const SampledFunction& f, const SampledFunction& g,
                                     const YoungExponents& exps, const TransformParams& params);

// | integral (f conv g) h | <= C(q) ||f||_q ||g||_p ||h||_r (trilinear mode).
VerificationReport verify_young_trilinear(const SampledFunction& f, const SampledFunction& g,
                                          const SampledFunction& h, const YoungExponents& exps,
                                          const TransformParams& params);

// Sharp constant C(q=r) against the crude four-term triangle-inequality
// constant (|3a^2-b^2|^r + 3 (a^2+b^2)^r)/(4|a|).
VerificationReport crude_constant_compare(const TransformParams& params, double r);

}  // namespace hartley
