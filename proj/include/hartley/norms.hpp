#pragma once

#include <limits>

#include "hartley/grid.hpp"
#include "hartley/params.hpp"

namespace hartley {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Trapezoid realization of the L_p norm, p in [1, inf]. For finite p returns
// (sum_j w_j |f_j|^p)^(1/p); p = inf returns max_j |f_j|. Summation pairs the
// nodes x_j, -x_j symmetrically, so the norm is exactly invariant under
// reflection of the samples. Throws InvalidExponent for p < 1.
double lp_norm(const SampledFunction& f, double p);
double lp_norm(const Spectrum& f, double p);

// alpha = sqrt((|3a^2-b^2| + 3(a^2+b^2)) / (4|a| (2 pi)^(n/2))), the scaling
// that makes the algebra norm alpha*||.||_1 submultiplicative.
double alpha_factor(const TransformParams& params);

// alpha * lp_norm(f, 1). Throws InvalidParams when a == 0.
double alpha_norm(const SampledFunction& f, const TransformParams& params);

// (|3a^2-b^2| + 3(a^2+b^2)) / (4|a| (2 pi)^(n/2)) == alpha^2; the constant in
// the L1 convolution bound.
double l1_bound_constant(const TransformParams& params);

}  // namespace hartley
