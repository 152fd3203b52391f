#pragma once

#include "hartley/grid.hpp"
#include "hartley/params.hpp"
#include "hartley/transform.hpp"

namespace hartley {

// Certificate that 1 + (Hg)(y) stays away from zero on the frequency grid.
struct NonvanishingCertificate {
  double min_abs = 0.0;      // min over nodes of |1 + (Hg)(y)|
  double threshold = 1e-8;
  double node_argmin = 0.0;  // frequency node attaining the minimum

  bool valid() const noexcept { return min_abs > threshold; }
  double conditioning() const noexcept { return min_abs > 0.0 ? 1.0 / min_abs : kInf; }
};

NonvanishingCertificate check_nonvanishing(const SampledFunction& g, const TransformParams& params,
                                           double threshold = 1e-8,
                                           TransformMethod method = TransformMethod::Accelerated);

// ell with (H ell)(y) = -(Hg)(y) / (1 + (Hg)(y)). Throws SingularSymbol when
// the certificate is invalid.
SampledFunction wiener_levy_ell(const SampledFunction& g, const TransformParams& params,
                                TransformMethod method = TransformMethod::Accelerated,
                                double threshold = 1e-8);

// eta = -ell exactly: (H eta)(y) = (Hg)(y) / (1 + (Hg)(y)).
SampledFunction wiener_levy_eta(const SampledFunction& g, const TransformParams& params,
                                TransformMethod method = TransformMethod::Accelerated,
                                double threshold = 1e-8);

}  // namespace hartley
