#include "hartley/wiener_levy.hpp"

#include <cmath>
#include <cstdio>

namespace hartley {

NonvanishingCertificate check_nonvanishing(const SampledFunction& g, const TransformParams& params,
                                           double threshold, TransformMethod method) {
  const Spectrum hg = h_forward(g, params, method);
  NonvanishingCertificate cert;
  cert.threshold = threshold;
  cert.min_abs = kInf;
  for (int i = 0; i < hg.size(); ++i) {
    const double v = std::abs(1.0 + hg[i]);
    if (v < cert.min_abs) {
      cert.min_abs = v;
      cert.node_argmin = hg.grid().node(i);
    }
  }
  return cert;
}

SampledFunction wiener_levy_ell(const SampledFunction& g, const TransformParams& params,
                                TransformMethod method, double threshold) {
  params.require_full_algebra("wiener_levy_ell");
  const Spectrum hg = h_forward(g, params, method);

  NonvanishingCertificate cert;
  cert.threshold = threshold;
  cert.min_abs = kInf;
  for (int i = 0; i < hg.size(); ++i) {
    const double v = std::abs(1.0 + hg[i]);
    if (v < cert.min_abs) {
      cert.min_abs = v;
      cert.node_argmin = hg.grid().node(i);
    }
  }
  if (!cert.valid()) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "1 + (Hg)(y) vanishes on the grid: |1 + Hg| = %.3e at y = %.6g (threshold %.1e)",
                  cert.min_abs, cert.node_argmin, cert.threshold);
    throw SingularSymbol(buf);
  }

  std::vector<double> ratio(static_cast<size_t>(hg.size()));
  for (int i = 0; i < hg.size(); ++i)
    ratio[static_cast<size_t>(i)] = -hg[i] / (1.0 + hg[i]);
  return h_inverse(Spectrum(g.grid(), std::move(ratio)), params, g.grid(), method);
}

SampledFunction wiener_levy_eta(const SampledFunction& g, const TransformParams& params,
                                TransformMethod method, double threshold) {
  // eta := -ell; negation of every sample is exact.
  return wiener_levy_ell(g, params, method, threshold).scaled(-1.0);
}

}  // namespace hartley
