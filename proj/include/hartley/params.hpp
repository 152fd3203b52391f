#pragma once

#include "hartley/errors.hpp"

namespace hartley {

// Kernel coefficients (a, b) of the transform kernel a*cos(xy) + b*sin(xy),
// plus the space dimension n that enters the (2*pi)^(n/2) normalization of
// the closed-form constants. Grids in this library are one-dimensional; n is
// kept as a parameter of the constants only.
//
// Constraint: a^2 + b^2 != 0. Operations that divide by the kernel
// coefficients (inversion, spectral convolution, the heat convolution form)
// additionally need a != 0 and b != 0. a = b = 1 gives the classical Hartley
// kernel, b = 0 the cosine transform.
struct TransformParams {
  double a;
  double b;
  int n;

  TransformParams(double a_, double b_, int n_ = 1);

  bool full_algebra() const noexcept { return a != 0.0 && b != 0.0; }

  // Throws InvalidParams naming `op` when a == 0 or b == 0.
  void require_full_algebra(const char* op) const;
};

}  // namespace hartley
