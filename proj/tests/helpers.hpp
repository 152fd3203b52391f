#pragma once

#include <cmath>
#include <random>

#include "hartley/algebra.hpp"
#include "hartley/convolution.hpp"
#include "hartley/grid.hpp"
#include "hartley/norms.hpp"
#include "hartley/suites.hpp"
#include "hartley/transform.hpp"

namespace ht_test {

using namespace hartley;

inline Grid main_grid() { return make_grid(20.0, 2049); }

// The reference Gaussian 2 e^{-x^2}, i.e. the heat kernel g_t at k t = 1/4.
inline SampledFunction gaussian2(const Grid& g) {
  return SampledFunction::sample(g, [](double x) { return 2.0 * std::exp(-x * x); });
}

inline SampledFunction x_gaussian(const Grid& g) {
  return SampledFunction::sample(g, [](double x) { return x * std::exp(-x * x); });
}

template <class A, class B>
double sup_diff(const A& a, const B& b) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

template <class A>
double sup_abs(const A& a) {
  double m = 0.0;
  for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i]));
  return m;
}

// Independent trapezoid oracle: (2 pi)^{-1/2} integral of kernel(x, y) f(x)
// over [-L, L] with `factor` times the node density of `grid`.
template <class Kernel, class F>
double dense_quadrature(const Grid& grid, Kernel&& kernel, F&& f, double y, int factor = 4) {
  const int n = factor * (grid.size() - 1) + 1;
  const double l = grid.half_width();
  const double dx = 2.0 * l / (n - 1);
  double acc = 0.0;
  for (int j = 0; j < n; ++j) {
    const double x = -l + j * dx;
    const double w = (j == 0 || j == n - 1) ? 0.5 * dx : dx;
    acc += w * kernel(x * y) * f(x);
  }
  return acc * 0.39894228040143267794;
}

}  // namespace ht_test
