#include "hartley/grid.hpp"

#include <cmath>

#include "hartley/params.hpp"

namespace hartley {

Grid::Grid(double half_width, int num_points) {
  if (!std::isfinite(half_width) || half_width <= 0.0)
    throw InvalidGrid("grid half-width must be positive and finite");
  if (num_points < 3 || num_points % 2 == 0)
    throw InvalidGrid("grid size must be an odd integer >= 3");

  auto d = std::make_shared<Data>();
  d->half_width = half_width;
  d->num_points = num_points;
  const int m = (num_points - 1) / 2;
  d->spacing = half_width / static_cast<double>(m);
  d->nodes.resize(static_cast<size_t>(num_points));
  // x_j = (j - m) * dx; the signed integer factor makes x_{N-1-j} == -x_j
  // and x_m == 0 exact.
  for (int j = 0; j < num_points; ++j)
    d->nodes[static_cast<size_t>(j)] = static_cast<double>(j - m) * d->spacing;
  d_ = std::move(d);
}

std::optional<int> Grid::index_of(double x, double tol) const noexcept {
  const double u = x / d_->spacing + static_cast<double>(center());
  const double r = std::round(u);
  if (r < 0.0 || r >= static_cast<double>(d_->num_points)) return std::nullopt;
  const int idx = static_cast<int>(r);
  if (std::abs(x - d_->nodes[static_cast<size_t>(idx)]) > tol) return std::nullopt;
  return idx;
}

Grid make_grid(double half_width, int num_points) { return Grid(half_width, num_points); }

TransformParams::TransformParams(double a_, double b_, int n_) : a(a_), b(b_), n(n_) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw InvalidParams("kernel coefficients must be finite");
  if (a * a + b * b == 0.0) throw InvalidParams("kernel coefficients a, b must not both be zero");
  if (n < 1) throw InvalidParams("dimension n must be a positive integer");
}

void TransformParams::require_full_algebra(const char* op) const {
  if (!full_algebra())
    throw InvalidParams(std::string(op) + " requires a != 0 and b != 0 (kernel uses 1/a and 1/b)");
}

}  // namespace hartley
