#pragma once

#include <cmath>
#include <memory>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hartley/errors.hpp"

namespace hartley {

// Symmetric uniform grid on [-L, L] with an odd number of nodes N, spacing
// dx = 2L/(N-1) and nodes x_j = (j - M)*dx, M = (N-1)/2. The center node is
// exactly 0 and x -> -x permutes the node set exactly (x_{N-1-j} == -x_j
// bit-for-bit). Copies are cheap and share storage.
class Grid {
 public:
  Grid(double half_width, int num_points);

  double half_width() const noexcept { return d_->half_width; }
  int size() const noexcept { return d_->num_points; }
  double spacing() const noexcept { return d_->spacing; }
  int center() const noexcept { return (d_->num_points - 1) / 2; }

  std::span<const double> nodes() const noexcept { return d_->nodes; }
  double node(int i) const { return d_->nodes.at(static_cast<size_t>(i)); }

  // Composite trapezoid weight: dx at interior nodes, dx/2 at the endpoints.
  double weight(int i) const noexcept {
    return (i == 0 || i == d_->num_points - 1) ? 0.5 * d_->spacing : d_->spacing;
  }

  // Index of the node equal to x (within abs tolerance), if any.
  std::optional<int> index_of(double x, double tol = 1e-9) const noexcept;

  friend bool operator==(const Grid& lhs, const Grid& rhs) noexcept {
    return lhs.d_ == rhs.d_ ||
           (lhs.d_->half_width == rhs.d_->half_width &&
            lhs.d_->num_points == rhs.d_->num_points);
  }
  friend bool operator!=(const Grid& lhs, const Grid& rhs) noexcept { return !(lhs == rhs); }

 private:
  struct Data {
    double half_width;
    int num_points;
    double spacing;
    std::vector<double> nodes;
  };
  std::shared_ptr<const Data> d_;
};

Grid make_grid(double half_width, int num_points);

namespace detail {

// Shared value type for real samples attached to a grid. Tagged so that
// space-domain and frequency-domain data cannot be mixed up.
template <class Tag>
class NodeSeries {
 public:
  NodeSeries(Grid grid, std::vector<double> values)
      : grid_(std::move(grid)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != grid_.size())
      throw GridMismatch("value count does not match grid size");
    for (double v : values_)
      if (!std::isfinite(v)) throw InvalidFunction("non-finite sample value");
  }

  static NodeSeries zero(const Grid& grid) {
    return NodeSeries(grid, std::vector<double>(static_cast<size_t>(grid.size()), 0.0));
  }

  template <class F>
  static NodeSeries sample(const Grid& grid, F&& fn) {
    std::vector<double> v(static_cast<size_t>(grid.size()));
    for (int i = 0; i < grid.size(); ++i) v[static_cast<size_t>(i)] = fn(grid.node(i));
    return NodeSeries(grid, std::move(v));
  }

  const Grid& grid() const noexcept { return grid_; }
  std::span<const double> values() const noexcept { return values_; }
  int size() const noexcept { return grid_.size(); }
  double operator[](int i) const { return values_.at(static_cast<size_t>(i)); }

  NodeSeries scaled(double c) const {
    std::vector<double> v(values_.begin(), values_.end());
    for (double& x : v) x *= c;
    return NodeSeries(grid_, std::move(v));
  }

  friend NodeSeries operator+(const NodeSeries& lhs, const NodeSeries& rhs) {
    if (lhs.grid_ != rhs.grid_) throw GridMismatch("grids differ in addition");
    std::vector<double> v(lhs.values_.begin(), lhs.values_.end());
    for (size_t i = 0; i < v.size(); ++i) v[i] += rhs.values_[i];
    return NodeSeries(lhs.grid_, std::move(v));
  }
  friend NodeSeries operator-(const NodeSeries& lhs, const NodeSeries& rhs) {
    if (lhs.grid_ != rhs.grid_) throw GridMismatch("grids differ in subtraction");
    std::vector<double> v(lhs.values_.begin(), lhs.values_.end());
    for (size_t i = 0; i < v.size(); ++i) v[i] -= rhs.values_[i];
    return NodeSeries(lhs.grid_, std::move(v));
  }

 private:
  Grid grid_;
  std::vector<double> values_;
};

}  // namespace detail

// Real-valued samples f(x_j) on a space grid.
using SampledFunction = detail::NodeSeries<struct SpaceDomainTag>;

// Samples of a transform (Hf)(y_j) on a frequency grid.
using Spectrum = detail::NodeSeries<struct FrequencyDomainTag>;

}  // namespace hartley
