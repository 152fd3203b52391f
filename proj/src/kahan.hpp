#pragma once

namespace hartley::detail {

// Compensated accumulator; fixed-order use keeps every reduction deterministic.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) noexcept {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  double value() const noexcept { return sum; }
};

}  // namespace hartley::detail
