#pragma once

#include <complex>
#include <span>
#include <vector>

namespace hartley::detail {

// In-place iterative radix-2 transform; a.size() must be a power of two.
void fft_pow2(std::span<std::complex<double>> a, bool inverse);

// Centered DFT for odd N = c.size(), M = (N-1)/2:
//   X[i] = sum_j c[j] * exp(-i * theta * (i-M) * (j-M)),  i = 0..N-1.
// Bluestein factorization; phases are reduced in long double so the exponent
// theta*k^2/2 stays accurate for the grid products used here.
std::vector<std::complex<double>> centered_dft(std::span<const std::complex<double>> c,
                                               double theta);

}  // namespace hartley::detail
