#include "chirp.hpp"

#include <cmath>
#include <numbers>

namespace hartley::detail {

namespace {

constexpr long double kTwoPiL = 2.0L * std::numbers::pi_v<long double>;

// exp(sign * i * theta * k^2 / 2) with the phase reduced mod 2*pi in long
// double before rounding to double precision trig arguments.
std::complex<double> chirp_phase(long double theta, long long k, int sign) {
  long double ph = std::fmod(0.5L * theta * static_cast<long double>(k) *
                                 static_cast<long double>(k),
                             kTwoPiL);
  ph *= sign;
  return {static_cast<double>(std::cos(ph)), static_cast<double>(std::sin(ph))};
}

size_t next_pow2(size_t n) {
  size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

}  // namespace

void fft_pow2(std::span<std::complex<double>> a, bool inverse) {
  const size_t n = a.size();
  if (n < 2) return;
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const long double ang = (inverse ? kTwoPiL : -kTwoPiL) / static_cast<long double>(len);
    const std::complex<double> wlen(static_cast<double>(std::cos(ang)),
                                    static_cast<double>(std::sin(ang)));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[i + j];
        const std::complex<double> v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
        w *= wlen;
      }
    }
  }
  if (inverse) {
    const double inv_n = 1.0 / static_cast<double>(n);
    for (auto& x : a) x *= inv_n;
  }
}

std::vector<std::complex<double>> centered_dft(std::span<const std::complex<double>> c,
                                               double theta) {
  const long long n = static_cast<long long>(c.size());
  const long long m = (n - 1) / 2;
  const long double th = static_cast<long double>(theta);
  const size_t p = next_pow2(static_cast<size_t>(2 * n - 1));

  // a[j] = c[j] * exp(-i th j'^2/2),  b[d] = exp(+i th d^2/2), d = i' - j'.
  std::vector<std::complex<double>> a(p, {0.0, 0.0});
  std::vector<std::complex<double>> b(p, {0.0, 0.0});
  for (long long j = 0; j < n; ++j)
    a[static_cast<size_t>(j)] = c[static_cast<size_t>(j)] * chirp_phase(th, j - m, -1);
  for (long long d = -(n - 1); d <= n - 1; ++d) {
    const size_t idx = static_cast<size_t>((d + static_cast<long long>(p)) %
                                           static_cast<long long>(p));
    b[idx] = chirp_phase(th, d, +1);
  }

  fft_pow2(a, false);
  fft_pow2(b, false);
  for (size_t i = 0; i < p; ++i) a[i] *= b[i];
  fft_pow2(a, true);

  std::vector<std::complex<double>> out(static_cast<size_t>(n));
  for (long long i = 0; i < n; ++i)
    out[static_cast<size_t>(i)] = a[static_cast<size_t>(i)] * chirp_phase(th, i - m, -1);
  return out;
}

}  // namespace hartley::detail
