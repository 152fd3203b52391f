#include <cmath>
#include <numbers>

#include "doctest.h"
#include "helpers.hpp"

using namespace hartley;
using ht_test::dense_quadrature;
using ht_test::gaussian2;
using ht_test::main_grid;
using ht_test::sup_abs;
using ht_test::sup_diff;

namespace {
const TransformParams kHartley(1.0, 1.0);
}

TEST_CASE("fourier_cos on the reference Gaussian") {
  const Grid g = main_grid();
  const SampledFunction f = gaussian2(g);
  for (auto method : {TransformMethod::Quadrature, TransformMethod::Accelerated}) {
    const Spectrum fc = fourier_cos(f, g, method);
    double err = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      const double y = g.node(i);
      err = std::max(err, std::abs(fc[i] - std::sqrt(2.0) * std::exp(-y * y / 4.0)));
    }
    CHECK(err <= 1e-6);
  }
}

TEST_CASE("transform of zero is zero") {
  const Grid g = make_grid(10.0, 257);
  const SampledFunction z = SampledFunction::zero(g);
  for (auto method : {TransformMethod::Quadrature, TransformMethod::Accelerated}) {
    CHECK(sup_abs(fourier_cos(z, g, method)) == 0.0);
    CHECK(sup_abs(fourier_sin(z, g, method)) == 0.0);
    CHECK(sup_abs(h_forward(z, kHartley, g, method)) == 0.0);
    CHECK(sup_abs(h_inverse(Spectrum::zero(g), kHartley, g, method)) == 0.0);
  }
}

TEST_CASE("parity gives vanishing components") {
  const Grid g = main_grid();
  const SampledFunction odd = ht_test::x_gaussian(g);
  const SampledFunction even = gaussian2(g);

  CHECK(sup_abs(fourier_cos(odd, g, TransformMethod::Quadrature)) <= 1e-12);
  CHECK(sup_abs(fourier_sin(even, g, TransformMethod::Quadrature)) <= 1e-12);
  // The accelerated path transforms the even/odd part, so these are exact.
  CHECK(sup_abs(fourier_cos(odd, g, TransformMethod::Accelerated)) == 0.0);
  CHECK(sup_abs(fourier_sin(even, g, TransformMethod::Accelerated)) == 0.0);
}

TEST_CASE("fourier_sin of x e^{-x^2}") {
  const Grid g = main_grid();
  const SampledFunction f = ht_test::x_gaussian(g);
  const Spectrum fs = fourier_sin(f, g);
  double err_closed = 0.0, err_oracle = 0.0;
  for (int i = 0; i < g.size(); i += 8) {
    const double y = g.node(i);
    const double closed = y / (2.0 * std::sqrt(2.0)) * std::exp(-y * y / 4.0);
    const double oracle = dense_quadrature(
        g, [](double t) { return std::sin(t); },
        [](double x) { return x * std::exp(-x * x); }, y);
    err_closed = std::max(err_closed, std::abs(fs[i] - closed));
    err_oracle = std::max(err_oracle, std::abs(fs[i] - oracle));
  }
  CHECK(err_closed <= 1e-6);
  CHECK(err_oracle <= 1e-6);
}

TEST_CASE("h_forward composes the two parts") {
  const Grid g = make_grid(20.0, 513);
  std::mt19937_64 rng(5);
  const SampledFunction f = verify::random_mixture(g, rng);
  const TransformParams params(2.0, -1.5);
  for (auto method : {TransformMethod::Quadrature, TransformMethod::Accelerated}) {
    const Spectrum h = h_forward(f, params, g, method);
    const Spectrum fc = fourier_cos(f, g, method);
    const Spectrum fs = fourier_sin(f, g, method);
    for (int i = 0; i < g.size(); ++i)
      CHECK(h[i] == params.a * fc[i] + params.b * fs[i]);
  }
}

TEST_CASE("h_forward Gaussian closed forms") {
  const Grid g = main_grid();
  const SampledFunction f = gaussian2(g);
  auto check_scaled = [&](const TransformParams& params, double amp) {
    const Spectrum h = h_forward(f, params, g);
    double err = 0.0;
    for (int i = 0; i < g.size(); ++i) {
      const double y = g.node(i);
      err = std::max(err, std::abs(h[i] - amp * std::exp(-y * y / 4.0)));
    }
    CHECK(err <= 1e-6);
  };
  check_scaled(kHartley, std::sqrt(2.0));
  check_scaled(TransformParams(2.0, 1.0), 2.0 * std::sqrt(2.0));
}

TEST_CASE("b = 0 reduces the forward transform to fourier_cos") {
  const Grid g = make_grid(20.0, 513);
  std::mt19937_64 rng(6);
  const SampledFunction f = verify::random_mixture(g, rng);
  const TransformParams cosine(1.0, 0.0);
  const Spectrum h = h_forward(f, cosine, g);
  const Spectrum fc = fourier_cos(f, g);
  CHECK(sup_diff(h, fc) == 0.0);
  CHECK_THROWS_AS(h_inverse(h, cosine, g), InvalidParams);
  CHECK_THROWS_AS(h_inverse(h, TransformParams(0.0, 1.0), g), InvalidParams);
}

TEST_CASE("h_inverse recovers the Gaussian") {
  const Grid g = main_grid();
  const Spectrum F = Spectrum::sample(
      g, [](double y) { return std::sqrt(2.0) * std::exp(-y * y / 4.0); });
  const SampledFunction f = h_inverse(F, kHartley, g);
  double err = 0.0;
  for (int i = 0; i < g.size(); ++i)
    err = std::max(err, std::abs(f[i] - 2.0 * std::exp(-g.node(i) * g.node(i))));
  CHECK(err <= 1e-5);
}

TEST_CASE("round trip") {
  const Grid g = main_grid();
  const TransformParams params(1.0, 2.0);
  const SampledFunction f = ht_test::x_gaussian(g);
  CHECK(sup_diff(h_inverse(h_forward(f, params, g), params, g), f) <= 1e-5);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const SampledFunction m = verify::random_mixture(g, rng, /*tight=*/true);
    CHECK(sup_diff(h_inverse(h_forward(m, params, g), params, g), m) <= 5e-5);
  }
}

TEST_CASE("linearity of the quadrature transform") {
  const Grid g = main_grid();
  std::mt19937_64 rng(21);
  const TransformParams params(1.0, -2.0);
  for (int trial = 0; trial < 5; ++trial) {
    const SampledFunction f = verify::random_mixture(g, rng);
    const SampledFunction g2 = verify::random_mixture(g, rng);
    const double c1 = -10.0 + 20.0 * (trial / 4.0);
    const double c2 = 7.5;
    const SampledFunction combo = f.scaled(c1) + g2.scaled(c2);
    const Spectrum lhs = h_forward(combo, params, g, TransformMethod::Quadrature);
    const Spectrum hf = h_forward(f, params, g, TransformMethod::Quadrature);
    const Spectrum hg = h_forward(g2, params, g, TransformMethod::Quadrature);
    double err = 0.0;
    for (int i = 0; i < g.size(); ++i)
      err = std::max(err, std::abs(lhs[i] - c1 * hf[i] - c2 * hg[i]));
    CHECK(err <= 1e-12);
  }
}

TEST_CASE("method equivalence") {
  const Grid g = main_grid();
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const SampledFunction f = verify::random_mixture(g, rng);
    const TransformParams params(trial % 2 ? 1.0 : 2.0, trial % 3 ? 1.0 : -2.0);
    const Spectrum quad = h_forward(f, params, g, TransformMethod::Quadrature);
    const Spectrum fast = h_forward(f, params, g, TransformMethod::Accelerated);
    CHECK(sup_diff(quad, fast) / std::max(sup_abs(quad), 1e-300) <= 1e-10);
  }
}

TEST_CASE("accelerated path falls back to quadrature off the self-dual grid") {
  const Grid g = make_grid(20.0, 513);
  const Grid coarse = make_grid(12.0, 129);
  std::mt19937_64 rng(41);
  const SampledFunction f = verify::random_mixture(g, rng);
  const Spectrum a = fourier_cos(f, coarse, TransformMethod::Accelerated);
  const Spectrum q = fourier_cos(f, coarse, TransformMethod::Quadrature);
  CHECK(sup_diff(a, q) == 0.0);
}

TEST_CASE("a = b = 1 matches an independent cas-kernel quadrature") {
  const Grid g = make_grid(20.0, 513);
  std::mt19937_64 rng(51);
  const SampledFunction f = verify::random_mixture(g, rng);
  const Spectrum h = h_forward(f, kHartley, g, TransformMethod::Quadrature);
  double err = 0.0;
  for (int i = 0; i < g.size(); i += 5) {
    const double y = g.node(i);
    double acc = 0.0;
    for (int j = 0; j < g.size(); ++j) {
      const double xy = g.node(j) * y;
      acc += g.weight(j) * (std::cos(xy) + std::sin(xy)) * f[j];
    }
    err = std::max(err, std::abs(h[i] - acc * 0.39894228040143267794));
  }
  CHECK(err <= 1e-12);
}

TEST_CASE("riemann_lebesgue_check") {
  const Grid g = main_grid();

  SUBCASE("reference Gaussian") {
    const auto report = riemann_lebesgue_check(gaussian2(g), kHartley);
    CHECK(report.pass);
    CHECK(report.measured == doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));
    CHECK(report.bound == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-6));
    CHECK(report.margin > 0.0);
    CHECK(report.diagnostics.at("edge_decay") <= 1e-10);
  }

  SUBCASE("zero function") {
    const auto report = riemann_lebesgue_check(SampledFunction::zero(g), kHartley);
    CHECK(report.pass);
    CHECK(report.measured == 0.0);
    CHECK(report.bound == 0.0);
  }

  SUBCASE("box function") {
    const SampledFunction box =
        SampledFunction::sample(g, [](double x) { return std::abs(x) <= 1.0 ? 1.0 : 0.0; });
    const auto report = riemann_lebesgue_check(box, TransformParams(1.0, 0.5));
    CHECK(report.pass);
    CHECK(report.margin > 0.0);
  }

  SUBCASE("property over mixtures") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 20; ++trial) {
      const TransformParams params(trial % 2 ? 1.0 : 2.0, trial % 3 ? 1.0 : -2.0);
      CHECK(riemann_lebesgue_check(verify::random_mixture(g, rng), params).pass);
    }
  }
}
