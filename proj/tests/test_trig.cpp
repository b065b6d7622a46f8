#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "xlab/errors.hpp"
#include "xlab/trig.hpp"

using namespace xlab::trig;
constexpr double pi = std::numbers::pi;

TEST_CASE("coefficients of simple functions") {
  auto f = SampledFunction::sample_real([](double x) { return std::cos(x); }, 16);
  auto c = compute_coefficients(f, 1);
  CHECK(std::abs(c[1] - 0.5) < 1e-15);
  CHECK(std::abs(c[-1] - 0.5) < 1e-15);
  CHECK(std::abs(c[0]) < 1e-15);

  auto g = SampledFunction::sample([](double x) { return std::polar(1.0, 3.0 * x); }, 16);
  auto d = compute_coefficients(g, 4);
  for (int k = -4; k <= 4; ++k) CHECK(std::abs(d[k] - (k == 3 ? 1.0 : 0.0)) < 1e-14);
}

TEST_CASE("coefficients of the sawtooth x within aliasing error") {
  const std::size_t M = 256;
  auto f = SampledFunction::sample_real([](double x) { return x; }, M);
  auto c = compute_coefficients(f, 3);
  // closed form: (1/2pi) int_{-pi}^{pi} x e^{-ikx} dx = i(-1)^k / k
  for (int k = -3; k <= 3; ++k) {
    if (k == 0) continue;
    const cplx exact(0.0, (k % 2 == 0 ? 1.0 : -1.0) / k);
    CHECK(std::abs(c[k] - exact) <= 10.0 * 2.0 * pi / M);
  }
}

TEST_CASE("degree too large for the grid is rejected") {
  auto f = SampledFunction::sample_real([](double) { return 1.0; }, 8);
  CHECK_THROWS_AS(compute_coefficients(f, 4), std::invalid_argument);
  CHECK_THROWS_AS(SampledFunction(std::vector<cplx>(12)), std::invalid_argument);
  CHECK_THROWS_AS(SampledFunction(std::vector<cplx>{1.0, NAN, 0.0, 0.0}), std::invalid_argument);
}

TEST_CASE("kernels") {
  const std::size_t M = 64;
  auto dk = kernel(method_by_name("dirichlet"), 2, M);
  CHECK(std::abs(dk[M / 2] - 5.0) < 1e-13);  // node M/2 is t = 0

  auto fk = kernel(method_by_name("fejer"), 1, M);
  for (std::size_t j = 0; j < M; ++j) {
    CHECK(std::abs(fk[j] - (1.0 + std::cos(fk.node(j)))) < 1e-13);
    CHECK(fk[j].real() >= -1e-12);
  }

  auto br = method_by_name("bochner-riesz(1)");
  const double expected[] = {0.0, 0.75, 1.0, 0.75, 0.0};
  for (int k = -2; k <= 2; ++k) CHECK(std::abs(br.multiplier(2, k) - expected[k + 2]) < 1e-15);

  CHECK_THROWS_AS(kernel(method_by_name("dirichlet"), 8, 16), std::invalid_argument);
}

TEST_CASE("apply_means") {
  TrigCoefficients c(1, {cplx(2.0, 1.0), cplx(3.0), cplx(2.0, -1.0)});
  auto same = apply_means(method_by_name("dirichlet"), 5, c);
  for (int k = -1; k <= 1; ++k) CHECK(same[k] == c[k]);

  auto fej = apply_means(method_by_name("fejer"), 1, c);
  CHECK(std::abs(fej[-1] - c[-1] / 2.0) < 1e-15);
  CHECK(std::abs(fej[0] - c[0]) < 1e-15);
  CHECK(std::abs(fej[1] - c[1] / 2.0) < 1e-15);

  TrigCoefficients e(2);
  e.at(2) = 1.0;
  auto ap = apply_means(method_by_name("abel-poisson(0.5)"), 7, e);
  CHECK(std::abs(ap[2] - 0.25) < 1e-15);
}

TEST_CASE("grid norms") {
  auto one = SampledFunction::sample_real([](double) { return 1.0; }, 16);
  CHECK(grid_norm(one, GridNorm::sup()) == 1.0);
  CHECK(std::abs(grid_norm(one, GridNorm::lp(1.0)) - 2.0 * pi) < 1e-13);
  for (std::size_t M : {8u, 64u, 1024u}) {
    auto c = SampledFunction::sample_real([](double x) { return std::cos(x); }, M);
    CHECK(std::abs(grid_norm(c, GridNorm::lp(2.0)) - std::sqrt(pi)) < 1e-12);
  }
  CHECK_THROWS_AS(GridNorm::lp(0.0), std::invalid_argument);
}

TEST_CASE("catalog") {
  auto all = method_catalog();
  CHECK(all.size() >= 9);
  for (const char* name : {"dirichlet", "fejer", "cesaro(0.5)", "abel-poisson", "abel-poisson(0.3)",
                           "riesz(2,1)", "bochner-riesz(1)", "rogosinski", "bernstein",
                           "vallee-poussin"}) {
    CHECK_NOTHROW(method_by_name(name));
  }
  CHECK_THROWS_AS(method_by_name("nope"), xlab::not_found);
  CHECK_THROWS_AS(method_by_name("riesz(2)"), xlab::not_found);

  auto fejer = method_by_name("fejer");
  CHECK(fejer.kind() == MethodKind::matrix);
  for (int k = -4; k <= 4; ++k) CHECK(std::abs(fejer.multiplier(4, k) - (1.0 - std::abs(k) / 5.0)) < 1e-15);
  // (C,1) through the general Cesaro weights agrees with Fejer
  auto c1 = method_by_name("cesaro(1)");
  CHECK(c1.name() == "fejer");

  auto riesz = method_by_name("riesz(2,1)");
  CHECK(riesz.kind() == MethodKind::generator);
  for (int k = -3; k <= 3; ++k) {
    CHECK(std::abs(riesz.multiplier(2, k) - std::max(0.0, 1.0 - (k / 2.0) * (k / 2.0))) < 1e-15);
  }

  auto rog = method_by_name("rogosinski");
  for (int k = -6; k <= 6; ++k) CHECK(std::abs(rog.multiplier(6, k) - std::cos(k * pi / 12.0)) < 1e-15);

  auto vp = method_by_name("vallee-poussin");
  CHECK(vp.degree(5) == 10);
  CHECK(std::abs(vp.multiplier(5, 5) - 1.0) < 1e-15);
  CHECK(std::abs(vp.multiplier(5, 7) - 0.6) < 1e-15);
}

TEST_CASE("rogosinski multipliers equal the averaged shifted partial sums") {
  // 1/2 (S_n(x + pi/2n) + S_n(x - pi/2n)) evaluated through shifted grid samples
  const int n = 8;
  const std::size_t M = 128;  // pi/(2n) is exactly 4 grid steps
  std::mt19937 rng(7);
  std::normal_distribution<double> g;
  TrigCoefficients c(12);
  for (int k = 0; k <= 12; ++k) {
    c.at(k) = cplx(g(rng), g(rng));
    c.at(-k) = std::conj(c[k]);
  }
  auto direct = synthesize(apply_means(method_by_name("rogosinski"), n, c), M);
  auto partial = synthesize(apply_means(method_by_name("dirichlet"), n, c), M);
  for (std::size_t j = 0; j < M; ++j) {
    const cplx avg = 0.5 * (partial.shifted(j, 4) + partial.shifted(j, -4));
    CHECK(std::abs(avg - direct[j]) < 1e-12);
  }
}

TEST_CASE("fejer kernel is a positive approximate identity on every grid") {
  auto fejer = method_by_name("fejer");
  for (int n : {0, 1, 5, 31, 100}) {
    for (std::size_t M : {256u, 512u}) {
      auto k = kernel(fejer, n, M);
      for (auto v : k.values()) CHECK(v.real() >= -1e-12);
      CHECK(std::abs(grid_norm(k, GridNorm::lp(1.0)) / (2.0 * pi) - 1.0) < 1e-9);
    }
  }
}

TEST_CASE("synthesis and analysis are inverse on admissible degrees") {
  std::mt19937 rng(42);
  std::uniform_int_distribution<int> deg(0, 30);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    const int N = deg(rng);
    TrigCoefficients c(N);
    for (int k = -N; k <= N; ++k) c.at(k) = cplx(g(rng), g(rng));
    std::size_t M = 4;
    while (M < static_cast<std::size_t>(2 * N + 1)) M *= 2;
    auto back = compute_coefficients(synthesize(c, M), N);
    for (int k = -N; k <= N; ++k) CHECK(std::abs(back[k] - c[k]) < 1e-12);
  }
}

TEST_CASE("regular methods tend to the identity on fixed polynomials") {
  TrigCoefficients c(3, {1.0, -2.0, 0.5, 3.0, 0.5, -2.0, 1.0});
  for (const auto& m : method_catalog()) {
    if (!m.regular()) continue;
    double prev = 1e300;
    for (int n : {16, 256, 4096}) {
      auto out = apply_means(m, n, c);
      double dev = 0.0;
      for (int k = -3; k <= 3; ++k) dev = std::max(dev, std::abs(out[k] - c[k]));
      CHECK_MESSAGE(dev <= prev, m.name());
      prev = dev;
    }
    CHECK_MESSAGE(prev < 1e-2, m.name());
  }
}

TEST_CASE("comparison ratio") {
  std::vector<SampledFunction> fset{
      SampledFunction::sample_real([](double x) { return std::abs(std::sin(x)); }, 1024),
      SampledFunction::sample_real([](double x) { return x * x; }, 1024)};
  auto fejer = method_by_name("fejer");
  CHECK(comparison_ratio(fejer, fejer, fset, 16) == doctest::Approx(1.0));

  // partial sums of a series with slowly decaying coefficients stay
  // comparatively poor as n grows: the ratio against Fejer increases
  std::vector<SampledFunction> slow{SampledFunction::sample_real(
      [](double x) {
        double s = 0.0;
        for (int k = 1; k < 512; ++k) s += std::cos(k * x) / std::pow(k, 0.75);
        return s;
      },
      1024)};
  auto dir = method_by_name("dirichlet");
  CHECK(comparison_ratio(fejer, dir, slow, 64) > comparison_ratio(fejer, dir, slow, 8));
}
