#include <cmath>
#include <numbers>

#include "doctest.h"
#include "xlab/errors.hpp"
#include "xlab/quadrature.hpp"

using namespace xlab::quad;
constexpr double pi = std::numbers::pi;

TEST_CASE("gauss-kronrod integrates smooth functions") {
  auto est = integrate([](double x) { return std::sin(x); }, 0.0, pi, 1e-13);
  CHECK(est.value == doctest::Approx(2.0).epsilon(1e-13));
  CHECK(est.error <= 1e-13);
}

TEST_CASE("abs integral splits at sign changes") {
  auto est = integrate_abs([](double x) { return std::sin(x); }, 0.0, 2.0 * pi, 0.5, 1e-12);
  CHECK(std::abs(est.value - 4.0) < 1e-11);
  // |cos 10x| has 20 humps of area 1/10 on [0, pi]
  auto osc = integrate_abs([](double x) { return std::cos(10.0 * x); }, 0.0, pi, pi / 11, 1e-12);
  CHECK(std::abs(osc.value - 2.0) < 1e-11);
}

TEST_CASE("failure carries the best estimate") {
  try {
    integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-15, 3);
    FAIL("expected convergence_failure");
  } catch (const xlab::convergence_failure& e) {
    CHECK(e.best_estimate() > 1.0);
    CHECK(e.error_estimate() > 1e-15);
  }
}

TEST_CASE("gauss-legendre is exact to degree 2n-1") {
  for (unsigned n : {1u, 2u, 5u, 12u, 40u}) {
    auto rule = gauss_legendre(n);
    double sum_w = 0.0;
    double moment = 0.0;
    const int deg = 2 * static_cast<int>(n) - 2;  // even, so the moment is nonzero
    for (unsigned i = 0; i < n; ++i) {
      sum_w += rule.weights[i];
      moment += rule.weights[i] * std::pow(rule.nodes[i], deg);
    }
    CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(moment == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-12));
  }
}
