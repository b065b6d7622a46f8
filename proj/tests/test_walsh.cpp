#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "xlab/walsh.hpp"

using namespace xlab::walsh;

TEST_CASE("Walsh functions and the dyadic group") {
  const int B = 8;
  for (std::uint32_t j = 0; j < 256; ++j) {
    CHECK(walsh_fn(0, j, B) == 1);
    CHECK(walsh_fn(1, j, B) == (j < 128 ? 1 : -1));
  }
  for (std::uint32_t m = 0; m < 16; ++m)
    for (std::uint32_t n = 0; n < 16; ++n) {
      int s = 0;
      for (std::uint32_t j = 0; j < 256; ++j) s += walsh_fn(m, j, B) * walsh_fn(n, j, B);
      CHECK(s == (m == n ? 256 : 0));
    }
  // psi_{2^k}(x) = (-1)^{theta_{k+1}(x)}
  for (std::uint32_t j = 0; j < 256; ++j)
    for (int k = 0; k < B; ++k) CHECK(walsh_fn(1u << k, j, B) == (((j >> (B - 1 - k)) & 1u) ? -1 : 1));
  CHECK(dyadic_add(37, 37, B) == 0);
  CHECK(dyadic_add(37, 0, B) == 37);
  CHECK_THROWS_AS(walsh_fn(256, 0, B), std::invalid_argument);
}

TEST_CASE("character identity, exhaustive at B = 6") {
  const int B = 6;
  int failures = 0;
  for (std::uint32_t n = 0; n < 64; ++n)
    for (std::uint32_t j = 0; j < 64; ++j)
      for (std::uint32_t l = 0; l < 64; ++l)
        failures += walsh_fn(n, dyadic_add(j, l, B), B) != walsh_fn(n, j, B) * walsh_fn(n, l, B);
  CHECK(failures == 0);
}

TEST_CASE("fast Walsh transform") {
  const int B = 10;
  std::vector<double> delta(1024, 0.0);
  delta[0] = 1.0;
  const auto cd = fwt(DyadicSignal(delta, B));
  for (double c : cd.data()) CHECK(c == std::ldexp(1.0, -B));

  std::vector<double> psi3(1024);
  for (std::uint32_t j = 0; j < 1024; ++j) psi3[j] = walsh_fn(3, j, B);
  const auto c3 = fwt(DyadicSignal(psi3, B));
  for (std::size_t k = 0; k < 1024; ++k) CHECK(c3[k] == (k == 3 ? 1.0 : 0.0));

  std::mt19937_64 rng(2);
  std::normal_distribution<double> g;
  std::vector<double> v(1024);
  for (auto& x : v) x = g(rng);
  const DyadicSignal f(v, B);
  const auto c = fwt(f);
  const auto back = ifwt(c);
  double err = 0.0, energy_f = 0.0, energy_c = 0.0;
  for (std::size_t j = 0; j < 1024; ++j) {
    err = std::max(err, std::fabs(back[j] - f[j]));
    energy_f += f[j] * f[j];
    energy_c += c[j] * c[j];
  }
  CHECK(err < 1e-12);
  CHECK(std::fabs(energy_c - energy_f / 1024) < 1e-12 * energy_f);
  // direct definition
  for (std::uint32_t k : {0u, 5u, 100u, 1023u}) {
    double s = 0.0;
    for (std::uint32_t j = 0; j < 1024; ++j) s += f[j] * walsh_fn(k, j, B);
    CHECK(std::fabs(c[k] - s / 1024) < 1e-13);
  }
  // applying the transform twice scales by 2^{-B}, exactly for dyadic data
  std::vector<double> ints(1024);
  for (std::size_t j = 0; j < 1024; ++j) ints[j] = static_cast<double>((j * 7919) % 13) - 6.0;
  const auto once = fwt(DyadicSignal(ints, B));
  const auto twice = fwt(DyadicSignal(std::vector<double>(once.data().begin(), once.data().end()), B));
  for (std::size_t j = 0; j < 1024; ++j) CHECK(twice[j] == std::ldexp(ints[j], -B));
}

TEST_CASE("Cesaro means") {
  const int B = 10;
  const auto f = DyadicSignal::sample([](double x) { return std::sqrt(x) + std::sin(9 * x); }, B);
  const auto c = fwt(f);
  // alpha = 1 is the arithmetic mean of S_1..S_n
  for (int n : {1, 5, 64, 300}) {
    std::vector<double> mean(1024, 0.0);
    for (int m = 1; m <= n; ++m) {
      std::vector<double> part(1024, 0.0);
      std::copy(c.data().begin(), c.data().begin() + m, part.begin());
      const auto s = ifwt(WalshCoefficients(part, B));
      for (std::size_t j = 0; j < 1024; ++j) mean[j] += s[j] / n;
    }
    const auto sigma = cesaro_means(c, n, 1.0);
    for (std::size_t j = 0; j < 1024; ++j) CHECK(std::fabs(sigma[j] - mean[j]) < 1e-12);
  }
  // Walsh polynomial of order < 2^{B-1}: error bounded by the weight defect
  std::vector<double> poly(1024, 0.0);
  poly[0] = 1.0;
  poly[3] = 0.5;
  poly[400] = -0.25;
  const WalshCoefficients pc(poly, B);
  const auto target = ifwt(pc);
  for (double alpha : {0.5, 1.0, 2.0}) {
    const int n = 1024;
    double bound = 0.0;
    for (int k = 0; k < 512; ++k) bound += std::fabs(poly[k]) * (1 - cesaro_weight(n, k, alpha));
    const auto s = cesaro_means(pc, n, alpha);
    double err = 0.0;
    for (std::size_t j = 0; j < 1024; ++j) err = std::max(err, std::fabs(s[j] - target[j]));
    CHECK(err <= bound + 1e-13);
    CHECK(bound < 1.0);
  }
  CHECK(cesaro_weight(10, 0, 0.5) == 1.0);
  CHECK(cesaro_weight(10, 10, 0.5) == 0.0);
  CHECK(std::fabs(cesaro_weight(10, 3, 1.0) - 0.7) < 1e-14);
}

TEST_CASE("Cesaro equivalence band over the dyadic corpus") {
  const int B = 12;
  double lo = INFINITY, hi = 0.0;
  for (const auto& item : dyadic_corpus()) {
    const auto f = DyadicSignal::sample(item.f, B);
    const auto c = fwt(f);
    for (int n = 2; n <= 1024; n = n * 3 / 2 + 1) {
      const auto s1 = cesaro_means(c, n, 1.0);
      std::vector<double> d1(f.size());
      for (std::size_t j = 0; j < f.size(); ++j) d1[j] = f[j] - s1[j];
      const double base = sup_norm(d1);
      REQUIRE(base > 0.0);
      for (double alpha : {0.5, 2.0}) {
        const auto sa = cesaro_means(c, n, alpha);
        std::vector<double> da(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) da[j] = f[j] - sa[j];
        const double ratio = sup_norm(da) / base;
        lo = std::min(lo, ratio);
        hi = std::max(hi, ratio);
      }
    }
  }
  MESSAGE("Cesaro (C,1/2) and (C,2) against (C,1): ratios in [" << lo << ", " << hi << "]");
  CHECK(lo > 0.2);
  CHECK(hi < 5.0);
}

TEST_CASE("Bernstein-Rogosinski-type means") {
  const auto good = br_means_regularity(0.5, 0.5, 1.0, 1024);
  CHECK(good.bits == 14);
  CHECK(good.bounded);
  for (double v : good.lc_values) CHECK(v <= 1.0 + 1e-12);

  const auto half = br_means_regularity(0.5, 0.5, 0.5, 1024);
  const auto plain = br_means_regularity(1.0, 0.0, 1.0, 1024);
  for (const auto* r : {&half, &plain}) {
    // octave maxima strictly increase from n = 4 on, roughly by a constant step
    for (std::size_t k = 3; k < r->octave_max.size(); ++k) CHECK(r->octave_max[k] > r->octave_max[k - 1]);
    const double per_octave = (r->octave_max.back() - r->octave_max[4]) / (r->octave_max.size() - 5);
    CHECK(per_octave > 0.2);
    CHECK(per_octave < 0.5);
  }
  std::string growth;
  for (double g : half.growth) growth += std::to_string(g) + " ";
  MESSAGE("(1/2,1/2,1/2) octave growth factors: " << growth);
  // logarithmic growth stays below the 1.2 threshold of the top-octave rule
  CHECK(half.growth.back() < 1.2);
  CHECK(half.bounded);
  CHECK(plain.bounded);
  CHECK_THROWS_AS(br_means_regularity(0.5, 0.5, 1.0, 1000), std::invalid_argument);
}

TEST_CASE("Sidon-Telyakovskii type bound") {
  const double first[] = {1.0};
  const auto one = sidon_telyakovskii_bound(first, 8);
  CHECK(std::fabs(one.l1_norm - 1.0) < 1e-15);
  CHECK(one.ok);
  std::vector<double> tri(17);
  for (int k = 0; k <= 16; ++k) tri[k] = std::max(0.0, 1.0 - k / 16.0);
  CHECK(sidon_telyakovskii_bound(tri, 8).ok);
  const std::vector<double> zero(10, 0.0);
  const auto z = sidon_telyakovskii_bound(zero, 8);
  CHECK(z.l1_norm == 0.0);
  CHECK(z.bound == 0.0);
  CHECK(z.ok);

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> len(1, 256), kind(0, 2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  int failures = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> lambda(len(rng));
    const int shape = kind(rng);
    double level = std::fabs(u(rng)) + 0.5;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
      if (shape == 0) {
        lambda[k] = u(rng);  // arbitrary finite sequence
      } else if (shape == 1) {
        level *= 1.0 - 0.2 * std::fabs(u(rng));  // monotone tail
        lambda[k] = level;
      } else {
        lambda[k] = level * (1.0 - static_cast<double>(k) / lambda.size()) * (k % 2 ? 1.0 : 0.5);
      }
    }
    failures += sidon_telyakovskii_bound(lambda, 8).ok ? 0 : 1;
  }
  CHECK(failures == 0);
}

TEST_CASE("Walsh moduli") {
  const int B = 10;
  const auto constant = DyadicSignal::sample([](double) { return 3.0; }, B);
  const auto m0 = walsh_moduli(constant, 2);
  CHECK(m0.Omega == 0.0);
  CHECK(m0.omega == 0.0);
  std::vector<double> psi1(1024);
  for (std::uint32_t j = 0; j < 1024; ++j) psi1[j] = walsh_fn(1, j, B);
  const DyadicSignal p1(psi1, B);
  CHECK(walsh_moduli(p1, 0).omega == 2.0);
  for (int n = 1; n < B; ++n) CHECK(walsh_moduli(p1, n).omega == 0.0);
  // Omega_n reduces to sup_k (2^{k+1}-1)/2^{k+2} ||f - f(. + 2^{-n-1})||
  const auto f = DyadicSignal::sample([](double x) { return x; }, B);
  const auto m = walsh_moduli(f, 3);
  CHECK(std::fabs(m.Omega - (1023.0 / 2048.0) * (1.0 / 16.0)) < 1e-15);
  CHECK(std::fabs(m.omega - (1.0 / 8.0 - 1.0 / 1024.0)) < 1e-15);
  CHECK_THROWS_AS(walsh_moduli(f, B), std::invalid_argument);
}

TEST_CASE("Walsh moduli sandwich over the dyadic corpus") {
  const int B = 12;
  double lower = INFINITY, upper = 0.0;
  for (const auto& item : dyadic_corpus()) {
    const auto f = DyadicSignal::sample(item.f, B);
    const auto c = fwt(f);
    for (int n = 0; n + 2 < B; ++n) {
      const int N = (1 << n) + (1 << n) / 2 + 1;  // inside (2^n, 2^{n+1}]
      const auto s = cesaro_means(c, N, 1.0);
      std::vector<double> d(f.size());
      for (std::size_t j = 0; j < f.size(); ++j) d[j] = f[j] - s[j];
      const double err = sup_norm(d);
      const auto mn = walsh_moduli(f, n);
      const auto mn1 = walsh_moduli(f, n + 1);
      if (item.id == "walsh_poly" && n >= 3) {
        // Omega_n and omega_n both vanish here while the mean still moves f
        CHECK(mn.Omega + mn.omega == 0.0);
        CHECK(err > 0.0);
        continue;
      }
      lower = std::min(lower, err / (mn.Omega + mn1.omega));
      upper = std::max(upper, err / (mn.Omega + mn.omega));
    }
  }
  MESSAGE("corpus constants: c1 = " << lower << ", c2 = " << upper);
  CHECK(lower > 0.0);
  CHECK(std::isfinite(upper));
}
