#include "xlab/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace xlab::corpus {

namespace {

constexpr double kPi = std::numbers::pi;

double weierstrass(double x) {
  double s = 0.0;
  for (int k = 0; k <= 8; ++k) s += std::pow(2.0, -0.5 * k) * std::cos(std::ldexp(1.0, k) * x);
  return s;
}

}  // namespace

const std::vector<NamedFunction>& standard() {
  static const std::vector<NamedFunction> fns = {
      {"abs_sin", [](double x) { return std::abs(std::sin(x)); }},
      {"triangle", [](double x) { return std::abs(x); }},
      {"sqrt_abs_sin", [](double x) { return std::sqrt(std::abs(std::sin(x))); }},
      {"abs_sin_pow_1.5", [](double x) { return std::pow(std::abs(std::sin(x)), 1.5); }},
      {"cos", [](double x) { return std::cos(x); }},
      {"sin3", [](double x) { return std::sin(3.0 * x); }},
      {"exp_cos", [](double x) { return std::exp(std::cos(x)); }},
      {"poisson", [](double x) { return 1.0 / (1.25 - std::cos(x)); }},
      {"sqrt_abs_x", [](double x) { return std::sqrt(std::abs(x)); }},
      {"parabola", [](double x) { return x * x; }},
      {"half_wave", [](double x) { return std::max(0.0, std::cos(x)); }},
      {"abs_cos2", [](double x) { return std::abs(std::cos(2.0 * x)); }},
      {"cubic", [](double x) { return x * (kPi * kPi - x * x); }},
      {"tanh_sin", [](double x) { return std::tanh(5.0 * std::sin(x)); }},
      {"weierstrass", weierstrass},
      {"abs_sin_half", [](double x) { return std::abs(std::sin(0.5 * x)); }},
      {"clipped_sin", [](double x) { return std::clamp(2.0 * std::sin(x), -1.0, 1.0); }},
      {"log_abs_sin", [](double x) { return std::log1p(std::abs(std::sin(x))); }},
      {"bernoulli2", [](double x) { return kPi * kPi / 6.0 - kPi * std::abs(x) / 2.0 + x * x / 4.0; }},
      {"exp_sin2", [](double x) { return std::exp(std::sin(2.0 * x)); }},
  };
  return fns;
}

std::vector<trig::SampledFunction> sampled(std::size_t M) {
  std::vector<trig::SampledFunction> out;
  out.reserve(standard().size());
  for (const auto& nf : standard()) out.push_back(trig::SampledFunction::sample_real(nf.f, M));
  return out;
}

}  // namespace xlab::corpus
