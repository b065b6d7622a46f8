#include "xlab/smoothness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <boost/math/special_functions/binomial.hpp>

#include "xlab/quadrature.hpp"

namespace xlab::smooth {

using trig::cplx;
using trig::SampledFunction;

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<double> difference_weights(int r) {
  if (r < 1 || r > 30) throw std::invalid_argument("smoothness: order r must lie in [1, 30]");
  std::vector<double> w(r + 1);
  for (int nu = 0; nu <= r; ++nu) {
    w[nu] = (nu % 2 == 0 ? 1.0 : -1.0) * boost::math::binomial_coefficient<double>(r, nu);
  }
  return w;
}

std::vector<cplx> difference(const SampledFunction& f, const std::vector<double>& w, int steps) {
  std::vector<cplx> d(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    cplx s{};
    for (std::size_t nu = 0; nu < w.size(); ++nu) {
      s += w[nu] * f.shifted(j, static_cast<std::ptrdiff_t>(nu) * steps);
    }
    d[j] = s;
  }
  return d;
}

double norm_of(std::vector<cplx> values, trig::GridNorm norm) {
  return trig::grid_norm(SampledFunction(std::move(values)), norm);
}

// Composite weights on 0..J, J >= 2 (in units of the step): Simpson, 3/8 tail
// for odd J. Exact on polynomials of degree <= 3.
std::vector<double> delta_weights(int J) {
  std::vector<double> w(J + 1, 0.0);
  const int simpson_end = (J % 2 == 0) ? J : J - 3;
  for (int i = 0; i + 2 <= simpson_end; i += 2) {
    w[i] += 1.0 / 3.0;
    w[i + 1] += 4.0 / 3.0;
    w[i + 2] += 1.0 / 3.0;
  }
  if (simpson_end != J) {
    const int s = simpson_end;
    w[s] += 3.0 / 8.0;
    w[s + 1] += 9.0 / 8.0;
    w[s + 2] += 9.0 / 8.0;
    w[s + 3] += 3.0 / 8.0;
  }
  return w;
}

double derivative_norm(const SampledFunction& g, int r, trig::GridNorm norm) {
  return trig::grid_norm(trig::spectral_derivative(g, r), norm);
}

}  // namespace

int steps_for(const SampledFunction& f, double h) {
  if (!(h > 0.0) || h > kPi + 1e-12) throw std::invalid_argument("modulus: h must lie in (0, pi]");
  const int J = static_cast<int>(std::floor(h / f.step() + 1e-9));
  if (J < 1) throw std::invalid_argument("modulus: h is smaller than one grid step");
  return J;
}

double difference_norm(const SampledFunction& f, int r, int steps, trig::GridNorm norm) {
  return norm_of(difference(f, difference_weights(r), steps), norm);
}

double modulus(const SampledFunction& f, const ModulusSpec& spec) {
  const int J = steps_for(f, spec.h);
  const auto w = difference_weights(spec.r);
  double best = 0.0;
  for (int j = 1; j <= J; ++j) best = std::max(best, norm_of(difference(f, w, j), spec.norm));
  return best;
}

double linearized_modulus(const SampledFunction& f, const ModulusSpec& spec) {
  const int J = steps_for(f, spec.h);
  if (J < 2) throw std::invalid_argument("linearized_modulus: h must cover at least two grid steps");
  const auto w = difference_weights(spec.r);
  const auto q = delta_weights(J);
  std::vector<cplx> avg(f.size());
  // delta = 0 contributes nothing: the difference weights sum to zero.
  for (int j = 1; j <= J; ++j) {
    const auto d = difference(f, w, j);
    for (std::size_t i = 0; i < avg.size(); ++i) avg[i] += q[j] * d[i];
  }
  for (auto& v : avg) v /= static_cast<double>(J);
  return norm_of(std::move(avg), spec.norm);
}

TwoSided jackson_two_sided(const SampledFunction& f, int r, int n) {
  return jackson_two_sided(f, r, n, trig::method_by_name("vallee-poussin"), trig::GridNorm::sup(),
                           1.0 / n);
}

TwoSided jackson_two_sided(const SampledFunction& f, int r, int n,
                           const trig::SummabilityMethod& method, trig::GridNorm norm, double h) {
  if (n < 1 || n < r) throw std::invalid_argument("jackson_two_sided: need n >= r and n >= 1");
  TwoSided out;
  out.approx_error = trig::grid_norm(f - trig::apply_means(method, n, f), norm);
  out.modulus_value = modulus(f, {r, norm, h});
  if (out.modulus_value > 0.0) {
    out.ratio = out.approx_error / out.modulus_value;
  } else {
    out.ratio = out.approx_error > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
  }
  return out;
}

double k_functional(const SampledFunction& f, double t, int r, trig::GridNorm norm) {
  if (!(t > 0.0 && t <= 1.0)) throw std::invalid_argument("k_functional: t must lie in (0, 1]");
  if (r < 1) throw std::invalid_argument("k_functional: r must be positive");
  const double tr = std::pow(t, r);
  double best = std::min(trig::grid_norm(f, norm), tr * derivative_norm(f, r, norm));
  const auto vp = trig::method_by_name("vallee-poussin");
  const auto spectrum = trig::grid_spectrum(f);
  for (int deg = 1; deg <= 4.0 / t && 2 * deg <= static_cast<int>(f.size()) / 2; deg *= 2) {
    const auto g = trig::apply_means_spectrum(vp, deg, spectrum);
    best = std::min(best, trig::grid_norm(f - g, norm) + tr * derivative_norm(g, r, norm));
  }
  return best;
}

double sine_integral(double x) {
  if (x == 0.0) return 0.0;
  const auto sinc = [](double s) { return s == 0.0 ? 1.0 : std::sin(s) / s; };
  return quad::integrate(sinc, 0.0, x, 1e-15 * std::max(1.0, std::abs(x)), 30).value;
}

double bernstein_mean_sharp_constant() {
  return 1.0 / (2.0 + 4.0 / kPi * sine_integral(kPi));
}

LowerBoundCheck bernstein_lower_bound(const SampledFunction& f, int n) {
  if (n < 1 || f.size() % (2 * static_cast<std::size_t>(n)) != 0) {
    throw std::invalid_argument("bernstein_lower_bound: grid size must be a multiple of 2n");
  }
  static const double A = bernstein_mean_sharp_constant();
  LowerBoundCheck out;
  out.lower = A * modulus(f, {1, trig::GridNorm::sup(), kPi / n});
  out.error = trig::grid_norm(f - trig::apply_means(trig::method_by_name("bernstein"), n, f),
                              trig::GridNorm::sup());
  out.slack = out.error - out.lower;
  return out;
}

}  // namespace xlab::smooth
