#include "xlab/lebesgue.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/binomial.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include "fft.hpp"
#include "xlab/errors.hpp"
#include "xlab/quadrature.hpp"

namespace xlab::lebesgue {

using trig::cplx;

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{k=0}^{d} c_k cos(k t) by Clenshaw's recurrence.
double cos_sum(std::span<const double> c, double t) {
  const double x = std::cos(t);
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) {
    const double b0 = c[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1 - x * b2;
}

// sum_{k=1}^{d} s_k sin(k t), s_0 ignored.
double sin_sum(std::span<const double> s, double t) {
  const double x = std::cos(t);
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = s.size(); k-- > 1;) {
    const double b0 = s[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return b1 * std::sin(t);
}

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
};

Line least_squares(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("fit: need at least two matching data points");
  }
  const double m = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit: abscissae must not all coincide");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

void check_positive(std::span<const double> ns) {
  for (double n : ns)
    if (!(n > 0.0)) throw std::invalid_argument("fit: n values must be positive");
}

std::vector<double> dirichlet_values(int m, double y) {
  // D_0..D_m at y
  std::vector<double> d(static_cast<std::size_t>(m) + 1);
  d[0] = 1.0;
  for (int j = 1; j <= m; ++j) d[j] = d[j - 1] + 2.0 * std::cos(j * y);
  return d;
}

}  // namespace

// ---------------------------------------------------------------- fits

AsymptoticFit fit_log_linear(std::span<const double> ns, std::span<const double> values) {
  check_positive(ns);
  std::vector<double> x(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) x[i] = std::log(ns[i]);
  const Line l = least_squares(x, values);
  AsymptoticFit fit{Model::log_linear, {l.slope, l.intercept}, 0.0,
                    {ns.begin(), ns.end()}, {values.begin(), values.end()}};
  for (std::size_t i = 0; i < ns.size(); ++i)
    fit.residual = std::max(fit.residual, std::abs(values[i] - (l.slope * x[i] + l.intercept)));
  return fit;
}

AsymptoticFit fit_power(std::span<const double> ns, std::span<const double> values) {
  check_positive(ns);
  std::vector<double> x(ns.size()), y(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (!(values[i] > 0.0)) throw std::invalid_argument("fit_power: values must be positive");
    x[i] = std::log(ns[i]);
    y[i] = std::log(values[i]);
  }
  const Line l = least_squares(x, y);
  const double c = std::exp(l.intercept);
  AsymptoticFit fit{Model::power, {c, l.slope}, 0.0,
                    {ns.begin(), ns.end()}, {values.begin(), values.end()}};
  for (std::size_t i = 0; i < ns.size(); ++i)
    fit.residual = std::max(fit.residual, std::abs(values[i] - c * std::pow(ns[i], l.slope)));
  return fit;
}

AsymptoticFit fit_log_over_power(std::span<const double> ns, std::span<const double> values,
                                 double r) {
  check_positive(ns);
  std::vector<double> x(ns.size()), y(ns.size());
  for (std::size_t i = 0; i < ns.size(); ++i) {
    x[i] = std::log(ns[i]);
    y[i] = values[i] * std::pow(ns[i], r);
  }
  const Line l = least_squares(x, y);
  AsymptoticFit fit{Model::log_over_power, {l.slope, l.intercept, r}, 0.0,
                    {ns.begin(), ns.end()}, {values.begin(), values.end()}};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double model = (l.slope * x[i] + l.intercept) * std::pow(ns[i], -r);
    fit.residual = std::max(fit.residual, std::abs(values[i] - model));
  }
  return fit;
}

std::vector<int> geometric_grid(int n0, int n1) {
  if (n0 < 1 || n1 < n0) throw std::invalid_argument("geometric_grid: need 1 <= n0 <= n1");
  std::vector<int> out;
  for (long n = n0; n <= n1; n *= 2) out.push_back(static_cast<int>(n));
  return out;
}

// ---------------------------------------------------------------- 1-D constants

LebesgueSample lebesgue_constant(const trig::SummabilityMethod& method, int n, double tol) {
  if (n < 0) throw std::invalid_argument("lebesgue_constant: n must be nonnegative");
  if (!(tol > 0.0)) throw std::invalid_argument("lebesgue_constant: tolerance must be positive");
  const auto lambda = method.multipliers(n);
  const int d = static_cast<int>(lambda.size() / 2);
  const auto at = [&](int k) { return lambda[static_cast<std::size_t>(d + k)]; };

  bool real = true, even = true;
  for (int k = 0; k <= d; ++k) {
    const double scale = std::max(1.0, std::abs(at(k)));
    if (std::abs(at(-k) - std::conj(at(k))) > 1e-14 * scale) real = false;
    if (std::abs(at(k).imag()) > 1e-14 * scale) even = false;
  }
  even = even && real;

  LebesgueSample out{n, 0, 0.0, 0.0};
  const double panel = kPi / (d + 1);
  if (even) {
    std::vector<double> c(d + 1);
    c[0] = at(0).real();
    for (int k = 1; k <= d; ++k) c[k] = 2.0 * at(k).real();
    auto est = quad::integrate_abs([&c](double t) { return cos_sum(c, t); }, 0.0, kPi, panel,
                                   tol * kPi);
    out.value = est.value / kPi;
    out.quad_error = est.error / kPi;
  } else if (real) {
    std::vector<double> c(d + 1), s(d + 1);
    c[0] = at(0).real();
    for (int k = 1; k <= d; ++k) {
      c[k] = 2.0 * at(k).real();
      s[k] = -2.0 * at(k).imag();
    }
    auto est = quad::integrate_abs([&](double t) { return cos_sum(c, t) + sin_sum(s, t); }, -kPi,
                                   kPi, panel, tol * 2.0 * kPi);
    out.value = est.value / (2.0 * kPi);
    out.quad_error = est.error / (2.0 * kPi);
  } else {
    const auto panels = static_cast<int>(std::ceil(2.0 * kPi / panel));
    const double w = 2.0 * kPi / panels;
    const std::span<const cplx> mult(lambda);
    for (int i = 0; i < panels; ++i) {
      auto est = quad::integrate(
          [mult](double t) { return std::abs(trig::kernel_value(mult, t)); }, -kPi + i * w,
          -kPi + (i + 1) * w, tol * w, 30);
      out.value += est.value;
      out.quad_error += est.error;
    }
    out.value /= 2.0 * kPi;
    out.quad_error /= 2.0 * kPi;
  }
  return out;
}

AsymptoticFit classical_lebesgue_fit(int nmin, int nmax, double tol) {
  if (nmin < 16 || nmax < 4 * nmin) {
    throw std::invalid_argument("classical_lebesgue_fit: need nmax >= 4 nmin >= 64");
  }
  const auto dir = trig::method_by_name("dirichlet");
  std::vector<double> ns, values;
  for (int n : geometric_grid(nmin, nmax)) {
    ns.push_back(n);
    values.push_back(lebesgue_constant(dir, n, tol).value);
  }
  return fit_log_linear(ns, values);
}

// ---------------------------------------------------------------- W^r deviation

double kolmogorov_tail(int r, int n, double t) {
  if (r < 1 || r > 20) throw std::invalid_argument("kolmogorov: r must lie in [1, 20]");
  if (n < 0) throw std::invalid_argument("kolmogorov: n must be nonnegative");
  t = std::fmod(t, 2.0 * kPi);
  if (t < 0.0) t += 2.0 * kPi;
  // sum_{k>=1} cos(kt - r pi/2)/k^r = -(2 pi)^r B_r(t/2pi) / (2 r!) on [0, 2pi)
  const double x = t / (2.0 * kPi);
  double bern = 0.0;
  for (int j = 0; j <= r; ++j) {
    double bj = 0.0;
    if (j == 0) bj = 1.0;
    else if (j == 1) bj = -0.5;
    else if (j % 2 == 0) bj = boost::math::bernoulli_b2n<double>(j / 2);
    if (bj != 0.0) bern += boost::math::binomial_coefficient<double>(r, j) * bj * std::pow(x, r - j);
  }
  const double full = -std::pow(2.0 * kPi, r) * bern / (2.0 * boost::math::factorial<double>(r));

  std::vector<double> w(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) w[k] = std::pow(static_cast<double>(k), -r);
  // cos(kt - r pi/2) cycles through cos, sin, -cos, -sin
  double partial = 0.0;
  switch (r % 4) {
    case 0: partial = cos_sum(w, t); break;
    case 1: partial = sin_sum(w, t); break;
    case 2: partial = -cos_sum(w, t); break;
    default: partial = -sin_sum(w, t); break;
  }
  return full - partial;
}

double kolmogorov_deviation(int r, int n, double tol) {
  if (n < 1) throw std::invalid_argument("kolmogorov_deviation: n must be positive");
  if (!(tol > 0.0)) throw std::invalid_argument("kolmogorov_deviation: tolerance must be positive");
  auto est = quad::integrate_abs([r, n](double t) { return kolmogorov_tail(r, n, t); }, 0.0,
                                 2.0 * kPi, kPi / (n + 1), tol * kPi);
  return est.value / kPi;
}

// ---------------------------------------------------------------- 2-D kernels

LebesgueSample rhombic_lebesgue(int n1, int n2, double tol) {
  if (n1 < 1 || n2 < 1 || n2 % n1 != 0) {
    throw std::invalid_argument("rhombic_lebesgue: n2 must be a positive multiple of n1");
  }
  if (n1 > 64 || n2 > 1024) throw std::invalid_argument("rhombic_lebesgue: cost guard exceeded");
  if (!(tol > 0.0)) throw std::invalid_argument("rhombic_lebesgue: tolerance must be positive");
  const int ratio = n2 / n1;
  // Half the budget goes to the inner integrals, half to the outer one.
  const double inner_tol = 0.25 * tol * kPi;
  double worst_inner = 0.0;

  auto row = [&](double y) {
    const auto d = dirichlet_values(n2, y);
    std::vector<double> a(n1 + 1);
    a[0] = d[n2];
    for (int k = 1; k <= n1; ++k) a[k] = 2.0 * d[n2 - ratio * k];
    auto est = quad::integrate_abs([&a](double x) { return cos_sum(a, x); }, 0.0, kPi,
                                   kPi / (n1 + 1), inner_tol);
    worst_inner = std::max(worst_inner, est.error);
    return est.value / kPi;
  };

  const int panels = n2 + 1;
  const double w = kPi / panels;
  double value = 0.0, err = 0.0;
  for (int i = 0; i < panels; ++i) {
    auto est = quad::integrate(row, i * w, (i + 1) * w, 0.5 * tol * w, 30);
    value += est.value;
    err += est.error;
  }
  LebesgueSample out{n1, n2, value / kPi, err / kPi + worst_inner / kPi};
  if (out.quad_error > tol) {
    throw convergence_failure("rhombic_lebesgue: tolerance not reached", out.value, out.quad_error);
  }
  return out;
}

LebesgueSample hyperbolic_norm(double alpha, int n) {
  if (!(alpha >= 1.0)) throw std::invalid_argument("hyperbolic: alpha must be >= 1");
  if (n < 1 || n > 4096) throw std::invalid_argument("hyperbolic: n must lie in [1, 4096]");
  // m[k1] = largest |k2| allowed in column k1
  const int N1 = static_cast<int>(std::floor(std::pow(n, 1.0 / alpha) + 1e-9));
  std::vector<int> m(N1 + 1);
  double support = 0.0;
  for (int k1 = 0; k1 <= N1; ++k1) {
    m[k1] = static_cast<int>(std::floor(n / std::pow(std::max(1, k1), alpha) + 1e-9));
    support += (k1 == 0 ? 1.0 : 2.0) * (2.0 * m[k1] + 1.0);
  }
  if (support > 1e6) throw std::invalid_argument("hyperbolic: kernel support exceeds cost guard");
  // q[k2] = largest |k1| allowed in row k2
  std::vector<int> q(n + 1, 0);
  for (int k2 = 0; k2 <= n; ++k2) {
    int k1 = 0;
    while (k1 + 1 <= N1 && m[k1 + 1] >= k2) ++k1;
    q[k2] = k1;
  }

  const auto grid = [](int deg) { return std::bit_ceil(static_cast<std::size_t>(3 * deg + 1)); };
  const std::size_t M1 = std::max<std::size_t>(grid(N1), 64);
  const std::size_t M2 = std::max<std::size_t>(grid(n), 64);
  std::vector<cplx> buf(M2);
  double total = 0.0, coarse = 0.0;
  // The kernel is even in x1: rows j and M1 - j coincide.
  for (std::size_t j = 0; j <= M1 / 2; ++j) {
    const double x1 = 2.0 * kPi * static_cast<double>(j) / static_cast<double>(M1);
    const auto d = dirichlet_values(N1, x1);
    std::fill(buf.begin(), buf.end(), cplx{});
    for (int k2 = -n; k2 <= n; ++k2) {
      buf[static_cast<std::size_t>((k2 + static_cast<long>(M2)) % static_cast<long>(M2))] =
          d[q[std::abs(k2)]];
    }
    detail::fft(buf, +1);
    double s = 0.0;
    for (const auto& v : buf) s += std::abs(v.real());
    const double weight = (j == 0 || j == M1 / 2) ? 1.0 : 2.0;
    total += weight * s;
    if (j % 2 == 0) coarse += weight * s;
  }
  const double value = total / static_cast<double>(M1 * M2);
  const double coarse_value = 2.0 * coarse / static_cast<double>(M1 * M2);
  return {n, 0, value, std::abs(value - coarse_value)};
}

AsymptoticFit hyperbolic_exponent(double alpha, std::span<const int> nset) {
  if (nset.size() < 2) throw std::invalid_argument("hyperbolic_exponent: need at least two n");
  std::vector<double> ns, values;
  for (int n : nset) {
    ns.push_back(n);
    values.push_back(hyperbolic_norm(alpha, n).value);
  }
  return fit_power(ns, values);
}

// ---------------------------------------------------------------- discrete means

trig::TrigCoefficients fourier_lagrange_coeffs(const std::function<cplx(double)>& f, int n) {
  if (n < 0) throw std::invalid_argument("fourier_lagrange_coeffs: n must be nonnegative");
  const int P = 2 * n + 1;
  std::vector<cplx> samples(P);
  for (int p = 0; p < P; ++p) samples[p] = f(2.0 * kPi * p / P);
  trig::TrigCoefficients c(n);
  for (int k = -n; k <= n; ++k) {
    cplx s{};
    for (int p = 0; p < P; ++p) {
      // reduce k p mod P so the phase stays exact for large k
      const long kp = ((static_cast<long>(k) * p) % P + P) % P;
      s += samples[p] * std::polar(1.0, -2.0 * kPi * static_cast<double>(kp) / P);
    }
    c.at(k) = s / static_cast<double>(P);
  }
  return c;
}

trig::TrigCoefficients fourier_lagrange_coeffs(const trig::SampledFunction& f, int n) {
  const auto spectrum = trig::grid_spectrum(f);
  return fourier_lagrange_coeffs([&spectrum](double x) { return trig::interpolate(spectrum, x); },
                                 n);
}

double lebesgue_function(const trig::SummabilityMethod& method, int n, double x) {
  if (n < 0) throw std::invalid_argument("lebesgue_function: n must be nonnegative");
  const auto lambda = method.multipliers(n);
  const int P = 2 * n + 1;
  double s = 0.0;
  for (int p = 0; p < P; ++p) s += std::abs(trig::kernel_value(lambda, x - 2.0 * kPi * p / P));
  return s / P;
}

}  // namespace xlab::lebesgue
