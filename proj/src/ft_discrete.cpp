#include "xlab/ft_discrete.hpp"

#include <algorithm>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/tools/roots.hpp>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "xlab/errors.hpp"
#include "xlab/quadrature.hpp"

namespace xlab::ftd {

namespace {

constexpr double pi = std::numbers::pi;
constexpr cplx I{0.0, 1.0};

double bessel_series(double nu, double x) {
  using ld = long double;
  const ld h = static_cast<ld>(x) / 2;
  ld term = std::pow(h, static_cast<ld>(nu)) / std::tgamma(static_cast<ld>(nu) + 1);
  ld sum = term;
  for (int k = 0; k < 500; ++k) {
    term *= -h * h / (static_cast<ld>(k + 1) * (k + 1 + nu));
    sum += term;
    if (k > x && std::fabs(term) < 1e-22L * std::fabs(sum)) break;
  }
  return static_cast<double>(sum);
}

double bessel_asymptotic(double nu, double x) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0, term = 1.0, last = std::numeric_limits<double>::infinity();
  for (int k = 1; k < 200; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (mu - odd * odd) / (k * 8.0 * x);
    if (std::fabs(next) >= last && k > 2) break;  // series starts diverging
    term = next;
    last = std::fabs(term);
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0)
      p += sign * term;
    else
      q += sign * term;
    if (last < 1e-18) break;
  }
  const double chi = x - (nu / 2.0 + 0.25) * pi;
  return std::sqrt(2.0 / (pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

// Coefficients of the polynomial P_p with d^p/dx^p cot(x/2) = P_p(cot(x/2)).
std::vector<double> cot_derivative_poly(int p) {
  std::vector<double> poly{0.0, 1.0};
  for (int k = 0; k < p; ++k) {
    // P' (c) * (-(1 + c^2) / 2)
    std::vector<double> d(poly.size() > 1 ? poly.size() - 1 : 1, 0.0);
    for (std::size_t j = 1; j < poly.size(); ++j) d[j - 1] = poly[j] * static_cast<double>(j);
    std::vector<double> next(d.size() + 2, 0.0);
    for (std::size_t j = 0; j < d.size(); ++j) {
      next[j] -= 0.5 * d[j];
      next[j + 2] -= 0.5 * d[j];
    }
    poly = std::move(next);
  }
  return poly;
}

double falling(double a, int k) {
  double s = 1.0;
  for (int i = 0; i < k; ++i) s *= a - i;
  return s;
}

double factorial(int k) { return falling(static_cast<double>(k), k); }

// (e^z - 1) / z for purely imaginary z = i*theta.
cplx expm1_over(double theta) {
  if (std::fabs(theta) < 1e-4) {
    const cplx z = I * theta;
    return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
  }
  const double s = std::sin(theta / 2.0);
  return cplx(-2.0 * s * s, std::sin(theta)) / (I * theta);
}

double unit_disc_ft(double rho) {
  if (rho < 1e-6) return pi;
  return 2.0 * pi * bessel_j(1.0, rho) / rho;
}

}  // namespace

double bessel_j(double nu, double x) {
  if (!(nu >= 0.0) || !(x >= 0.0) || !std::isfinite(x))
    throw std::invalid_argument("bessel_j: need nu >= 0 and finite x >= 0");
  if (x == 0.0) return nu == 0.0 ? 1.0 : 0.0;
  return x < bessel_seam ? bessel_series(nu, x) : bessel_asymptotic(nu, x);
}

double bessel_zero(double nu, int p) {
  if (!(nu >= 0.0 && nu <= 5.0) || p < 1 || p > 20)
    throw std::invalid_argument("bessel_zero: need nu in [0,5] and 1 <= p <= 20");
  const double mu = 4.0 * nu * nu;
  const double beta = (p + nu / 2.0 - 0.25) * pi;
  const double e = 8.0 * beta;
  double x = beta - (mu - 1.0) / e - 4.0 * (mu - 1.0) * (7.0 * mu - 31.0) / (3.0 * e * e * e);
  x = std::max(x, nu + 0.5);

  auto count_zeros_below = [nu](double t) {
    int count = 0;
    double prev = bessel_j(nu, 1e-3);
    for (double s = 0.05; s < t; s += 0.05) {
      const double cur = bessel_j(nu, s);
      if ((prev < 0.0) != (cur < 0.0)) ++count;
      prev = cur;
    }
    return count;
  };

  bool converged = false;
  for (int it = 0; it < 60; ++it) {
    const double j = bessel_j(nu, x);
    const double dj = (x > 0 ? nu / x * j : 0.0) - bessel_j(nu + 1.0, x);
    const double step = j / dj;
    if (!std::isfinite(step)) break;
    x -= step;
    if (!(x > 0.0)) break;
    if (std::fabs(step) < 1e-15 * x) {
      converged = true;
      break;
    }
  }
  // Newton may land on a neighbouring zero; fall back to bracketing by counting.
  if (!converged || count_zeros_below(x - 0.01) != p - 1) {
    double prev_t = 1e-3, prev = bessel_j(nu, prev_t);
    int seen = 0;
    bool bracketed = false;
    double lo = 0.0, hi = 0.0;
    for (double t = 0.05; t < 100.0; t += 0.05) {
      const double cur = bessel_j(nu, t);
      if ((prev < 0.0) != (cur < 0.0) && ++seen == p) {
        lo = prev_t;
        hi = t;
        bracketed = true;
        break;
      }
      prev = cur;
      prev_t = t;
    }
    if (!bracketed) throw convergence_failure("bessel_zero: Newton diverged", x, INFINITY);
    boost::uintmax_t iters = 200;
    const auto root = boost::math::tools::toms748_solve(
        [nu](double t) { return bessel_j(nu, t); }, lo, hi,
        boost::math::tools::eps_tolerance<double>(52), iters);
    x = 0.5 * (root.first + root.second);
  }
  if (std::fabs(bessel_j(nu, x)) > 1e-10)
    throw convergence_failure("bessel_zero: residual above 1e-10", x, std::fabs(bessel_j(nu, x)));
  return x;
}

double h_function(double x, int p) {
  if (p < 0 || p > 4) throw std::invalid_argument("h_function: derivative order must be in [0,4]");
  if (!(std::fabs(x) <= pi * (1 + 1e-14))) throw std::invalid_argument("h_function: need |x| <= pi");
  if (std::fabs(x) < h_seam) {
    // h(x) = sum_{k>=1} |B_2k| x^{2k-1} / (2k)!
    double s = 0.0;
    for (int k = 1; k <= 30; ++k) {
      const int power = 2 * k - 1;
      if (power < p) continue;
      const double c = std::fabs(boost::math::bernoulli_b2n<double>(k)) / factorial(2 * k);
      s += c * falling(power, p) * std::pow(x, power - p);
    }
    return s;
  }
  const double c = 1.0 / std::tan(x / 2.0);
  const auto poly = cot_derivative_poly(p);
  double dcot = 0.0;
  for (std::size_t j = poly.size(); j-- > 0;) dcot = dcot * c + poly[j];
  const double inv = (p % 2 == 0 ? 1.0 : -1.0) * factorial(p) / std::pow(x, p + 1);
  return inv - 0.5 * dcot;
}

DecayingFunction DecayingFunction::exponential(double a) {
  if (!(a > 0.0)) throw std::invalid_argument("exponential: need a > 0");
  DecayingFunction f;
  std::ostringstream os;
  os << "exp(-" << a << "u)";
  f.name = os.str();
  f.derivative = [a](int p, double u) { return std::pow(-a, p) * std::exp(-a * u); };
  f.monotone_derivatives = true;
  return f;
}

DecayingFunction DecayingFunction::inverse_power(double b) {
  if (!(b > 0.0)) throw std::invalid_argument("inverse_power: need b > 0");
  DecayingFunction f;
  std::ostringstream os;
  os << "(1+u)^-" << b;
  f.name = os.str();
  f.derivative = [b](int p, double u) {
    return falling(-b, p) * std::pow(1.0 + u, -b - p);
  };
  f.monotone_derivatives = true;
  return f;
}

EulerMaclaurin euler_maclaurin_sum(const DecayingFunction& f, int n, int r, double x) {
  if (!f.derivative) throw std::invalid_argument("euler_maclaurin_sum: empty function");
  if (x == 0.0) throw std::invalid_argument("euler_maclaurin_sum: x = 0 is the classical limit case");
  if (!(std::fabs(x) <= pi * (1 + 1e-14))) throw std::invalid_argument("euler_maclaurin_sum: need |x| <= pi");
  if (r < 0 || r > 5) throw std::invalid_argument("euler_maclaurin_sum: need 0 <= r <= 5");
  if (n < 0) throw std::invalid_argument("euler_maclaurin_sum: need n >= 0");

  const cplx z = std::exp(I * x);
  const cplx zn = std::exp(I * (x * n));
  const double inv_gap = 1.0 / std::abs(1.0 - z);
  EulerMaclaurin out;

  // Series: direct part up to K, then q rounds of summation by parts. The
  // remainder (z/(1-z))^q sum Delta^q f(k) z^k is bounded via |Delta^{q-1} f(K)|.
  constexpr int q = 12;
  double series_bound = INFINITY;
  for (long K = n + 256; K <= n + (1L << 22); K *= 2) {
    cplx direct = 0.0;
    for (long k = n; k < K; ++k) direct += f(static_cast<double>(k)) * std::exp(I * (x * k));
    std::vector<double> diff(q + 1);
    for (int j = 0; j <= q; ++j) diff[j] = f(static_cast<double>(K + j));
    std::vector<double> lead(q + 1);
    for (int j = 0; j <= q; ++j) {
      lead[j] = diff[0];
      for (int i = 0; i + 1 < static_cast<int>(diff.size()) - j; ++i) diff[i] = diff[i + 1] - diff[i];
    }
    const cplx zK = std::exp(I * (x * K));
    cplx tail = 0.0;
    cplx factor = zK / (1.0 - z);
    for (int j = 0; j < q; ++j) {
      tail += factor * lead[j];
      factor *= z / (1.0 - z);
    }
    series_bound = std::pow(inv_gap, q) * std::fabs(lead[q - 1]) + 1e-16 * std::abs(direct);
    out.lhs = direct + tail;
    if (series_bound < 1e-14 * std::max(1.0, std::abs(out.lhs))) break;
  }
  if (!(series_bound < 1e-10 * std::max(1.0, std::abs(out.lhs))))
    throw convergence_failure("euler_maclaurin_sum: series tail did not converge",
                              std::abs(out.lhs), series_bound);

  // Integral: panels of a half period up to U, then the asymptotic expansion
  // int_U^inf f e^{iux} = e^{iUx} sum_j (-1)^{j+1} f^(j)(U) / (ix)^{j+1}.
  const double panel = pi / std::fabs(x);
  double integral_bound = INFINITY;
  cplx integral = 0.0;
  for (double L = 64.0; L <= 65536.0; L *= 2) {
    const double U = n + L;
    for (int p = 0; p <= r; ++p) {
      const double a = std::fabs(f.derivative(p, U));
      if (!std::isfinite(a) || std::fabs(f.derivative(p, 2 * U)) > a * (1 + 1e-12))
        throw convergence_failure("euler_maclaurin_sum: derivatives do not decay", a, INFINITY);
    }
    cplx body = 0.0;
    double err = 0.0;
    for (double a = n; a < U; a += panel) {
      const double b = std::min(U, a + panel);
      const auto re = quad::integrate([&](double u) { return f(u) * std::cos(u * x); }, a, b, 1e-16);
      const auto im = quad::integrate([&](double u) { return f(u) * std::sin(u * x); }, a, b, 1e-16);
      body += cplx(re.value, im.value);
      err += re.error + im.error;
    }
    cplx tail = 0.0;
    cplx ix_pow = I * x;
    double last = INFINITY;
    for (int j = 0; j < 40; ++j) {
      const cplx term = (j % 2 == 0 ? -1.0 : 1.0) * f.derivative(j, U) / ix_pow;
      if (std::abs(term) > last) break;
      last = std::abs(term);
      tail += term;
      ix_pow *= I * x;
      if (last < 1e-18) break;
    }
    integral = body + std::exp(I * (U * x)) * tail;
    integral_bound = err + last;
    if (integral_bound < 1e-13 * std::max(1.0, std::abs(integral))) break;
  }
  if (!(integral_bound < 1e-10 * std::max(1.0, std::abs(integral))))
    throw convergence_failure("euler_maclaurin_sum: integral did not converge", std::abs(integral),
                              integral_bound);

  cplx corr = 0.0;
  cplx mi_pow = -I;  // (-i)^{p+1}
  for (int p = 0; p < r; ++p) {
    corr += mi_pow / factorial(p) * h_function(x, p) * f.derivative(p, n);
    mi_pow *= -I;
  }
  out.rhs_main = integral + 0.5 * f(n) * zn + zn * corr;
  out.tail_bound = series_bound + integral_bound;

  if (f.variation) {
    out.variation = *f.variation;
  } else if (f.monotone_derivatives) {
    out.variation = std::fabs(f.derivative(r, n));
  } else {
    // fine-grid variation of f^(r), inflated by 1%
    double v = 0.0, prev = f.derivative(r, n);
    const double U = n + 4096.0;
    for (double u = n + 1e-2; u <= U; u += 1e-2) {
      const double cur = f.derivative(r, u);
      v += std::fabs(cur - prev);
      prev = cur;
    }
    out.variation = 1.01 * (v + std::fabs(prev));
  }
  const cplx diff = out.lhs - out.rhs_main;
  const double scale = std::pow(pi, r);
  if (out.variation > 0.0) {
    out.theta = diff * scale / out.variation;
  } else {
    out.theta = std::abs(diff) <= out.tail_bound ? cplx(0.0) : cplx(INFINITY);
  }
  const double slack = out.variation > 0.0 ? out.tail_bound * scale / out.variation : 0.0;
  if (!(std::abs(out.theta) <= 3.0 + 1e-9 + slack)) {
    std::ostringstream os;
    os << "euler_maclaurin_sum: |theta| = " << std::abs(out.theta) << " exceeds 3 for " << f.name
       << ", n=" << n << ", r=" << r << ", x=" << x;
    throw internal_error(os.str());
  }
  return out;
}

ConvexBody2D ConvexBody2D::polygon(std::vector<Point> vertices) {
  if (vertices.size() < 3) throw std::invalid_argument("polygon: need at least 3 vertices");
  auto cross = [](const Point& a, const Point& b, const Point& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  };
  double area2 = 0.0;
  const std::size_t n = vertices.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    area2 += a[0] * b[1] - a[1] * b[0];
  }
  if (area2 < 0.0) std::reverse(vertices.begin(), vertices.end());
  double scale = 0.0;
  for (const auto& v : vertices) scale = std::max({scale, std::fabs(v[0]), std::fabs(v[1])});
  const double tol = 1e-12 * scale * scale;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& a = vertices[i];
    const auto& b = vertices[(i + 1) % n];
    const auto& c = vertices[(i + 2) % n];
    if (!(cross(a, b, c) > tol)) throw std::invalid_argument("polygon: vertices are not strictly convex");
    if (!(cross(a, b, Point{0.0, 0.0}) > tol))
      throw std::invalid_argument("polygon: origin is not an interior point");
  }
  ConvexBody2D body;
  body.kind_ = Kind::polygon;
  body.vertices_ = std::move(vertices);
  return body;
}

ConvexBody2D ConvexBody2D::disc(double radius) {
  if (!(radius > 0.0)) throw std::invalid_argument("disc: radius must be positive");
  ConvexBody2D body;
  body.kind_ = Kind::disc;
  body.a_ = body.b_ = radius;
  return body;
}

ConvexBody2D ConvexBody2D::ellipse(double a, double b) {
  if (!(a > 0.0 && b > 0.0)) throw std::invalid_argument("ellipse: semi-axes must be positive");
  ConvexBody2D body;
  body.kind_ = Kind::ellipse;
  body.a_ = a;
  body.b_ = b;
  return body;
}

double ConvexBody2D::support(double phi) const {
  const double c = std::cos(phi), s = std::sin(phi);
  switch (kind_) {
    case Kind::polygon: {
      double h = -INFINITY;
      for (const auto& v : vertices_) h = std::max(h, v[0] * c + v[1] * s);
      return h;
    }
    case Kind::disc:
      return a_;
    case Kind::ellipse:
      return std::sqrt(a_ * a_ * c * c + b_ * b_ * s * s);
  }
  throw internal_error("support: unknown body kind");
}

double ConvexBody2D::area() const {
  if (kind_ != Kind::polygon) return pi * a_ * b_;
  double a2 = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    const auto& a = vertices_[i];
    const auto& b = vertices_[(i + 1) % vertices_.size()];
    a2 += a[0] * b[1] - a[1] * b[0];
  }
  return 0.5 * a2;
}

bool ConvexBody2D::centrally_symmetric(double tol) const {
  if (kind_ != Kind::polygon) return true;
  double scale = 0.0;
  for (const auto& v : vertices_) scale = std::max({scale, std::fabs(v[0]), std::fabs(v[1])});
  for (const auto& v : vertices_) {
    const bool found = std::any_of(vertices_.begin(), vertices_.end(), [&](const Point& w) {
      return std::fabs(v[0] + w[0]) <= tol * scale && std::fabs(v[1] + w[1]) <= tol * scale;
    });
    if (!found) return false;
  }
  return true;
}

std::string ConvexBody2D::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case Kind::polygon:
      os << "polygon(" << vertices_.size() << ")";
      break;
    case Kind::disc:
      os << "disc(" << a_ << ")";
      break;
    case Kind::ellipse:
      os << "ellipse(" << a_ << "," << b_ << ")";
      break;
  }
  return os.str();
}

cplx indicator_ft(const ConvexBody2D& body, const ConvexBody2D::Point& u) {
  const double norm = std::hypot(u[0], u[1]);
  if (!(norm <= 1e3)) throw std::invalid_argument("indicator_ft: need |u| <= 1e3");
  if (norm < 1e-6) return body.area();
  switch (body.kind()) {
    case ConvexBody2D::Kind::disc:
    case ConvexBody2D::Kind::ellipse: {
      const double a = body.support(0.0), b = body.support(pi / 2);
      return a * b * unit_disc_ft(std::hypot(a * u[0], b * u[1]));
    }
    case ConvexBody2D::Kind::polygon: {
      // Divergence theorem with F = u e^{i(u,x)} / (i|u|^2).
      const auto& v = body.vertices();
      cplx sum = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& a = v[i];
        const auto& b = v[(i + 1) % v.size()];
        const double ex = b[0] - a[0], ey = b[1] - a[1];
        const double flux = u[0] * ey - u[1] * ex;
        sum += std::exp(I * (u[0] * a[0] + u[1] * a[1])) * expm1_over(u[0] * ex + u[1] * ey) * flux;
      }
      return sum / (I * norm * norm);
    }
  }
  throw internal_error("indicator_ft: unknown body kind");
}

ZeroCurvePoint zero_curve(const ConvexBody2D& body, int p, double phi) {
  if (p < 1) throw std::invalid_argument("zero_curve: need p >= 1");
  if (!body.centrally_symmetric())
    throw std::invalid_argument("zero_curve: body must be centrally symmetric");
  ZeroCurvePoint out;
  out.phi = phi;
  out.width = body.width(phi);
  out.lower = 2.0 * p * pi / out.width;
  out.upper = 2.0 * (p + 1) * pi / out.width;
  const double c = std::cos(phi), s = std::sin(phi);
  auto g = [&](double t) { return indicator_ft(body, {t * c, t * s}).real(); };

  constexpr int samples = 256;
  const double step = (out.upper - out.lower) / samples;
  double prev_t = out.lower, prev = g(prev_t);
  double best_t = prev_t, best = std::fabs(prev);
  for (int i = 1; i <= samples; ++i) {
    const double t = out.lower + i * step;
    const double cur = g(t);
    if (std::fabs(cur) < best) {
      best = std::fabs(cur);
      best_t = t;
    }
    if ((prev < 0.0) != (cur < 0.0)) {
      boost::uintmax_t iters = 200;
      const auto root = boost::math::tools::toms748_solve(
          g, prev_t, t, prev, cur, boost::math::tools::eps_tolerance<double>(50), iters);
      out.r = 0.5 * (root.first + root.second);
      if (!(out.r > out.lower && out.r < out.upper))
        throw internal_error("zero_curve: zero outside the bracket");
      return out;
    }
    prev = cur;
    prev_t = t;
  }
  std::ostringstream os;
  os << "zero_curve: no sign change for " << body.describe() << ", p=" << p << ", phi=" << phi
     << " on [" << out.lower << ", " << out.upper << "]; g(lower)=" << g(out.lower)
     << ", g(upper)=" << g(out.upper) << ", min |g|=" << best << " at t=" << best_t;
  throw not_found(os.str());
}

double radial_ft(const RadialProfile& profile, int m, double r) {
  if (m < 1 || m > 3) throw std::invalid_argument("radial_ft: need m in {1,2,3}");
  if (!(r >= 0.0) || !std::isfinite(r)) throw std::invalid_argument("radial_ft: need finite r >= 0");

  auto kernel = [m, r](double t) {
    switch (m) {
      case 1:
        return 2.0 * std::cos(r * t);
      case 2:
        return 2.0 * pi * t * bessel_j(0.0, r * t);
      default: {
        const double z = r * t;
        return 4.0 * pi * t * t * (z == 0.0 ? 1.0 : std::sin(z) / z);
      }
    }
  };

  if (profile.is_polynomial()) {
    const auto& c = profile.coefficients();
    const int deg = profile.degree();
    if (r == 0.0) {
      double s = 0.0;
      for (int k = 0; k <= deg; ++k) s += c[k] / (k + m);
      return (m == 1 ? 2.0 : m == 2 ? 2.0 * pi : 4.0 * pi) * s;
    }
    if (m != 2 && r >= std::max(2.0, deg + 2.0)) {
      // Exact integration by parts of int_0^1 q(t) e^{irt} dt, q = f0 (m=1) or t f0 (m=3).
      std::vector<double> q0 = c, q1 = profile.coefficients_at_one();
      if (m == 3) {
        q0.insert(q0.begin(), 0.0);
        std::vector<double> shifted(q1.size() + 1, 0.0);
        for (std::size_t j = 0; j < q1.size(); ++j) {
          shifted[j] += q1[j];
          shifted[j + 1] += q1[j];
        }
        q1 = std::move(shifted);
      }
      const cplx e = std::exp(I * r);
      cplx sum = 0.0;
      cplx denom = I * r;
      double fact = 1.0;
      for (std::size_t k = 0; k < q0.size(); ++k) {
        if (k > 0) fact *= static_cast<double>(k);
        const cplx term = (fact * q1[k] * e - fact * q0[k]) / denom;
        sum += (k % 2 == 0 ? 1.0 : -1.0) * term;
        denom *= I * r;
      }
      return m == 1 ? 2.0 * sum.real() : 4.0 * pi / r * sum.imag();
    }
    // Composite Gauss-Legendre over half periods; exact for the polynomial factor.
    static const quad::Rule rule = quad::gauss_legendre(24);
    const int panels = 1 + static_cast<int>(std::ceil(r / pi));
    double s = 0.0;
    for (int i = 0; i < panels; ++i) {
      const double a = static_cast<double>(i) / panels, b = static_cast<double>(i + 1) / panels;
      const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
      for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
        const double t = mid + half * rule.nodes[j];
        s += half * rule.weights[j] * profile(t) * kernel(t);
      }
    }
    return s;
  }

  double L = profile.support();
  if (!std::isfinite(L)) {
    L = 1.0;
    while (L < 1e4 && std::fabs(profile(L)) * std::pow(std::max(1.0, L), m + 1) > 1e-18) L *= 2.0;
  }
  std::vector<double> cuts{0.0, L};
  for (double b : profile.breaks())
    if (b > 0.0 && b < L) cuts.push_back(b);
  const double width = r > 0.0 ? pi / r : L;
  for (double t = width; t < L; t += width) cuts.push_back(t);
  std::sort(cuts.begin(), cuts.end());
  double s = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] - cuts[i] <= 0.0) continue;
    s += quad::integrate([&](double t) { return profile(t) * kernel(t); }, cuts[i], cuts[i + 1],
                         1e-13 * (cuts[i + 1] - cuts[i]))
             .value;
  }
  return s;
}

}  // namespace xlab::ftd
