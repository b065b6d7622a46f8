#include "xlab/posdef.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/special_functions/binomial.hpp>
#include <cmath>
#include <gmpxx.h>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "xlab/errors.hpp"
#include "xlab/ft_discrete.hpp"
#include "xlab/quadrature.hpp"

namespace xlab::posdef {

namespace {

constexpr double eps = std::numeric_limits<double>::epsilon();

double falling(double a, int k) {
  double s = 1.0;
  for (int i = 0; i < k; ++i) s *= a - i;
  return s;
}

// k-th derivative by a central difference of order k; returns the value and a
// rounding-noise estimate.
std::pair<double, double> numeric_derivative(const RadialProfile& f, int k, double t) {
  if (k == 0) {
    const double v = f(t);
    return {v, eps * std::fabs(v)};
  }
  if (f.is_polynomial()) {
    const double v = f.derivative(k, t);
    return {v, 1e-14 * (1.0 + std::fabs(v))};
  }
  const double d = std::max(1e-3 * t, 1e-6);
  double s = 0.0, mag = 0.0;
  for (int i = 0; i <= k; ++i) {
    const double u = std::max(0.0, t + (0.5 * k - i) * d);
    const double v = f(u) * boost::math::binomial_coefficient<double>(k, i);
    s += (i % 2 == 0 ? 1.0 : -1.0) * v;
    mag += std::fabs(v);
  }
  const double scale = std::pow(d, k);
  return {s / scale, 4.0 * eps * mag / scale};
}

struct ShardResult {
  double min_eig = std::numeric_limits<double>::infinity();
  double scale = 1.0;
  std::vector<Point> witness;
};

}  // namespace

GramSpec GramSpec::radial(std::vector<Point> points, std::function<double(double)> f0) {
  GramSpec spec;
  spec.points = std::move(points);
  spec.f = [f0 = std::move(f0)](std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return cplx(f0(std::sqrt(s)), 0.0);
  };
  return spec;
}

double gram_min_eig(const GramSpec& spec) {
  const auto& pts = spec.points;
  const std::size_t n = pts.size();
  if (n == 0) throw std::invalid_argument("gram_min_eig: no points");
  if (n > 64) throw std::invalid_argument("gram_min_eig: at most 64 points");
  if (!spec.f) throw std::invalid_argument("gram_min_eig: empty evaluator");
  const std::size_t m = pts[0].size();
  if (m == 0 || m > 4) throw std::invalid_argument("gram_min_eig: dimension must be 1..4");
  for (const auto& p : pts)
    if (p.size() != m) throw std::invalid_argument("gram_min_eig: mixed dimensions");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pts[i] == pts[j]) throw std::invalid_argument("gram_min_eig: points must be distinct");

  Eigen::MatrixXcd g(n, n);
  std::vector<double> diff(m);
  double big = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < m; ++k) diff[k] = pts[i][k] - pts[j][k];
      g(i, j) = spec.f(diff);
      big = std::max(big, std::abs(g(i, j)));
    }
  }
  const double tol = 1e-10 * std::max(1.0, big);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(g(i, j) - std::conj(g(j, i))) > tol)
        throw std::invalid_argument("gram_min_eig: matrix is not Hermitian");
  const Eigen::MatrixXcd h = 0.5 * (g + g.adjoint());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw internal_error("gram_min_eig: eigensolver failed");
  return solver.eigenvalues()(0);
}

Check71 check_7_1(const Evaluator& f, std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.empty()) throw std::invalid_argument("check_7_1: dimension mismatch");
  std::vector<double> plus(x.size()), minus(x.size()), zero(x.size(), 0.0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    plus[k] = x[k] + y[k];
    minus[k] = x[k] - y[k];
  }
  Check71 out;
  out.lhs = std::abs(f(plus) - 2.0 * f(x) + f(minus));
  out.rhs = 2.0 * (f(zero) - f(y)).real();
  out.ok = out.lhs <= out.rhs + 1e-12;
  return out;
}

Check71 check_7_1(const std::function<double(double)>& f, double x, double y) {
  const Evaluator g = [&f](std::span<const double> v) { return cplx(f(v[0]), 0.0); };
  const double xs[1] = {x}, ys[1] = {y};
  return check_7_1(g, xs, ys);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified:
      return "certified";
    case Verdict::not_certified:
      return "not_certified";
    case Verdict::indeterminate:
      return "indeterminate";
  }
  return "unknown";
}

PolyaResult polya_test(const RadialProfile& f0, int m) {
  if (m < 1) throw std::invalid_argument("polya_test: need m >= 1");
  PolyaResult out;
  const int n = (m + 2) / 2;
  out.order = n;
  const double t0 = 1e-4;
  const double t1 = std::isfinite(f0.support()) ? 2.0 * f0.support() : 1e3;
  constexpr int points = 4000;
  std::vector<double> t(points);
  for (int i = 0; i < points; ++i) t[i] = t0 * std::pow(t1 / t0, static_cast<double>(i) / (points - 1));

  // continuity (polynomial knot, declared breaks, end of support)
  double fmax = std::fabs(f0(0.0));
  for (double u : t) fmax = std::max(fmax, std::fabs(f0(u)));
  if (!std::isfinite(fmax)) {
    out.verdict = Verdict::not_certified;
    out.reason = "profile is not finite on the grid";
    return out;
  }
  std::vector<double> joints = f0.breaks();
  if (std::isfinite(f0.support())) joints.push_back(f0.support());
  for (double b : joints) {
    if (b <= 0.0) continue;
    const double left = f0(b * (1 - 1e-12));
    const double right = f0(b * (1 + 1e-12));
    if (std::fabs(left - right) > 1e-8 * std::max(1.0, fmax)) {
      out.verdict = Verdict::not_certified;
      std::ostringstream os;
      os << "jump at t=" << b;
      out.reason = os.str();
      return out;
    }
  }

  // limit at infinity exists and is >= 0 (automatic for compact support)
  if (!std::isfinite(f0.support())) {
    double lo = INFINITY, hi = -INFINITY;
    for (int i = points * 9 / 10; i < points; ++i) {
      const double v = f0(t[i]);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > 1e-6 * std::max(1.0, fmax) || hi < -1e-12 * std::max(1.0, fmax)) {
      out.verdict = Verdict::not_certified;
      out.reason = "no nonnegative limit at infinity";
      return out;
    }
  }

  // convexity of (-1)^{n-1} f^{(n-1)}
  const double sign = (n - 1) % 2 == 0 ? 1.0 : -1.0;
  std::vector<double> g(points), noise(points);
  for (int i = 0; i < points; ++i) {
    const auto [v, e] = numeric_derivative(f0, n - 1, t[i]);
    g[i] = sign * v;
    noise[i] = e;
  }
  std::vector<double> slope(points - 1);
  double slope_scale = 0.0;
  for (int i = 0; i + 1 < points; ++i) {
    slope[i] = (g[i + 1] - g[i]) / (t[i + 1] - t[i]);
    slope_scale = std::max(slope_scale, std::fabs(slope[i]));
  }
  bool unresolved = false;
  for (int i = 1; i + 1 < points; ++i) {
    const double drop = slope[i - 1] - slope[i];
    const double tol = 1e-9 * std::max(1.0, slope_scale);
    const double rounding = 4.0 * (noise[i - 1] + noise[i] + noise[i + 1]) / (t[i + 1] - t[i - 1]) * 2.0;
    if (drop > tol + 10.0 * rounding) {
      out.verdict = Verdict::not_certified;
      std::ostringstream os;
      os << "(-1)^" << n - 1 << " f^(" << n - 1 << ") is not convex near t=" << t[i];
      out.reason = os.str();
      return out;
    }
    if (drop > tol + rounding) unresolved = true;
  }

  // t^n f^{(n)}(t) -> 0 at both ends
  const double a0 = std::pow(t0, n) * std::fabs(numeric_derivative(f0, n, t0).first);
  const double a1 = std::pow(t1, n) * std::fabs(numeric_derivative(f0, n, t1).first);
  if (a0 > 1e-3 * std::max(1.0, fmax) || a1 > 1e-3 * std::max(1.0, fmax)) {
    out.verdict = Verdict::indeterminate;
    out.reason = "boundary limits of t^n f^(n) not resolved on the grid";
    return out;
  }
  if (unresolved) {
    out.verdict = Verdict::indeterminate;
    out.reason = "convexity violation below the finite-difference noise level";
    return out;
  }
  out.verdict = Verdict::certified;
  out.reason = "all hypotheses hold on the grid";
  return out;
}

double b_spline(int n, double x) {
  if (n < 0 || n > 12) throw std::invalid_argument("b_spline: need 0 <= n <= 12");
  // cardinal spline with knots 0..n+1 at u = x + (n+1)/2
  const double u = x + 0.5 * (n + 1);
  if (!(u >= 0.0 && u < n + 1.0)) return 0.0;
  const int cell = static_cast<int>(std::floor(u));
  std::vector<double> N(n + 2, 0.0);
  N[cell] = 1.0;
  for (int d = 1; d <= n; ++d) {
    for (int j = 0; j + d <= n; ++j) {
      N[j] = ((u - j) * N[j] + (j + d + 1 - u) * N[j + 1]) / d;
    }
  }
  return N[0];
}

RadialProfile b_spline_profile(int n) {
  if (n < 0 || n > 12) throw std::invalid_argument("b_spline_profile: need 0 <= n <= 12");
  const double half = 0.5 * (n + 1);
  std::vector<double> breaks;
  for (int k = 0; k <= n + 1; ++k) {
    const double x = std::fabs(k - half) / half;
    if (x > 0.0 && x < 1.0) breaks.push_back(x);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  return RadialProfile::closed_form(
      "B" + std::to_string(n), [n, half](double t) { return b_spline(n, t * half); }, 1.0, n - 1,
      std::move(breaks));
}

RadialProfile a_spline(int n) {
  if (n < 2 || n > 6) throw std::invalid_argument("a_spline: need 2 <= n <= 6");
  const int size = 3 * n - 1;  // coefficients a_0..a_{3n-2}
  std::vector<std::vector<mpq_class>> A(size, std::vector<mpq_class>(size + 1, 0));
  auto ff = [](int k, int j) {
    mpz_class s = 1;
    for (int i = 0; i < j; ++i) s *= (k - i);
    return s;
  };
  int row = 0;
  A[row][0] = 1;
  A[row][size] = 1;  // p(0) = 1
  ++row;
  for (int k = 1; k <= 2 * n - 3; k += 2, ++row) A[row][k] = 1;  // odd derivatives at 0
  for (int j = 0; j <= 2 * n - 2; ++j, ++row)                      // p^(j)(1) = 0
    for (int k = j; k < size; ++k) A[row][k] = ff(k, j);
  if (row != size) throw internal_error("a_spline: constraint count mismatch");

  for (int c = 0; c < size; ++c) {
    int piv = c;
    while (piv < size && A[piv][c] == 0) ++piv;
    if (piv == size) throw internal_error("a_spline: singular constraint system");
    std::swap(A[c], A[piv]);
    for (int r = 0; r < size; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const mpq_class factor = A[r][c] / A[c][c];
      for (int k = c; k <= size; ++k) A[r][k] -= factor * A[c][k];
    }
  }
  std::vector<mpq_class> a(size);
  for (int k = 0; k < size; ++k) a[k] = A[k][size] / A[k][k];

  std::vector<double> c0(size), c1(size);
  for (int j = 0; j < size; ++j) {
    mpq_class b = 0;
    for (int k = j; k < size; ++k) {
      mpz_class binom;
      mpz_bin_uiui(binom.get_mpz_t(), k, j);
      b += binom * a[k];
    }
    c0[j] = a[j].get_d();
    c1[j] = b.get_d();
  }

  // residual of the rounded coefficients
  double residual = std::fabs(c0[0] - 1.0);
  for (int k = 1; k <= 2 * n - 3; k += 2) residual = std::max(residual, std::fabs(c0[k]));
  for (int j = 0; j <= 2 * n - 2; ++j) {
    double s = 0.0, mag = 0.0;
    for (int k = j; k < size; ++k) {
      s += falling(k, j) * c0[k];
      mag += std::fabs(falling(k, j) * c0[k]);
    }
    residual = std::max(residual, std::fabs(s) / std::max(1.0, mag));
  }
  if (residual > 1e-10) throw internal_error("a_spline: residual above 1e-10");
  return RadialProfile::polynomial("A" + std::to_string(3 * n - 2), std::move(c0), std::move(c1),
                                   2 * n - 2);
}

RadialProfile e_spline_profile(int n) {
  if (n < 1) throw std::invalid_argument("e_spline: need n >= 1");
  std::vector<double> c(n + 1);
  for (int j = 0; j <= n; ++j)
    c[j] = boost::math::binomial_coefficient<double>(n, j) * (j % 2 == 0 ? 1.0 : -1.0) *
           falling(n - 1.5 + 0.5 * j, n - 1);
  return RadialProfile::polynomial("e" + std::to_string(n), std::move(c), n - 2);
}

double e_spline(int n, double s) {
  if (!(s >= 0.0)) throw std::invalid_argument("e_spline: need s >= 0");
  if (s >= 1.0) {
    if (n < 1) throw std::invalid_argument("e_spline: need n >= 1");
    return 0.0;
  }
  return e_spline_profile(n)(s);
}

double tilde_e_spline(int n, double x) {
  if (n < 0 || n > 10) throw std::invalid_argument("tilde_e_spline: need 0 <= n <= 10");
  if (std::fabs(x) >= 1.0) return 0.0;
  static const quad::Rule rule = quad::gauss_legendre(16);  // exact for degree 2n <= 20
  const double a = std::max(-0.5, x - 0.5), b = std::min(0.5, x + 0.5);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double y = mid + half * rule.nodes[i];
    const double z = std::clamp(2.0 * (x - y), -1.0, 1.0);
    s += rule.weights[i] * std::legendre(n, std::clamp(2.0 * y, -1.0, 1.0)) * std::legendre(n, z);
  }
  return (n % 2 == 0 ? 1.0 : -1.0) * half * s;
}

Positivity radial_ft_positivity(const RadialProfile& profile, int m, double rmax, double step) {
  if (profile.support() > 1.0) throw std::invalid_argument("radial_ft_positivity: support must lie in [0,1]");
  if (!(step > 0.0) || !(rmax >= 0.0)) throw std::invalid_argument("radial_ft_positivity: need step > 0, rmax >= 0");
  Positivity out;
  out.min_value = INFINITY;
  const auto count = static_cast<std::size_t>(std::floor(rmax / step + 1e-9));
  for (std::size_t i = 0; i <= count; ++i) {
    const double r = static_cast<double>(i) * step;
    const double v = ftd::radial_ft(profile, m, r);
    ++out.evaluations;
    if (v < out.min_value) {
      out.min_value = v;
      out.argmin = r;
    }
  }
  return out;
}

ShiftApprox shift_approx(const std::function<double(double)>& f, int n, double h, int N) {
  if (!(h > 0.0)) throw std::invalid_argument("shift_approx: need h > 0");
  if (N < 0) throw std::invalid_argument("shift_approx: need N >= 0");
  const RadialProfile A = a_spline(n);
  const double lo = -N * h - 1.0, hi = N * h + 1.0;
  const auto G = static_cast<Eigen::Index>(
      std::max(4001.0, std::ceil((hi - lo) / (h / 16.0)) + 1.0));
  const Eigen::Index cols = 2 * N + 1;
  Eigen::MatrixXd phi(G, cols);
  Eigen::VectorXd y(G);
  for (Eigen::Index i = 0; i < G; ++i) {
    const double x = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(G - 1);
    y(i) = f(x);
    for (Eigen::Index k = 0; k < cols; ++k) phi(i, k) = A(std::fabs(x + static_cast<double>(k - N) * h));
  }
  ShiftApprox out;
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(phi);
  Eigen::VectorXd c;
  if (qr.rank() < cols) {
    out.rank_deficient = true;
    c = Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd>(phi).solve(y);
  } else {
    c = qr.solve(y);
  }
  out.coeffs.assign(c.data(), c.data() + c.size());
  out.sup_error = (phi * c - y).cwiseAbs().maxCoeff();
  return out;
}

double p_norm(std::span<const double> x, double p) {
  if (std::isinf(p)) {
    double s = 0.0;
    for (double v : x) s = std::max(s, std::fabs(v));
    return s;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("p_norm: need p >= 1");
  double s = 0.0;
  for (double v : x) s += std::pow(std::fabs(v), p);
  return std::pow(s, 1.0 / p);
}

SchoenbergResult schoenberg_check(int m, double p, double alpha, int trials, std::uint64_t seed,
                                  unsigned threads) {
  if (m != 2 && m != 3) throw std::invalid_argument("schoenberg_check: need m in {2,3}");
  if (!(p > 2.0)) throw std::invalid_argument("schoenberg_check: need p > 2 or p = inf");
  if (!(alpha >= 0.0)) throw std::invalid_argument("schoenberg_check: need alpha >= 0");
  if (trials < 0) throw std::invalid_argument("schoenberg_check: need trials >= 0");

  // alpha = 0 is the constant function 1 (0^0 = 1 at the origin too).
  const Evaluator f = [p, alpha](std::span<const double> x) {
    if (alpha == 0.0) return cplx(1.0, 0.0);
    return cplx(std::exp(-std::pow(p_norm(x, p), alpha)), 0.0);
  };

  std::vector<Point> lattice;
  const int side = 3;
  const int total = m == 2 ? side * side : side * side * side;
  for (int i = 0; i < total; ++i) {
    Point q(m);
    int v = i;
    for (int k = 0; k < m; ++k) {
      q[k] = v % side - 1.0;
      v /= side;
    }
    lattice.push_back(q);
  }

  constexpr int shards = 16;
  std::vector<ShardResult> results(shards);
  auto run_shard = [&](int s) {
    std::seed_seq sseq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                       static_cast<std::uint32_t>(s)};
    std::mt19937_64 rng(sseq);
    std::uniform_real_distribution<double> coord(-3.0, 3.0), unit(0.0, 1.0);
    std::uniform_int_distribution<int> count(3, 12);
    const int mine = trials / shards + (s < trials % shards ? 1 : 0);
    auto& best = results[s];
    for (int t = 0; t < mine; ++t) {
      GramSpec spec;
      spec.f = f;
      const int k = count(rng);
      if (t % 2 == 0) {
        for (int i = 0; i < k; ++i) {
          Point q(m);
          for (auto& v : q) v = coord(rng);
          spec.points.push_back(q);
        }
      } else {
        const double scale = std::exp(std::log(0.05) + unit(rng) * (std::log(3.0) - std::log(0.05)));
        std::vector<Point> pool = lattice;
        std::shuffle(pool.begin(), pool.end(), rng);
        const int take = std::min<int>(k, static_cast<int>(pool.size()));
        for (int i = 0; i < take; ++i) {
          Point q = pool[i];
          for (auto& v : q) v *= scale;
          spec.points.push_back(q);
        }
      }
      const double e = gram_min_eig(spec);
      if (e < best.min_eig) {
        best.min_eig = e;
        best.scale = static_cast<double>(spec.points.size());
        best.witness = spec.points;
      }
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(threads, shards));
  if (workers == 1) {
    for (int s = 0; s < shards; ++s) run_shard(s);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&, w] {
        for (int s = static_cast<int>(w); s < shards; s += static_cast<int>(workers)) run_shard(s);
      });
    for (auto& th : pool) th.join();
  }

  SchoenbergResult out;
  out.trials = trials;
  out.seed = seed;
  out.min_eig_found = INFINITY;
  for (const auto& r : results) {
    if (r.min_eig < out.min_eig_found) {
      out.min_eig_found = r.min_eig;
      out.scale = r.scale;
      out.witness = r.witness;
    }
  }
  if (trials == 0) out.min_eig_found = 0.0;
  return out;
}

}  // namespace xlab::posdef
