#include "xlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <stdexcept>

#include <boost/math/tools/roots.hpp>

#include "xlab/errors.hpp"

namespace xlab::quad {

namespace {

// Kronrod abscissae for the 15-point rule; odd indices are the Gauss 7-point nodes.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a, b, value, error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

Panel gk15(const RealFn& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  const double fc = f(c);
  double kron = kWgk[7] * fc;
  double gauss = kWg[3] * fc;
  for (int j = 0; j < 7; ++j) {
    const double dx = h * kXgk[j];
    const double s = f(c - dx) + f(c + dx);
    kron += kWgk[j] * s;
    if (j % 2 == 1) gauss += kWg[j / 2] * s;
  }
  kron *= h;
  gauss *= h;
  return {a, b, kron, std::abs(kron - gauss)};
}

Estimate adaptive(const RealFn& f, double a, double b, double tol, std::size_t max_panels,
                  bool throw_on_failure) {
  std::priority_queue<Panel> queue;
  Panel first = gk15(f, a, b);
  double total = first.value;
  double err = first.error;
  queue.push(first);
  std::size_t panels = 1;
  while (err > tol && panels < max_panels) {
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      queue.push(worst);
      break;
    }
    Panel left = gk15(f, worst.a, mid);
    Panel right = gk15(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    err += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++panels;
  }
  // Recompute from the leaves; the running sums drift after many updates.
  total = 0.0;
  err = 0.0;
  while (!queue.empty()) {
    total += queue.top().value;
    err += queue.top().error;
    queue.pop();
  }
  if (err > tol && throw_on_failure) {
    throw convergence_failure("adaptive quadrature did not reach tolerance", total, err);
  }
  return {total, err};
}

}  // namespace

Estimate integrate(const RealFn& f, double a, double b, double tol, unsigned max_depth) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate: tolerance must be positive");
  if (a == b) return {};
  const std::size_t budget = std::size_t{1} << std::min(max_depth, 24u);
  return adaptive(f, a, b, tol, budget, true);
}

Estimate integrate_abs(const RealFn& f, double a, double b, double panel_width, double tol,
                       unsigned samples_per_panel, std::size_t max_pieces) {
  if (!(tol > 0.0)) throw std::invalid_argument("integrate_abs: tolerance must be positive");
  if (!(panel_width > 0.0)) throw std::invalid_argument("integrate_abs: panel width must be positive");
  if (a == b) return {};
  samples_per_panel = std::max(samples_per_panel, 2u);

  const auto panels = static_cast<std::size_t>(std::ceil((b - a) / panel_width));
  const double width = (b - a) / static_cast<double>(panels);
  const RealFn absf = [&f](double x) { return std::abs(f(x)); };
  boost::math::tools::eps_tolerance<double> root_tol(48);

  // Break points: panel edges plus every located sign change.
  std::vector<double> cuts;
  cuts.reserve(panels * 2 + 1);
  cuts.push_back(a);
  const double step = width / samples_per_panel;
  double x_prev = a;
  double f_prev = f(a);
  const std::size_t total_samples = panels * samples_per_panel;
  for (std::size_t s = 1; s <= total_samples; ++s) {
    const double x = (s == total_samples) ? b : a + static_cast<double>(s) * step;
    const double fx = f(x);
    if ((f_prev < 0.0 && fx > 0.0) || (f_prev > 0.0 && fx < 0.0)) {
      std::uintmax_t iters = 100;
      auto bracket = boost::math::tools::toms748_solve(f, x_prev, x, f_prev, fx, root_tol, iters);
      cuts.push_back(0.5 * (bracket.first + bracket.second));
    }
    if (s % samples_per_panel == 0) cuts.push_back(x);
    x_prev = x;
    f_prev = fx;
  }
  cuts.back() = b;

  Estimate out;
  const std::size_t per_piece = std::max<std::size_t>(64, max_pieces / cuts.size());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    if (!(hi > lo)) continue;
    const double share = tol * (hi - lo) / (b - a);
    const Estimate piece = adaptive(absf, lo, hi, share, per_piece, false);
    out.value += piece.value;
    out.error += piece.error;
  }
  if (out.error > tol) {
    throw convergence_failure("integrate_abs: tolerance not reached within piece budget", out.value,
                              out.error);
  }
  return out;
}

Rule gauss_legendre(unsigned n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: need at least one node");
  Rule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const unsigned half = (n + 1) / 2;
  for (unsigned i = 0; i < half; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0;
      double p1 = x;
      for (unsigned k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

}  // namespace xlab::quad
