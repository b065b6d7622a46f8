#pragma once

#include <functional>
#include <span>
#include <vector>

namespace xlab::quad {

struct Estimate {
  double value = 0.0;
  double error = 0.0;
};

using RealFn = std::function<double(double)>;

// Adaptive Gauss-Kronrod (7/15) on [a, b]. Throws convergence_failure when the
// error estimate stays above tol after max_depth bisections.
Estimate integrate(const RealFn& f, double a, double b, double tol, unsigned max_depth = 20);

// Integral of |f| over [a, b]. The interval is cut into panels no wider than
// panel_width; inside each panel sign changes are located on a sampling grid
// and refined with a bracketing root finder, so that f has one sign on every
// piece handed to the Gauss-Kronrod rule. The returned error is the sum of
// the per-piece estimates plus the root-location slack.
Estimate integrate_abs(const RealFn& f, double a, double b, double panel_width, double tol,
                       unsigned samples_per_panel = 8, std::size_t max_pieces = 1u << 22);

// Gauss-Legendre nodes and weights on [-1, 1].
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
Rule gauss_legendre(unsigned n);

}  // namespace xlab::quad
