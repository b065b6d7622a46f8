#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "xlab/trig.hpp"

namespace xlab::lebesgue {

struct LebesgueSample {
  int n = 0;
  int n2 = 0;  // second index for 2-D kernels, 0 otherwise
  double value = 0.0;
  double quad_error = 0.0;
};

enum class Model { log_linear, power, log_over_power };

// log_linear:     v = c ln n + d            params {c, d}
// power:          v = c n^s                 params {c, s}
// log_over_power: v = (c ln n + d) n^{-r}   params {c, d, r}, r fixed
struct AsymptoticFit {
  Model model = Model::log_linear;
  std::vector<double> params;
  double residual = 0.0;  // max |v - model| over the data
  std::vector<double> ns;
  std::vector<double> values;
};

AsymptoticFit fit_log_linear(std::span<const double> ns, std::span<const double> values);
// Least squares on log v = log c + s log n.
AsymptoticFit fit_power(std::span<const double> ns, std::span<const double> values);
// Least squares on v n^r = c ln n + d.
AsymptoticFit fit_log_over_power(std::span<const double> ns, std::span<const double> values,
                                 double r);

// n0, 2 n0, 4 n0, ... up to n1 inclusive.
std::vector<int> geometric_grid(int n0, int n1);

// (1/2pi) int |K_n| with certified error <= tol. Panels have width pi/(degree+1)
// and are cut at sign changes of real kernels.
LebesgueSample lebesgue_constant(const trig::SummabilityMethod& method, int n, double tol);

// Least-squares fit of the Dirichlet constants on the geometric grid nmin..nmax.
// Requires nmax >= 4 nmin >= 64.
AsymptoticFit classical_lebesgue_fit(int nmin, int nmax, double tol = 1e-9);

// (1/pi) int_0^{2pi} |sum_{k>n} cos(kt - r pi/2) / k^r| dt. The full series is
// summed in closed form through Bernoulli polynomials.
double kolmogorov_deviation(int r, int n, double tol);

// Pointwise value of the tail kernel above; for tests and plots.
double kolmogorov_tail(int r, int n, double t);

// (1/4pi^2) int |sum_{|k1|/n1 + |k2|/n2 <= 1} e^{i(k,x)}| dx. Requires n2 a
// multiple of n1 and n1 <= 64.
LebesgueSample rhombic_lebesgue(int n1, int n2, double tol);

// L1 mean of the hyperbolic-cross kernel sum over max(1,|k1|)^alpha max(1,|k2|) <= n,
// computed on a tensor grid at least three times finer than the degree in each
// direction. Requires alpha >= 1 and a support of at most 1e6 lattice points.
LebesgueSample hyperbolic_norm(double alpha, int n);
AsymptoticFit hyperbolic_exponent(double alpha, std::span<const int> nset);

// c_k = (1/(2n+1)) sum_p f(x_p) e^{-ik x_p}, x_p = 2 p pi/(2n+1), |k| <= n.
trig::TrigCoefficients fourier_lagrange_coeffs(const std::function<trig::cplx(double)>& f, int n);
// Samples at x_p are taken from the trigonometric interpolant of the grid values.
trig::TrigCoefficients fourier_lagrange_coeffs(const trig::SampledFunction& f, int n);

// (1/(2n+1)) sum_p |sum_k lambda_{n,k} e^{ik(x - x_p)}|
double lebesgue_function(const trig::SummabilityMethod& method, int n, double x);

}  // namespace xlab::lebesgue
