#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "xlab/radial_profile.hpp"

namespace xlab::posdef {

using cplx = std::complex<double>;
using Point = std::vector<double>;
using Evaluator = std::function<cplx(std::span<const double>)>;

// Points in R^m (m <= 4) and f evaluated at differences x_i - x_j.
struct GramSpec {
  std::vector<Point> points;
  Evaluator f;

  // f(x) = f0(|x|) with the Euclidean norm.
  static GramSpec radial(std::vector<Point> points, std::function<double(double)> f0);
};

// Smallest eigenvalue of [f(x_i - x_j)]. Throws std::invalid_argument for more
// than 64 points, repeated points, or asymmetry above 1e-10.
double gram_min_eig(const GramSpec& spec);

struct Check71 {
  double lhs = 0.0;
  double rhs = 0.0;
  bool ok = true;
};

// |f(x+y) - 2f(x) + f(x-y)| <= 2 Re(f(0) - f(y)), up to 1e-12.
Check71 check_7_1(const Evaluator& f, std::span<const double> x, std::span<const double> y);
Check71 check_7_1(const std::function<double(double)>& f, double x, double y);

enum class Verdict { certified, not_certified, indeterminate };
std::string to_string(Verdict v);

struct PolyaResult {
  Verdict verdict = Verdict::indeterminate;
  int order = 0;  // n = floor((m + 2) / 2)
  std::string reason;
};

// Grid check of the sufficient condition for f0(|x|) to be positive definite on R^m.
PolyaResult polya_test(const RadialProfile& f0, int m);

// Schoenberg B-spline of degree n <= 12, B_0 the indicator of [-1/2, 1/2).
double b_spline(int n, double x);
// B_n(t (n+1)/2), i.e. B_n rescaled to support [-1, 1], as a radial profile.
RadialProfile b_spline_profile(int n);

// Unique even spline p(|x|) of degree 3n-2 in C^{2n-2} with p(0) = 1, 2 <= n <= 6.
RadialProfile a_spline(int n);

// e_n(s) on [0, 1), zero for s >= 1.
double e_spline(int n, double s);
RadialProfile e_spline_profile(int n);

// (-1)^n (P_n * P_n)(x) with P_n the Legendre polynomial of [-1/2, 1/2], n <= 10.
double tilde_e_spline(int n, double x);

struct Positivity {
  double min_value = 0.0;
  double argmin = 0.0;
  std::size_t evaluations = 0;
};

// Minimum of the m-dimensional radial transform on {0, step, 2 step, ...} <= rmax.
Positivity radial_ft_positivity(const RadialProfile& profile, int m, double rmax, double step);

struct ShiftApprox {
  std::vector<double> coeffs;  // c_{-N}, ..., c_N
  double sup_error = 0.0;
  bool rank_deficient = false;  // minimum-norm solve was used
};

// Least-squares fit of sum_{|k|<=N} c_k A(x + k h) to f on a dense grid of
// [-N h - 1, N h + 1], A = a_spline(n).
ShiftApprox shift_approx(const std::function<double(double)>& f, int n, double h, int N);

struct SchoenbergResult {
  double min_eig_found = 0.0;
  double scale = 1.0;  // largest Gram diagonal sum seen
  std::vector<Point> witness;
  int trials = 0;
  std::uint64_t seed = 0;
};

// ||x||_p with p = inf allowed.
double p_norm(std::span<const double> x, double p);

// Randomised search for point sets where exp(-||x||_p^alpha) has a negative
// Gram eigenvalue. Trials are split into fixed shards, so the result does not
// depend on the thread count.
SchoenbergResult schoenberg_check(int m, double p, double alpha, int trials, std::uint64_t seed,
                                  unsigned threads = 1);

}  // namespace xlab::posdef
