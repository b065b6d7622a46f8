#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace xlab::trig {

using cplx = std::complex<double>;

// Samples of a 2*pi-periodic function on x_j = -pi + 2*pi*j/M, M a power of two >= 4.
class SampledFunction {
 public:
  explicit SampledFunction(std::vector<cplx> values);

  static SampledFunction sample(const std::function<cplx(double)>& f, std::size_t M);
  static SampledFunction sample_real(const std::function<double(double)>& f, std::size_t M);

  std::size_t size() const noexcept { return values_.size(); }
  double node(std::size_t j) const noexcept;
  double step() const noexcept;
  std::span<const cplx> values() const noexcept { return values_; }
  const cplx& operator[](std::size_t j) const noexcept { return values_[j]; }

  // Value at node j + shift (indices taken modulo M).
  const cplx& shifted(std::size_t j, std::ptrdiff_t shift) const noexcept;

  SampledFunction operator-(const SampledFunction& other) const;
  SampledFunction scaled(double factor) const;

 private:
  std::vector<cplx> values_;
};

// Finitely supported coefficients c_k, k in [-N, N].
class TrigCoefficients {
 public:
  explicit TrigCoefficients(int degree);
  TrigCoefficients(int degree, std::vector<cplx> coeffs);

  int degree() const noexcept { return degree_; }
  // Zero outside [-N, N].
  cplx operator[](int k) const noexcept;
  cplx& at(int k);
  std::span<const cplx> data() const noexcept { return coeffs_; }
  bool is_real_valued(double tol = 1e-12) const noexcept;

 private:
  int degree_;
  std::vector<cplx> coeffs_;
};

// p in (0, inf]; p = inf selects the grid maximum.
struct GridNorm {
  double p;

  static GridNorm sup();
  static GridNorm lp(double p);
  bool is_sup() const noexcept;
};

enum class MethodKind { matrix, generator };

// Multiplier rule lambda_{n,k}. Matrix methods give lambda directly; generator
// methods evaluate a profile phi at k/n with phi = 0 beyond its support radius.
class SummabilityMethod {
 public:
  using MatrixFn = std::function<cplx(int n, int k)>;
  using DegreeFn = std::function<int(int n)>;
  using Profile = std::function<double(double)>;

  static SummabilityMethod matrix(std::string name, MatrixFn lambda, DegreeFn degree,
                                  bool regular = true);
  static SummabilityMethod generator(std::string name, Profile phi, double support_radius);

  const std::string& name() const noexcept { return name_; }
  MethodKind kind() const noexcept { return kind_; }
  bool regular() const noexcept { return regular_; }
  double support_radius() const noexcept { return radius_; }

  // Largest |k| with a nonzero multiplier at index n.
  int degree(int n) const;
  cplx multiplier(int n, int k) const;
  std::vector<cplx> multipliers(int n) const;  // indices -degree..degree

 private:
  SummabilityMethod() = default;

  std::string name_;
  MethodKind kind_ = MethodKind::matrix;
  bool regular_ = true;
  MatrixFn lambda_;
  DegreeFn degree_;
  Profile phi_;
  double radius_ = 0.0;
};

// c_k = (1/M) sum_j f(x_j) e^{-i k x_j}, |k| <= N. Requires 2N+1 <= M.
TrigCoefficients compute_coefficients(const SampledFunction& f, int N);

// Inverse of compute_coefficients on an M-point grid. Requires 2N+1 <= M.
SampledFunction synthesize(const TrigCoefficients& c, std::size_t M);

// K_n(t) = sum_{|k|<=n} lambda_{n,k} e^{ikt} on the grid. Requires M >= 2(degree+1).
SampledFunction kernel(const SummabilityMethod& method, int n, std::size_t M);

// Pointwise kernel value, O(degree) per call.
cplx kernel_value(std::span<const cplx> multipliers, double t);

TrigCoefficients apply_means(const SummabilityMethod& method, int n, const TrigCoefficients& c);

// The means of the grid function itself: every grid frequency |k| <= M/2 is
// multiplied by lambda_{n,k}.
SampledFunction apply_means(const SummabilityMethod& method, int n, const SampledFunction& f);

// Same, reusing a precomputed grid spectrum (see grid_spectrum).
SampledFunction apply_means_spectrum(const SummabilityMethod& method, int n,
                                     std::span<const cplx> spectrum);

// Raw DFT of the samples in FFT index order, scaled by 1/M.
std::vector<cplx> grid_spectrum(const SampledFunction& f);

double grid_norm(const SampledFunction& f, GridNorm norm);

// r-th derivative of the grid interpolant, computed spectrally.
SampledFunction spectral_derivative(const SampledFunction& f, int r);

// Evaluates the trigonometric interpolant of the samples at an arbitrary x.
cplx interpolate(std::span<const cplx> spectrum, double x);

std::vector<SummabilityMethod> method_catalog();

// Lookup by label: dirichlet, fejer, cesaro(a), abel-poisson, abel-poisson(r),
// riesz(a,d), bochner-riesz(d), rogosinski, bernstein, vallee-poussin.
// Throws xlab::not_found for anything else.
SummabilityMethod method_by_name(std::string_view name);

struct ComparisonBand {
  double max_ratio = 1.0;
  double min_ratio = 1.0;
};

// Ratios ||f - A_n f||_inf / ||f - B_n f||_inf over fset and 1 <= n <= nmax.
// 0/0 counts as 1; x/0 with x > 0 is +inf.
ComparisonBand comparison_band(const SummabilityMethod& a, const SummabilityMethod& b,
                               std::span<const SampledFunction> fset, int nmax);
double comparison_ratio(const SummabilityMethod& a, const SummabilityMethod& b,
                        std::span<const SampledFunction> fset, int nmax);

}  // namespace xlab::trig
