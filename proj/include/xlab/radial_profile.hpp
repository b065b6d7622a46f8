#pragma once

#include <functional>
#include <string>
#include <vector>

namespace xlab {

// Scalar profile f0 on [0, inf), used as f(x) = f0(|x|). Either a polynomial on
// [0, 1] with zero extension, or a closed-form evaluator with a support radius
// (possibly infinite) and optional break points where it is not smooth.
class RadialProfile {
 public:
  // p(t) = sum coeffs[k] t^k on [0, 1]; Taylor coefficients at t = 1 are derived.
  static RadialProfile polynomial(std::string name, std::vector<double> coeffs, int smoothness);
  // Same, with Taylor coefficients at 1 (powers of t - 1) supplied exactly.
  static RadialProfile polynomial(std::string name, std::vector<double> coeffs_at_0,
                                  std::vector<double> coeffs_at_1, int smoothness);
  static RadialProfile closed_form(std::string name, std::function<double(double)> f,
                                   double support, int smoothness,
                                   std::vector<double> breaks = {});

  double operator()(double t) const;
  // k-th derivative; polynomial profiles only (right derivative at t = 1 is 0).
  double derivative(int k, double t) const;

  const std::string& name() const noexcept { return name_; }
  bool is_polynomial() const noexcept { return polynomial_; }
  double support() const noexcept { return support_; }
  int smoothness() const noexcept { return smoothness_; }
  int degree() const noexcept { return static_cast<int>(coeffs0_.size()) - 1; }
  const std::vector<double>& coefficients() const noexcept { return coeffs0_; }
  const std::vector<double>& coefficients_at_one() const noexcept { return coeffs1_; }
  const std::vector<double>& breaks() const noexcept { return breaks_; }

 private:
  RadialProfile() = default;

  std::string name_;
  bool polynomial_ = false;
  std::vector<double> coeffs0_;
  std::vector<double> coeffs1_;
  std::function<double(double)> f_;
  double support_ = 1.0;
  int smoothness_ = 0;
  std::vector<double> breaks_;
};

}  // namespace xlab
