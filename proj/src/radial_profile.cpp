#include "xlab/radial_profile.hpp"

#include <cmath>
#include <stdexcept>

namespace xlab {

namespace {

double horner(const std::vector<double>& c, double x) {
  double s = 0.0;
  for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
  return s;
}

// Coefficients of the k-th derivative.
std::vector<double> differentiate(std::vector<double> c, int k) {
  for (int i = 0; i < k && !c.empty(); ++i) {
    for (std::size_t j = 1; j < c.size(); ++j) c[j - 1] = c[j] * static_cast<double>(j);
    c.pop_back();
  }
  return c;
}

}  // namespace

RadialProfile RadialProfile::polynomial(std::string name, std::vector<double> coeffs,
                                        int smoothness) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  // Taylor shift to t = 1: c1[j] = sum_{k>=j} C(k,j) c[k]
  std::vector<double> at_one(coeffs.size(), 0.0);
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    const auto d = differentiate(coeffs, static_cast<int>(j));
    double fact = 1.0;
    for (std::size_t i = 2; i <= j; ++i) fact *= static_cast<double>(i);
    at_one[j] = horner(d, 1.0) / fact;
  }
  return polynomial(std::move(name), std::move(coeffs), std::move(at_one), smoothness);
}

RadialProfile RadialProfile::polynomial(std::string name, std::vector<double> coeffs_at_0,
                                        std::vector<double> coeffs_at_1, int smoothness) {
  if (coeffs_at_0.empty() || coeffs_at_0.size() != coeffs_at_1.size()) {
    throw std::invalid_argument("RadialProfile: Taylor coefficient lists must match in length");
  }
  for (double v : coeffs_at_0)
    if (!std::isfinite(v)) throw std::invalid_argument("RadialProfile: non-finite coefficient");
  RadialProfile p;
  p.name_ = std::move(name);
  p.polynomial_ = true;
  p.coeffs0_ = std::move(coeffs_at_0);
  p.coeffs1_ = std::move(coeffs_at_1);
  p.support_ = 1.0;
  p.smoothness_ = smoothness;
  p.breaks_ = {1.0};
  return p;
}

RadialProfile RadialProfile::closed_form(std::string name, std::function<double(double)> f,
                                         double support, int smoothness,
                                         std::vector<double> breaks) {
  if (!f) throw std::invalid_argument("RadialProfile: empty evaluator");
  if (!(support > 0.0)) throw std::invalid_argument("RadialProfile: support must be positive");
  RadialProfile p;
  p.name_ = std::move(name);
  p.f_ = std::move(f);
  p.support_ = support;
  p.smoothness_ = smoothness;
  p.breaks_ = std::move(breaks);
  return p;
}

double RadialProfile::operator()(double t) const {
  if (t < 0.0) throw std::invalid_argument("RadialProfile: negative radius");
  if (polynomial_) {
    if (t > 1.0) return 0.0;
    // near the knot the expansion at 1 avoids cancellation
    return t > 0.5 ? horner(coeffs1_, t - 1.0) : horner(coeffs0_, t);
  }
  if (t > support_) return 0.0;
  return f_(t);
}

double RadialProfile::derivative(int k, double t) const {
  if (!polynomial_) throw std::invalid_argument("RadialProfile: derivatives need a polynomial profile");
  if (k < 0) throw std::invalid_argument("RadialProfile: negative derivative order");
  if (t >= 1.0) {
    if (t > 1.0) return 0.0;
    // left derivative at the knot from the Taylor data at 1
    if (static_cast<std::size_t>(k) >= coeffs1_.size()) return 0.0;
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    return coeffs1_[k] * fact;
  }
  if (t > 0.5) return horner(differentiate(coeffs1_, k), t - 1.0);
  return horner(differentiate(coeffs0_, k), t);
}

}  // namespace xlab
