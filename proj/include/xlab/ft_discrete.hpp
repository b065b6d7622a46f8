#pragma once

#include <array>
#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "xlab/radial_profile.hpp"

namespace xlab::ftd {

using cplx = std::complex<double>;

// J_nu(x) for nu >= 0, x >= 0: power series below the seam, Hankel asymptotics above.
double bessel_j(double nu, double x);
inline constexpr double bessel_seam = 16.0;

// p-th positive zero of J_nu, nu in [0, 5], 1 <= p <= 20.
double bessel_zero(double nu, int p);

// p-th derivative (p <= 4) of h(x) = 1/x - cot(x/2)/2 on 0 < |x| <= pi (h(0) = 0).
double h_function(double x, int p);
inline constexpr double h_seam = 0.5;

// f on [n, inf) with derivatives; V is the variation of f^(r) on [n, inf).
struct DecayingFunction {
  std::string name;
  std::function<double(int, double)> derivative;  // derivative(p, u) = f^(p)(u)
  std::optional<double> variation;                // supplied V, if known
  bool monotone_derivatives = false;              // every f^(p) monotone, so V = |f^(r)(n)|

  double operator()(double u) const { return derivative(0, u); }

  static DecayingFunction exponential(double a);     // e^{-a u}
  static DecayingFunction inverse_power(double b);   // (1 + u)^{-b}
};

struct EulerMaclaurin {
  cplx lhs;
  cplx rhs_main;
  cplx theta;
  double variation = 0.0;
  double tail_bound = 0.0;  // certified error of lhs + integral
};

// Compares sum_{k>=n} f(k) e^{ikx} with the integral, the endpoint term and r
// correction terms built from h. Throws internal_error when |theta| > 3 + tol.
EulerMaclaurin euler_maclaurin_sum(const DecayingFunction& f, int n, int r, double x);

class ConvexBody2D {
 public:
  enum class Kind { polygon, disc, ellipse };
  using Point = std::array<double, 2>;

  // Vertices in either orientation; must be strictly convex with the origin inside.
  static ConvexBody2D polygon(std::vector<Point> vertices);
  static ConvexBody2D disc(double radius);
  static ConvexBody2D ellipse(double a, double b);  // semi-axes along x and y

  Kind kind() const noexcept { return kind_; }
  const std::vector<Point>& vertices() const noexcept { return vertices_; }
  double support(double phi) const;
  // h(phi) + h(phi + pi).
  double width(double phi) const { return support(phi) + support(phi + 3.141592653589793); }
  double area() const;
  bool centrally_symmetric(double tol = 1e-12) const;
  std::string describe() const;

 private:
  ConvexBody2D() = default;

  Kind kind_ = Kind::disc;
  std::vector<Point> vertices_;  // counter-clockwise
  double a_ = 1.0;
  double b_ = 1.0;
};

// int_K e^{i(u,x)} dx.
cplx indicator_ft(const ConvexBody2D& body, const ConvexBody2D::Point& u);

struct ZeroCurvePoint {
  double phi = 0.0;
  double r = 0.0;
  double width = 0.0;  // d(phi)
  double lower = 0.0;  // 2 p pi / d
  double upper = 0.0;  // 2 (p+1) pi / d
};

// p-th positive zero of t -> indicator_ft(body, t (cos phi, sin phi)), searched
// inside (2p pi/d, 2(p+1) pi/d). Throws not_found when the bracket has no sign change.
ZeroCurvePoint zero_curve(const ConvexBody2D& body, int p, double phi);

// Fourier transform of f(x) = f0(|x|) in R^m, m in {1, 2, 3}, at radius r >= 0.
double radial_ft(const RadialProfile& profile, int m, double r);

}  // namespace xlab::ftd
