#pragma once

#include "xlab/trig.hpp"

namespace xlab::smooth {

// h is snapped down to the nearest multiple of the grid step 2pi/M; the sup
// over delta in (0, h] runs over the grid steps.
struct ModulusSpec {
  int r = 1;
  trig::GridNorm norm = trig::GridNorm::sup();
  double h = 0.0;
};

// Number of grid steps J with J (2pi/M) <= h; throws when h is below one step
// or above pi.
int steps_for(const trig::SampledFunction& f, double h);

// ||sum_nu (-1)^nu C(r,nu) f(. + nu delta)||, delta a multiple of the step.
double difference_norm(const trig::SampledFunction& f, int r, int steps, trig::GridNorm norm);

// sup_{0 < delta <= h} of difference_norm
double modulus(const trig::SampledFunction& f, const ModulusSpec& spec);

// || (1/h) int_0^h Delta_delta^r f d delta ||, the delta-integral by composite
// Simpson on the grid steps (3/8 rule on a trailing odd panel); h must cover
// at least two steps. All weights are nonnegative and sum to h, so the result
// never exceeds modulus().
double linearized_modulus(const trig::SampledFunction& f, const ModulusSpec& spec);

struct TwoSided {
  double approx_error = 0.0;
  double modulus_value = 0.0;
  double ratio = 0.0;  // approx_error / modulus_value, 0 when both vanish
};

// ||f - Lambda_n f|| against omega_r(f; h); defaults: de la Vallee Poussin
// mean, sup norm, h = 1/n.
TwoSided jackson_two_sided(const trig::SampledFunction& f, int r, int n);
TwoSided jackson_two_sided(const trig::SampledFunction& f, int r, int n,
                           const trig::SummabilityMethod& method, trig::GridNorm norm, double h);

// min over g in {0, f, V_{2^j} f : 2^j <= 4/t} of ||f - g|| + t^r ||g^(r)||,
// derivatives computed spectrally. Requires t in (0, 1].
double k_functional(const trig::SampledFunction& f, double t, int r,
                    trig::GridNorm norm = trig::GridNorm::sup());

// Si(x) by adaptive quadrature of sin(t)/t.
double sine_integral(double x);

// A = (2 + (4/pi) Si(pi))^{-1}
double bernstein_mean_sharp_constant();

struct LowerBoundCheck {
  double lower = 0.0;   // A omega(f; pi/n)
  double error = 0.0;   // ||f - (S_n f + S_n f(. + pi/n))/2||
  double slack = 0.0;   // error - lower
};

// Requires M divisible by 2n so that pi/n is a whole number of grid steps.
LowerBoundCheck bernstein_lower_bound(const trig::SampledFunction& f, int n);

}  // namespace xlab::smooth
