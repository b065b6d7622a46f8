#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace xlab::seq {

// Finite real sequences, zero-extended. Exponents p must be positive and finite.

// (sum |c_k|^p)^(1/p)
double ap_norm(std::span<const double> c, double p);

// (sum_{n>=0} sup_{k>=n} |c_k|^p)^(1/p), one-sided indexing.
double astar_norm(std::span<const double> c, double p);

// Entry 0 holds y_1: sup_n ((1/n) sum_{k<=n} |y_k|^p)^(1/p).
double hp_norm(std::span<const double> y, double p);

// Entry 0 holds x_1: sum_n ((1/n) sum_{k>=n} |x_k|^p)^(1/p).
double bp_norm(std::span<const double> x, double p);

struct AstarDuality {
  double lhs = 0.0;
  double rhs = 0.0;
  std::size_t argmax = 0;
  std::vector<double> extremal_alpha;
};

// sup over the unit ball of A*_1 of |sum alpha_k beta_k| against
// max_n (1/(n+1)) sum_{k<=n} |beta_k|. The lhs combines the attained value of
// the extremal sequence with a seeded random search over the ball.
AstarDuality duality_identity_astar(std::span<const double> beta, std::size_t random_trials = 256,
                                    std::uint64_t seed = 1);

struct CesaroDuality {
  double lhs = 0.0;
  double rhs = 0.0;
  std::vector<double> extremal_beta;
};

// sup over {beta : max_n (1/(n+1)) sum_{k<=n} |beta_k| <= 1} of |sum alpha_k beta_k|
// against sum_n sup_{k>=n} |alpha_k|. The lhs maximizes over the vertices of
// the ball (exactly, by dynamic programming) plus a seeded random search.
CesaroDuality duality_identity_cesaro(std::span<const double> alpha,
                                      std::size_t random_trials = 256, std::uint64_t seed = 1);

struct HolderCheck {
  double pairing = 0.0;
  double bound_product = 0.0;
};

// |sum x_k y_k| and ||x||_{b_p} ||y||_{h_q}, q = p/(p-1). Requires 1 < p < inf.
HolderCheck hp_bp_holder_check(std::span<const double> x, std::span<const double> y, double p);

struct HolderConstants {
  double gamma1 = 0.0;  // max observed pairing / (||x||_{b_p} ||y||_{h_q})
  double gamma2 = 0.0;  // min over y of a lower bound for sup_{||x||_{b_p}<=1} |<x,y>| / ||y||_{h_q}
  double gamma3 = 0.0;  // min over x of a lower bound for sup_{||y||_{h_q}<=1} |<x,y>| / ||x||_{b_p}
};

// Empirical constants over random sequences of length 1..max_length.
HolderConstants estimate_holder_constants(double p, std::size_t samples, std::size_t max_length,
                                          std::uint64_t seed);

}  // namespace xlab::seq
