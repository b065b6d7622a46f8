#include "xlab/seq_spaces.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace xlab::seq {

namespace {

void check_exponent(double p) {
  if (!(p > 0.0) || !std::isfinite(p)) throw std::invalid_argument("exponent must be in (0, inf)");
}

void check_entries(std::span<const double> c) {
  for (double v : c)
    if (!std::isfinite(v)) throw std::invalid_argument("sequence entries must be finite");
}

double sign(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t k = 0; k < n; ++k) s += a[k] * b[k];
  return s;
}

// max_n (1/(n+1)) sum_{k<=n} |beta_k|
double cesaro_max(std::span<const double> beta) {
  double best = 0.0;
  double acc = 0.0;
  for (std::size_t n = 0; n < beta.size(); ++n) {
    acc += std::abs(beta[n]);
    best = std::max(best, acc / static_cast<double>(n + 1));
  }
  return best;
}

}  // namespace

double ap_norm(std::span<const double> c, double p) {
  check_exponent(p);
  check_entries(c);
  double scale = 0.0;
  for (double v : c) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) return 0.0;
  double s = 0.0;
  for (double v : c) s += std::pow(std::abs(v) / scale, p);
  return scale * std::pow(s, 1.0 / p);
}

double astar_norm(std::span<const double> c, double p) {
  check_exponent(p);
  check_entries(c);
  double s = 0.0;
  double tail = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) {
    tail = std::max(tail, std::abs(c[i]));
    s += std::pow(tail, p);
  }
  return std::pow(s, 1.0 / p);
}

double hp_norm(std::span<const double> y, double p) {
  check_exponent(p);
  check_entries(y);
  double best = 0.0;
  double acc = 0.0;
  for (std::size_t n = 1; n <= y.size(); ++n) {
    acc += std::pow(std::abs(y[n - 1]), p);
    best = std::max(best, acc / static_cast<double>(n));
  }
  return std::pow(best, 1.0 / p);
}

double bp_norm(std::span<const double> x, double p) {
  check_exponent(p);
  check_entries(x);
  std::vector<double> tail(x.size() + 1, 0.0);
  for (std::size_t k = x.size(); k-- > 0;) tail[k] = tail[k + 1] + std::pow(std::abs(x[k]), p);
  double s = 0.0;
  for (std::size_t n = 1; n <= x.size(); ++n)
    s += std::pow(tail[n - 1] / static_cast<double>(n), 1.0 / p);
  return s;
}

AstarDuality duality_identity_astar(std::span<const double> beta, std::size_t random_trials,
                                    std::uint64_t seed) {
  check_entries(beta);
  AstarDuality out;
  double acc = 0.0;
  for (std::size_t n = 0; n < beta.size(); ++n) {
    acc += std::abs(beta[n]);
    const double avg = acc / static_cast<double>(n + 1);
    if (avg > out.rhs) {
      out.rhs = avg;
      out.argmax = n;
    }
  }
  out.extremal_alpha.assign(beta.size(), 0.0);
  for (std::size_t k = 0; k <= out.argmax && k < beta.size(); ++k)
    out.extremal_alpha[k] = sign(beta[k]) / static_cast<double>(out.argmax + 1);
  out.lhs = std::abs(dot(out.extremal_alpha, beta));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> alpha(beta.size());
  for (std::size_t t = 0; t < random_trials && !beta.empty(); ++t) {
    for (auto& a : alpha) a = g(rng);
    const double norm = astar_norm(alpha, 1.0);
    if (norm == 0.0) continue;
    out.lhs = std::max(out.lhs, std::abs(dot(alpha, beta)) / norm);
  }
  return out;
}

CesaroDuality duality_identity_cesaro(std::span<const double> alpha, std::size_t random_trials,
                                      std::uint64_t seed) {
  check_entries(alpha);
  const std::size_t L = alpha.size();
  CesaroDuality out;
  double tail = 0.0;
  for (std::size_t i = L; i-- > 0;) {
    tail = std::max(tail, std::abs(alpha[i]));
    out.rhs += tail;
  }

  // Vertices of the ball with nonnegative entries: choose indices j_1 < j_2 < ...
  // and put the prefix budget there, beta_{j_1} = j_1 + 1, beta_{j_i} = j_i - j_{i-1}.
  // best[j] is the largest value of such a chain ending at j.
  std::vector<double> best(L, 0.0);
  std::vector<std::ptrdiff_t> prev(L, -1);
  std::ptrdiff_t end = -1;
  double top = 0.0;
  for (std::size_t j = 0; j < L; ++j) {
    const double a = std::abs(alpha[j]);
    best[j] = a * static_cast<double>(j + 1);
    for (std::size_t i = 0; i < j; ++i) {
      const double v = best[i] + a * static_cast<double>(j - i);
      if (v > best[j]) {
        best[j] = v;
        prev[j] = static_cast<std::ptrdiff_t>(i);
      }
    }
    if (best[j] > top) {
      top = best[j];
      end = static_cast<std::ptrdiff_t>(j);
    }
  }
  out.extremal_beta.assign(L, 0.0);
  for (std::ptrdiff_t j = end; j >= 0; j = prev[j]) {
    const double width = static_cast<double>(j - prev[j]);
    out.extremal_beta[j] = sign(alpha[j]) * width;
  }
  out.lhs = std::abs(dot(alpha, out.extremal_beta));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::vector<double> beta(L);
  for (std::size_t t = 0; t < random_trials && L > 0; ++t) {
    for (auto& b : beta) b = g(rng);
    const double norm = cesaro_max(beta);
    if (norm == 0.0) continue;
    out.lhs = std::max(out.lhs, std::abs(dot(alpha, beta)) / norm);
  }
  return out;
}

HolderCheck hp_bp_holder_check(std::span<const double> x, std::span<const double> y, double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("holder check needs 1 < p < inf");
  const double q = p / (p - 1.0);
  return {std::abs(dot(x, y)), bp_norm(x, p) * hp_norm(y, q)};
}

HolderConstants estimate_holder_constants(double p, std::size_t samples, std::size_t max_length,
                                          std::uint64_t seed) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("holder constants need 1 < p < inf");
  if (samples == 0 || max_length == 0) throw std::invalid_argument("need at least one sample");
  const double q = p / (p - 1.0);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  std::uniform_int_distribution<std::size_t> len(1, max_length);
  std::uniform_real_distribution<double> decay(0.0, 2.0);

  auto draw = [&](std::size_t L) {
    std::vector<double> v(L);
    const double a = decay(rng);
    for (std::size_t k = 0; k < L; ++k) v[k] = g(rng) * std::pow(static_cast<double>(k + 1), -a);
    return v;
  };

  HolderConstants out;
  out.gamma2 = std::numeric_limits<double>::infinity();
  out.gamma3 = std::numeric_limits<double>::infinity();
  std::vector<double> cand;
  for (std::size_t s = 0; s < samples; ++s) {
    const std::size_t L = len(rng);
    const auto x = draw(L);
    const auto y = draw(L);
    const double bx = bp_norm(x, p);
    const double hy = hp_norm(y, q);
    if (bx == 0.0 || hy == 0.0) continue;
    out.gamma1 = std::max(out.gamma1, std::abs(dot(x, y)) / (bx * hy));

    // Lower bound for the dual norm of y: truncated Holder extremals and unit vectors.
    double g2 = 0.0;
    cand.assign(L, 0.0);
    for (std::size_t n = 0; n < L; ++n) {
      cand[n] = sign(y[n]) * std::pow(std::abs(y[n]), q - 1.0);
      const double b = bp_norm(cand, p);
      if (b > 0.0) g2 = std::max(g2, std::abs(dot(cand, y)) / b);
    }
    double head = 0.0;  // b_p norm of e_k is sum_{n<=k} n^{-1/p}
    for (std::size_t k = 0; k < L; ++k) {
      head += std::pow(static_cast<double>(k + 1), -1.0 / p);
      g2 = std::max(g2, std::abs(y[k]) / head);
    }
    out.gamma2 = std::min(out.gamma2, g2 / hy);

    double g3 = 0.0;
    for (int kind = 0; kind < 2; ++kind) {
      cand.assign(L, 0.0);
      for (std::size_t n = 0; n < L; ++n) {
        cand[n] = kind == 0 ? sign(x[n]) * std::pow(std::abs(x[n]), p - 1.0) : sign(x[n]);
        const double h = hp_norm(cand, q);
        if (h > 0.0) g3 = std::max(g3, std::abs(dot(x, cand)) / h);
      }
    }
    out.gamma3 = std::min(out.gamma3, g3 / bx);
  }
  return out;
}

}  // namespace xlab::seq
