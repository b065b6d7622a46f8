#include "xlab/walsh.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xlab::walsh {

namespace {

void check_bits(int bits) {
  if (bits < 2 || bits > 16) throw std::invalid_argument("walsh: bits must be in [2, 16]");
}

std::uint32_t reverse_bits(std::uint32_t j, int bits) {
  std::uint32_t r = 0;
  for (int i = 0; i < bits; ++i) r |= ((j >> i) & 1u) << (bits - 1 - i);
  return r;
}

// Unnormalised Walsh-Hadamard transform in natural (Hadamard) order.
void hadamard(std::vector<double>& v) {
  for (std::size_t len = 1; len < v.size(); len <<= 1)
    for (std::size_t i = 0; i < v.size(); i += 2 * len)
      for (std::size_t j = i; j < i + len; ++j) {
        const double a = v[j], b = v[j + len];
        v[j] = a + b;
        v[j + len] = a - b;
      }
}

}  // namespace

DyadicSignal::DyadicSignal(std::vector<double> values, int bits) : values_(std::move(values)), bits_(bits) {
  check_bits(bits);
  if (values_.size() != (std::size_t{1} << bits))
    throw std::invalid_argument("DyadicSignal: length must be 2^bits");
}

DyadicSignal DyadicSignal::sample(const std::function<double(double)>& f, int bits) {
  check_bits(bits);
  const std::size_t n = std::size_t{1} << bits;
  std::vector<double> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = f(std::ldexp(static_cast<double>(j), -bits));
  return DyadicSignal(std::move(v), bits);
}

WalshCoefficients::WalshCoefficients(std::vector<double> coeffs, int bits)
    : coeffs_(std::move(coeffs)), bits_(bits) {
  check_bits(bits);
  if (coeffs_.size() != (std::size_t{1} << bits))
    throw std::invalid_argument("WalshCoefficients: length must be 2^bits");
}

int walsh_fn(std::uint32_t n, std::uint32_t j, int bits) {
  check_bits(bits);
  const std::uint32_t limit = 1u << bits;
  if (n >= limit || j >= limit) throw std::invalid_argument("walsh_fn: index out of range");
  return std::popcount(n & reverse_bits(j, bits)) % 2 == 0 ? 1 : -1;
}

std::uint32_t dyadic_add(std::uint32_t j, std::uint32_t l, int bits) {
  check_bits(bits);
  const std::uint32_t limit = 1u << bits;
  if (j >= limit || l >= limit) throw std::invalid_argument("dyadic_add: node out of range");
  return j ^ l;
}

WalshCoefficients fwt(const DyadicSignal& f) {
  const int bits = f.bits();
  std::vector<double> h(f.values().begin(), f.values().end());
  hadamard(h);
  // psi_k(j) = (-1)^{popcount(reverse(k) & j)}: the Hadamard index of psi_k is reverse(k)
  std::vector<double> c(h.size());
  const double scale = std::ldexp(1.0, -bits);
  for (std::uint32_t k = 0; k < c.size(); ++k) c[k] = h[reverse_bits(k, bits)] * scale;
  return WalshCoefficients(std::move(c), bits);
}

DyadicSignal ifwt(const WalshCoefficients& c) {
  const int bits = c.bits();
  std::vector<double> h(c.size());
  for (std::uint32_t k = 0; k < h.size(); ++k) h[reverse_bits(k, bits)] = c[k];
  hadamard(h);
  return DyadicSignal(std::move(h), bits);
}

double cesaro_weight(int n, int k, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("cesaro_weight: need alpha > 0");
  if (n < 1) throw std::invalid_argument("cesaro_weight: need n >= 1");
  if (k < 0 || k >= n) return 0.0;
  // A^a_m = Gamma(m + a + 1) / (Gamma(m + 1) Gamma(a + 1))
  auto log_a = [alpha](int m) { return std::lgamma(m + alpha + 1.0) - std::lgamma(m + 1.0); };
  if (k == 0) return 1.0;
  return std::exp(log_a(n - 1 - k) - log_a(n - 1));
}

DyadicSignal cesaro_means(const WalshCoefficients& c, int n, double alpha) {
  if (n < 1 || static_cast<std::size_t>(n) > c.size())
    throw std::invalid_argument("cesaro_means: need 1 <= n <= 2^B");
  std::vector<double> w(c.size(), 0.0);
  for (int k = 0; k < n; ++k) w[k] = cesaro_weight(n, k, alpha) * c[k];
  return ifwt(WalshCoefficients(std::move(w), c.bits()));
}

Regularity br_means_regularity(double alpha, double beta, double nu, int nmax) {
  if (nmax < 2 || !std::has_single_bit(static_cast<unsigned>(nmax)))
    throw std::invalid_argument("br_means_regularity: nmax must be a power of two >= 2");
  if (!(nu >= 0.0)) throw std::invalid_argument("br_means_regularity: need nu >= 0");
  Regularity out;
  out.bits = std::bit_width(static_cast<unsigned>(nmax)) - 1 + 4;
  check_bits(out.bits);
  const std::uint32_t size = 1u << out.bits;
  std::vector<double> dirichlet(size, 0.0);
  std::vector<std::uint32_t> rev(size);
  for (std::uint32_t j = 0; j < size; ++j) rev[j] = reverse_bits(j, out.bits);
  out.lc_values.reserve(nmax);
  for (int n = 1; n <= nmax; ++n) {
    const std::uint32_t k = static_cast<std::uint32_t>(n - 1);
    for (std::uint32_t j = 0; j < size; ++j) dirichlet[j] += std::popcount(k & rev[j]) % 2 == 0 ? 1.0 : -1.0;
    // first B binary digits of nu / n (digits beyond the integer part)
    const double frac = nu / n - std::floor(nu / n);
    const auto shift = static_cast<std::uint32_t>(std::floor(std::ldexp(frac, out.bits))) & (size - 1);
    double s = 0.0;
    for (std::uint32_t j = 0; j < size; ++j) s += std::fabs(alpha * dirichlet[j] + beta * dirichlet[j ^ shift]);
    out.lc_values.push_back(std::ldexp(s, -out.bits));
  }
  for (int top = 1; top <= nmax; top *= 2) {
    double m = 0.0;
    for (int n = top / 2 + 1; n <= top; ++n) m = std::max(m, out.lc_values[n - 1]);
    out.octave_max.push_back(m);
  }
  for (std::size_t k = 1; k < out.octave_max.size(); ++k)
    out.growth.push_back(out.octave_max[k] / out.octave_max[k - 1]);
  out.bounded = out.growth.empty() || out.growth.back() <= 1.2;
  return out;
}

SidonBound sidon_telyakovskii_bound(std::span<const double> lambda, int bits) {
  check_bits(bits);
  const std::size_t size = std::size_t{1} << bits;
  if (lambda.size() > size) throw std::invalid_argument("sidon_telyakovskii_bound: sequence longer than 2^B");
  std::vector<double> c(size, 0.0);
  std::copy(lambda.begin(), lambda.end(), c.begin());
  const auto sum = ifwt(WalshCoefficients(c, bits));
  SidonBound out;
  for (double v : sum.values()) out.l1_norm += std::fabs(v);
  out.l1_norm = std::ldexp(out.l1_norm, -bits);
  // suffix maxima of |lambda_s - lambda_{s+1}|, lambda = 0 beyond the support
  const std::size_t L = lambda.size();
  std::vector<double> tail(L + 1, 0.0);
  for (std::size_t s = L; s-- > 0;) {
    const double next = s + 1 < L ? lambda[s + 1] : 0.0;
    tail[s] = std::max(tail[s + 1], std::fabs(lambda[s] - next));
  }
  for (std::size_t k = 0; k < L; ++k) out.bound += tail[k];
  out.ok = out.l1_norm <= out.bound + 1e-9;
  return out;
}

Moduli walsh_moduli(const DyadicSignal& f, int n) {
  const int bits = f.bits();
  if (n < 0 || n >= bits) throw std::invalid_argument("walsh_moduli: need 0 <= n < B");
  const auto v = f.values();
  const std::uint32_t size = static_cast<std::uint32_t>(v.size());
  Moduli out;
  const std::uint32_t tmax = 1u << (bits - n);  // t < 2^{-n}
  for (std::uint32_t t = 1; t < tmax; ++t) {
    double d = 0.0;
    for (std::uint32_t j = 0; j < size; ++j) d = std::max(d, std::fabs(v[j ^ t] - v[j]));
    out.omega = std::max(out.omega, d);
  }
  const std::uint32_t shift = 1u << (bits - n - 1);  // 2^{-(n+1)}
  double diff = 0.0;
  for (std::uint32_t j = 0; j < size; ++j) diff = std::max(diff, std::fabs(v[j] - v[j ^ shift]));
  for (int k = n; k < bits; ++k) {
    // 2^{-(k+1)} sum_{nu=0}^k 2^{nu-1} = (2^{k+1} - 1) / 2^{k+2}
    const double factor = (std::ldexp(1.0, k + 1) - 1.0) / std::ldexp(1.0, k + 2);
    out.Omega = std::max(out.Omega, factor * diff);
  }
  return out;
}

std::vector<NamedSignal> dyadic_corpus() {
  constexpr double pi = std::numbers::pi;
  return {
      {"x", [](double x) { return x; }},
      {"x2", [](double x) { return x * x; }},
      {"abs_centered", [](double x) { return std::fabs(x - 0.5); }},
      {"sin2pi", [pi](double x) { return std::sin(2 * pi * x); }},
      {"sqrt", [](double x) { return std::sqrt(x); }},
      {"exp", [](double x) { return std::exp(x); }},
      {"cos6pi", [pi](double x) { return std::cos(6 * pi * x); }},
      {"step_third", [](double x) { return x < 1.0 / 3.0 ? 1.0 : 0.0; }},
      {"x_log", [](double x) { return x > 0 ? x * std::log(x) : 0.0; }},
      {"walsh_poly", [](double x) {
         // psi_3 + psi_5 / 2 from the first three binary digits
         const int d1 = x >= 0.5, d2 = std::fmod(2 * x, 1.0) >= 0.5, d3 = std::fmod(4 * x, 1.0) >= 0.5;
         return ((d1 + d2) % 2 ? -1.0 : 1.0) + 0.5 * ((d1 + d3) % 2 ? -1.0 : 1.0);
       }},
  };
}

double sup_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s = std::max(s, std::fabs(x));
  return s;
}

}  // namespace xlab::walsh
