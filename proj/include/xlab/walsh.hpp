#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace xlab::walsh {

// Samples f(j / 2^B), j in [0, 2^B), 2 <= B <= 16.
class DyadicSignal {
 public:
  DyadicSignal(std::vector<double> values, int bits);
  static DyadicSignal sample(const std::function<double(double)>& f, int bits);

  int bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t j) const noexcept { return values_[j]; }

 private:
  std::vector<double> values_;
  int bits_;
};

// c_k, k in [0, 2^B), in Paley order.
class WalshCoefficients {
 public:
  WalshCoefficients(std::vector<double> coeffs, int bits);

  int bits() const noexcept { return bits_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  std::span<const double> data() const noexcept { return coeffs_; }
  double operator[](std::size_t k) const noexcept { return coeffs_[k]; }

 private:
  std::vector<double> coeffs_;
  int bits_;
};

// psi_n at the node j / 2^B: (-1)^{popcount(n & reverse_B(j))}.
int walsh_fn(std::uint32_t n, std::uint32_t j, int bits);

// Dyadic sum of two nodes: exclusive or of the B-bit words.
std::uint32_t dyadic_add(std::uint32_t j, std::uint32_t l, int bits);

// c_k = 2^{-B} sum_j f_j psi_k(j), O(B 2^B).
WalshCoefficients fwt(const DyadicSignal& f);
DyadicSignal ifwt(const WalshCoefficients& c);

// Weight of c_k in the Cesaro mean of S_1, ..., S_n (S_m = sum_{k<m} c_k psi_k):
// A^alpha_{n-1-k} / A^alpha_{n-1} for k < n, 0 otherwise.
double cesaro_weight(int n, int k, double alpha);
DyadicSignal cesaro_means(const WalshCoefficients& c, int n, double alpha);

struct Regularity {
  int bits = 0;
  std::vector<double> lc_values;   // index n - 1 for n = 1..nmax
  std::vector<double> octave_max;  // max over (2^{k-1}, 2^k], k = 0..log2(nmax)
  std::vector<double> growth;      // octave_max[k] / octave_max[k-1]
  bool bounded = false;
};

// L1 norms of the kernels of alpha S_n(x) + beta S_n(x + nu/n), the shift
// truncated to B = ceil(log2 nmax) + 4 dyadic digits. nmax must be a power of two.
Regularity br_means_regularity(double alpha, double beta, double nu, int nmax);

struct SidonBound {
  double l1_norm = 0.0;
  double bound = 0.0;
  bool ok = true;
};

// || sum_k lambda_k psi_k ||_1 against sum_k max_{s>=k} |lambda_s - lambda_{s+1}|.
SidonBound sidon_telyakovskii_bound(std::span<const double> lambda, int bits);

struct Moduli {
  double Omega = 0.0;
  double omega = 0.0;
};

// omega_n: sup over dyadic 0 < t < 2^{-n} of ||f(. + t) - f||_inf.
// Omega_n: the averaged expression taken literally, sup over n <= k < B.
Moduli walsh_moduli(const DyadicSignal& f, int n);

struct NamedSignal {
  std::string id;
  std::function<double(double)> f;
};

// Ten test functions on [0, 1).
std::vector<NamedSignal> dyadic_corpus();

double sup_norm(std::span<const double> v);

}  // namespace xlab::walsh
