#include "xlab/trig.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "fft.hpp"
#include "xlab/errors.hpp"

namespace xlab::trig {

namespace {

constexpr double kPi = std::numbers::pi;

std::size_t wrap(std::ptrdiff_t k, std::size_t M) {
  const auto m = static_cast<std::ptrdiff_t>(M);
  return static_cast<std::size_t>(((k % m) + m) % m);
}

// Signed frequency of FFT slot i on an M-point grid; slot M/2 maps to -M/2.
int frequency(std::size_t i, std::size_t M) {
  return i < M / 2 ? static_cast<int>(i) : static_cast<int>(i) - static_cast<int>(M);
}

double sign_of_shift(int k) { return (k % 2 == 0) ? 1.0 : -1.0; }

// Number of terms after which r^k drops below 1e-17.
int geometric_cutoff(double r) {
  if (r <= 0.0) return 0;
  if (r >= 1.0) throw std::invalid_argument("abel-poisson: r must lie in [0, 1)");
  return static_cast<int>(std::ceil(std::log(1e-17) / std::log(r)));
}

std::string num(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double abel_radius(int n) { return n <= 0 ? 0.0 : 1.0 - 1.0 / n; }

double cesaro_weight(double alpha, int n, int k) {
  const int m = n - std::abs(k);
  if (m < 0) return 0.0;
  return std::exp(std::lgamma(m + alpha + 1.0) - std::lgamma(m + 1.0) -
                  std::lgamma(n + alpha + 1.0) + std::lgamma(n + 1.0));
}

std::vector<double> parse_args(std::string_view text, std::string_view label) {
  std::vector<double> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
    if (ec != std::errc{} || ptr != item.data() + item.size()) {
      throw not_found("unknown summability method: " + std::string(label));
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

SummabilityMethod dirichlet() {
  return SummabilityMethod::matrix(
      "dirichlet", [](int n, int k) { return cplx(std::abs(k) <= n ? 1.0 : 0.0); },
      [](int n) { return n; });
}

SummabilityMethod cesaro(double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("cesaro: alpha must be positive");
  std::string label = alpha == 1.0 ? "fejer" : "cesaro(" + num(alpha) + ")";
  if (alpha == 1.0) {
    return SummabilityMethod::matrix(
        label, [](int n, int k) { return cplx(1.0 - std::abs(k) / (n + 1.0)); },
        [](int n) { return n; });
  }
  return SummabilityMethod::matrix(
      label, [alpha](int n, int k) { return cplx(cesaro_weight(alpha, n, k)); },
      [](int n) { return n; });
}

SummabilityMethod abel_poisson_family() {
  return SummabilityMethod::matrix(
      "abel-poisson", [](int n, int k) { return cplx(std::pow(abel_radius(n), std::abs(k))); },
      [](int n) { return geometric_cutoff(abel_radius(n)); });
}

SummabilityMethod abel_poisson_fixed(double r) {
  if (!(r >= 0.0 && r < 1.0)) throw std::invalid_argument("abel-poisson: r must lie in [0, 1)");
  const int cutoff = geometric_cutoff(r);
  return SummabilityMethod::matrix(
      "abel-poisson(" + num(r) + ")",
      [r](int, int k) { return cplx(std::pow(r, std::abs(k))); }, [cutoff](int) { return cutoff; });
}

SummabilityMethod riesz(double alpha, double delta) {
  if (!(alpha > 0.0) || !(delta >= 0.0)) {
    throw std::invalid_argument("riesz: need alpha > 0 and delta >= 0");
  }
  return SummabilityMethod::generator(
      "riesz(" + num(alpha) + "," + num(delta) + ")",
      [alpha, delta](double x) {
        const double base = 1.0 - std::pow(std::abs(x), alpha);
        if (base <= 0.0) return 0.0;
        return delta == 0.0 ? 1.0 : std::pow(base, delta);
      },
      1.0);
}

SummabilityMethod rogosinski() {
  return SummabilityMethod::matrix(
      "rogosinski",
      [](int n, int k) {
        if (std::abs(k) > n) return cplx(0.0);
        if (n == 0) return cplx(1.0);
        return cplx(std::cos(k * kPi / (2.0 * n)));
      },
      [](int n) { return n; });
}

SummabilityMethod bernstein() {
  // (S_n(x) + S_n(x + pi/n)) / 2
  return SummabilityMethod::matrix(
      "bernstein",
      [](int n, int k) {
        if (std::abs(k) > n) return cplx(0.0);
        if (n == 0) return cplx(1.0);
        return 0.5 * (1.0 + std::polar(1.0, k * kPi / n));
      },
      [](int n) { return n; });
}

SummabilityMethod vallee_poussin() {
  return SummabilityMethod::generator(
      "vallee-poussin", [](double x) { return std::clamp(2.0 - std::abs(x), 0.0, 1.0); }, 2.0);
}

}  // namespace

// ---------------------------------------------------------------- SampledFunction

SampledFunction::SampledFunction(std::vector<cplx> values) : values_(std::move(values)) {
  const std::size_t M = values_.size();
  if (M < 4 || !std::has_single_bit(M)) {
    throw std::invalid_argument("SampledFunction: grid size must be a power of two >= 4");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw std::invalid_argument("SampledFunction: non-finite sample");
    }
  }
}

SampledFunction SampledFunction::sample(const std::function<cplx(double)>& f, std::size_t M) {
  std::vector<cplx> v(M);
  for (std::size_t j = 0; j < M; ++j) v[j] = f(-kPi + 2.0 * kPi * j / M);
  return SampledFunction(std::move(v));
}

SampledFunction SampledFunction::sample_real(const std::function<double(double)>& f,
                                             std::size_t M) {
  return sample([&f](double x) { return cplx(f(x)); }, M);
}

double SampledFunction::node(std::size_t j) const noexcept {
  return -kPi + 2.0 * kPi * static_cast<double>(j) / static_cast<double>(values_.size());
}

double SampledFunction::step() const noexcept {
  return 2.0 * kPi / static_cast<double>(values_.size());
}

const cplx& SampledFunction::shifted(std::size_t j, std::ptrdiff_t shift) const noexcept {
  return values_[wrap(static_cast<std::ptrdiff_t>(j) + shift, values_.size())];
}

SampledFunction SampledFunction::operator-(const SampledFunction& other) const {
  if (other.size() != size()) throw std::invalid_argument("SampledFunction: grid size mismatch");
  std::vector<cplx> v(values_);
  for (std::size_t j = 0; j < v.size(); ++j) v[j] -= other.values_[j];
  return SampledFunction(std::move(v));
}

SampledFunction SampledFunction::scaled(double factor) const {
  std::vector<cplx> v(values_);
  for (auto& x : v) x *= factor;
  return SampledFunction(std::move(v));
}

// ---------------------------------------------------------------- TrigCoefficients

TrigCoefficients::TrigCoefficients(int degree)
    : degree_(degree), coeffs_(static_cast<std::size_t>(2 * std::max(degree, 0) + 1)) {
  if (degree < 0) throw std::invalid_argument("TrigCoefficients: negative degree");
}

TrigCoefficients::TrigCoefficients(int degree, std::vector<cplx> coeffs)
    : degree_(degree), coeffs_(std::move(coeffs)) {
  if (degree < 0 || coeffs_.size() != static_cast<std::size_t>(2 * degree + 1)) {
    throw std::invalid_argument("TrigCoefficients: expected 2N+1 coefficients");
  }
}

cplx TrigCoefficients::operator[](int k) const noexcept {
  if (k < -degree_ || k > degree_) return {};
  return coeffs_[static_cast<std::size_t>(k + degree_)];
}

cplx& TrigCoefficients::at(int k) {
  if (k < -degree_ || k > degree_) throw std::out_of_range("TrigCoefficients: index out of range");
  return coeffs_[static_cast<std::size_t>(k + degree_)];
}

bool TrigCoefficients::is_real_valued(double tol) const noexcept {
  for (int k = 0; k <= degree_; ++k) {
    if (std::abs((*this)[-k] - std::conj((*this)[k])) > tol) return false;
  }
  return true;
}

// ---------------------------------------------------------------- GridNorm

GridNorm GridNorm::sup() { return {std::numeric_limits<double>::infinity()}; }

GridNorm GridNorm::lp(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("GridNorm: p must be positive");
  return {p};
}

bool GridNorm::is_sup() const noexcept { return std::isinf(p); }

// ---------------------------------------------------------------- SummabilityMethod

SummabilityMethod SummabilityMethod::matrix(std::string name, MatrixFn lambda, DegreeFn degree,
                                            bool regular) {
  SummabilityMethod m;
  m.name_ = std::move(name);
  m.kind_ = MethodKind::matrix;
  m.lambda_ = std::move(lambda);
  m.degree_ = std::move(degree);
  m.regular_ = regular;
  return m;
}

SummabilityMethod SummabilityMethod::generator(std::string name, Profile phi,
                                               double support_radius) {
  if (!(support_radius > 0.0)) throw std::invalid_argument("generator: support radius must be > 0");
  SummabilityMethod m;
  m.name_ = std::move(name);
  m.kind_ = MethodKind::generator;
  m.radius_ = support_radius;
  m.regular_ = std::abs(phi(0.0) - 1.0) < 1e-12;
  m.phi_ = std::move(phi);
  return m;
}

int SummabilityMethod::degree(int n) const {
  if (n < 0) throw std::invalid_argument("summability: negative index n");
  if (kind_ == MethodKind::matrix) return degree_(n);
  return static_cast<int>(std::floor(radius_ * n + 1e-12));
}

cplx SummabilityMethod::multiplier(int n, int k) const {
  if (n < 0) throw std::invalid_argument("summability: negative index n");
  if (std::abs(k) > degree(n)) return {};
  if (kind_ == MethodKind::matrix) return lambda_(n, k);
  if (n == 0) return k == 0 ? cplx(phi_(0.0)) : cplx{};
  const double x = static_cast<double>(k) / n;
  if (std::abs(x) >= radius_) {
    // Left limit at the edge of the support.
    const double inside = std::nextafter(std::abs(x), 0.0);
    return cplx(phi_(x < 0 ? -inside : inside));
  }
  return cplx(phi_(x));
}

std::vector<cplx> SummabilityMethod::multipliers(int n) const {
  const int d = degree(n);
  std::vector<cplx> out(static_cast<std::size_t>(2 * d + 1));
  for (int k = -d; k <= d; ++k) out[static_cast<std::size_t>(k + d)] = multiplier(n, k);
  return out;
}

// ---------------------------------------------------------------- operations

std::vector<cplx> grid_spectrum(const SampledFunction& f) {
  std::vector<cplx> data(f.values().begin(), f.values().end());
  detail::fft(data, -1);
  const double scale = 1.0 / static_cast<double>(data.size());
  for (auto& v : data) v *= scale;
  return data;
}

TrigCoefficients compute_coefficients(const SampledFunction& f, int N) {
  const std::size_t M = f.size();
  if (N < 0 || static_cast<std::size_t>(2 * N + 1) > M) {
    throw std::invalid_argument("compute_coefficients: degree too large for grid");
  }
  const auto spec = grid_spectrum(f);
  TrigCoefficients c(N);
  // e^{-ik x_j} = (-1)^k e^{-2 pi i k j / M}
  for (int k = -N; k <= N; ++k) c.at(k) = sign_of_shift(k) * spec[wrap(k, M)];
  return c;
}

SampledFunction synthesize(const TrigCoefficients& c, std::size_t M) {
  if (static_cast<std::size_t>(2 * c.degree() + 1) > M) {
    throw std::invalid_argument("synthesize: degree too large for grid");
  }
  std::vector<cplx> data(M);
  for (int k = -c.degree(); k <= c.degree(); ++k) data[wrap(k, M)] = sign_of_shift(k) * c[k];
  detail::fft(data, +1);
  return SampledFunction(std::move(data));
}

SampledFunction kernel(const SummabilityMethod& method, int n, std::size_t M) {
  if (n < 0) throw std::invalid_argument("kernel: n must be nonnegative");
  const int d = method.degree(n);
  if (M < static_cast<std::size_t>(2 * (d + 1))) {
    throw std::invalid_argument("kernel: grid too coarse for the kernel degree");
  }
  TrigCoefficients c(d, method.multipliers(n));
  return synthesize(c, M);
}

cplx kernel_value(std::span<const cplx> multipliers, double t) {
  const int d = static_cast<int>(multipliers.size() / 2);
  cplx sum = multipliers[static_cast<std::size_t>(d)];
  const cplx rot = std::polar(1.0, t);
  cplx w = rot;
  for (int k = 1; k <= d; ++k) {
    sum += multipliers[static_cast<std::size_t>(d + k)] * w +
           multipliers[static_cast<std::size_t>(d - k)] * std::conj(w);
    // Re-anchor periodically so the rotation does not drift.
    w = (k % 64 == 63) ? std::polar(1.0, (k + 1) * t) : w * rot;
  }
  return sum;
}

TrigCoefficients apply_means(const SummabilityMethod& method, int n, const TrigCoefficients& c) {
  const int d = std::min(c.degree(), method.degree(n));
  TrigCoefficients out(d);
  for (int k = -d; k <= d; ++k) out.at(k) = method.multiplier(n, k) * c[k];
  return out;
}

SampledFunction apply_means_spectrum(const SummabilityMethod& method, int n,
                                     std::span<const cplx> spectrum) {
  const std::size_t M = spectrum.size();
  const int d = method.degree(n);
  std::vector<cplx> data(M);
  for (std::size_t i = 0; i < M; ++i) {
    const int k = frequency(i, M);
    if (std::abs(k) <= d) data[i] = spectrum[i] * method.multiplier(n, k);
  }
  detail::fft(data, +1);
  return SampledFunction(std::move(data));
}

SampledFunction apply_means(const SummabilityMethod& method, int n, const SampledFunction& f) {
  return apply_means_spectrum(method, n, grid_spectrum(f));
}

double grid_norm(const SampledFunction& f, GridNorm norm) {
  if (!(norm.p > 0.0)) throw std::invalid_argument("grid_norm: p must be positive");
  if (norm.is_sup()) {
    double m = 0.0;
    for (const auto& v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (const auto& v : f.values()) s += std::pow(std::abs(v), norm.p);
  return std::pow(f.step() * s, 1.0 / norm.p);
}

SampledFunction spectral_derivative(const SampledFunction& f, int r) {
  if (r < 0) throw std::invalid_argument("spectral_derivative: negative order");
  auto spec = grid_spectrum(f);
  const std::size_t M = spec.size();
  for (std::size_t i = 0; i < M; ++i) {
    const int k = frequency(i, M);
    // The Nyquist mode has no consistent derivative on the grid.
    if (r > 0 && static_cast<std::size_t>(std::abs(k)) * 2 == M) {
      spec[i] = 0.0;
      continue;
    }
    spec[i] *= std::pow(cplx(0.0, k), r);
  }
  detail::fft(spec, +1);
  return SampledFunction(std::move(spec));
}

cplx interpolate(std::span<const cplx> spectrum, double x) {
  const std::size_t M = spectrum.size();
  cplx sum{};
  for (std::size_t i = 0; i < M; ++i) {
    int k = frequency(i, M);
    cplx c = spectrum[i] * sign_of_shift(k);
    if (static_cast<std::size_t>(std::abs(k)) * 2 == M) {
      // Split the Nyquist term symmetrically so real data interpolates to real values.
      sum += c * std::cos(k * x);
      continue;
    }
    sum += c * std::polar(1.0, k * x);
  }
  return sum;
}

std::vector<SummabilityMethod> method_catalog() {
  return {dirichlet(),    cesaro(1.0),   cesaro(0.5),    abel_poisson_family(),
          riesz(2.0, 1.0), riesz(1.0, 2.0), riesz(2.0, 0.5), rogosinski(),
          bernstein(),    vallee_poussin()};
}

SummabilityMethod method_by_name(std::string_view name) {
  const auto open = name.find('(');
  std::string_view base = name.substr(0, open);
  std::vector<double> args;
  if (open != std::string_view::npos) {
    if (name.back() != ')') throw not_found("unknown summability method: " + std::string(name));
    args = parse_args(name.substr(open + 1, name.size() - open - 2), name);
  }
  auto expect = [&](std::size_t count) {
    if (args.size() != count) throw not_found("unknown summability method: " + std::string(name));
  };
  if (base == "dirichlet") return expect(0), dirichlet();
  if (base == "fejer") return expect(0), cesaro(1.0);
  if (base == "cesaro") return expect(1), cesaro(args[0]);
  if (base == "abel-poisson") {
    if (args.empty()) return abel_poisson_family();
    return expect(1), abel_poisson_fixed(args[0]);
  }
  if (base == "riesz") return expect(2), riesz(args[0], args[1]);
  if (base == "bochner-riesz") return expect(1), riesz(2.0, args[0]);
  if (base == "rogosinski") return expect(0), rogosinski();
  if (base == "bernstein") return expect(0), bernstein();
  if (base == "vallee-poussin") return expect(0), vallee_poussin();
  throw not_found("unknown summability method: " + std::string(name));
}

ComparisonBand comparison_band(const SummabilityMethod& a, const SummabilityMethod& b,
                               std::span<const SampledFunction> fset, int nmax) {
  ComparisonBand band{1.0, 1.0};
  bool first = true;
  for (const auto& f : fset) {
    const auto spec = grid_spectrum(f);
    const double scale = std::max(grid_norm(f, GridNorm::sup()), 1e-300);
    for (int n = 1; n <= nmax; ++n) {
      const double ea = grid_norm(f - apply_means_spectrum(a, n, spec), GridNorm::sup());
      const double eb = grid_norm(f - apply_means_spectrum(b, n, spec), GridNorm::sup());
      const double zero = 1e-13 * scale;
      double ratio;
      if (ea <= zero && eb <= zero) {
        ratio = 1.0;
      } else if (eb <= zero) {
        ratio = std::numeric_limits<double>::infinity();
      } else {
        ratio = ea / eb;
      }
      if (first) {
        band = {ratio, ratio};
        first = false;
      } else {
        band.max_ratio = std::max(band.max_ratio, ratio);
        band.min_ratio = std::min(band.min_ratio, ratio);
      }
    }
  }
  return band;
}

double comparison_ratio(const SummabilityMethod& a, const SummabilityMethod& b,
                        std::span<const SampledFunction> fset, int nmax) {
  return comparison_band(a, b, fset, nmax).max_ratio;
}

}  // namespace xlab::trig
