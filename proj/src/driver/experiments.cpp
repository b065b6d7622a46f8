#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

#include "experiments.hpp"
#include "xlab/corpus.hpp"
#include "xlab/errors.hpp"
#include "xlab/ft_discrete.hpp"
#include "xlab/lebesgue.hpp"
#include "xlab/posdef.hpp"
#include "xlab/radial_profile.hpp"
#include "xlab/seq_spaces.hpp"
#include "xlab/smoothness.hpp"
#include "xlab/trig.hpp"
#include "xlab/walsh.hpp"

namespace xlab::driver::detail {

namespace {

constexpr double pi = std::numbers::pi;
const std::string ok = "ok";

Cell I(long long v) { return Cell{static_cast<std::int64_t>(v)}; }
Cell D(double v) { return Cell{v}; }
Cell S(std::string v) { return Cell{std::move(v)}; }
Cell B(bool v) { return Cell{v}; }

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (i + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double positive(const Params& p, const std::string& key) {
  const double v = p.get_double(key);
  if (!(v > 0.0) || !std::isfinite(v)) throw usage_error("parameter " + key + " must be a positive number");
  return v;
}

trig::SummabilityMethod method_param(const Params& p, const std::string& key) {
  try {
    return trig::method_by_name(p.get_string(key));
  } catch (const std::exception& e) {
    throw usage_error(e.what());
  }
}

std::vector<int> doubling(int nmin, int nmax) {
  std::vector<int> out;
  for (long long n = nmin; n <= nmax; n *= 2) out.push_back(static_cast<int>(n));
  return out;
}

// ---------------------------------------------------------------- lebesgue-lab

Table lebesgue_table(const Context& c) {
  const auto method = method_param(c.params, "method");
  const int nmin = c.params.get_int_in("nmin", 1, 4096);
  const int nmax = c.params.get_int_in("nmax", nmin, 4096);
  const double tol = positive(c.params, "tol");
  Table t{{"method", "n", "value", "quad_error", "log_excess", "status"}, {}};
  t.rows.resize(nmax - nmin + 1);
  parallel_for(t.rows.size(), c.threads, [&](std::size_t i) {
    const int n = nmin + static_cast<int>(i);
    try {
      const auto s = lebesgue::lebesgue_constant(method, n, tol);
      t.rows[i] = {S(method.name()), I(n), D(s.value), D(s.quad_error),
                   D(s.value - 4.0 / (pi * pi) * std::log(n)), S(ok)};
    } catch (const std::exception& e) {
      t.rows[i] = {S(method.name()), I(n), D(NAN), D(NAN), D(NAN), S(status_of(e))};
    }
  });
  return t;
}

Table kolmogorov_fit(const Context& c) {
  const int r = c.params.get_int_in("r", 1, 20);
  const int nmin = c.params.get_int_in("nmin", 1, 1 << 16);
  const int nmax = c.params.get_int_in("nmax", nmin, 1 << 16);
  const double tol = positive(c.params, "tol");
  const auto ns = lebesgue::geometric_grid(nmin, nmax);
  std::vector<double> dev(ns.size(), NAN);
  std::vector<std::string> status(ns.size(), ok);
  parallel_for(ns.size(), c.threads, [&](std::size_t i) {
    try {
      dev[i] = lebesgue::kolmogorov_deviation(r, ns[i], tol);
    } catch (const std::exception& e) {
      status[i] = status_of(e);
    }
  });
  std::vector<double> fx, fy;
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (status[i] == ok) fx.push_back(ns[i]), fy.push_back(dev[i]);
  double lead = NAN, constant = NAN, residual = NAN;
  if (fx.size() >= 2) {
    const auto fit = lebesgue::fit_log_over_power(fx, fy, r);
    lead = fit.params[0], constant = fit.params[1], residual = fit.residual;
  }
  Table t{{"r", "n", "deviation", "scaled", "fit_leading", "fit_constant", "fit_residual", "status"}, {}};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    std::string st = status[i];
    if (st == ok && i > 0 && status[i - 1] == ok && !(dev[i] < dev[i - 1])) st = "violation: not decreasing in n";
    t.rows.push_back({I(r), I(ns[i]), D(dev[i]), D(dev[i] * std::pow(ns[i], r) / std::log(ns[i])), D(lead),
                      D(constant), D(residual), S(st)});
  }
  return t;
}

Table hyperbolic_fit(const Context& c) {
  const double alpha = c.params.get_double("alpha");
  if (!(alpha >= 1.0) || !std::isfinite(alpha)) throw usage_error("parameter alpha must be >= 1");
  const int nmin = c.params.get_int_in("nmin", 1, 4096);
  const int nmax = c.params.get_int_in("nmax", nmin, 4096);
  const double band = positive(c.params, "band");
  const auto ns = lebesgue::geometric_grid(nmin, nmax);
  std::vector<lebesgue::LebesgueSample> samples(ns.size());
  std::vector<std::string> status(ns.size(), ok);
  parallel_for(ns.size(), c.threads, [&](std::size_t i) {
    try {
      samples[i] = lebesgue::hyperbolic_norm(alpha, ns[i]);
    } catch (const std::exception& e) {
      status[i] = status_of(e);
    }
  });
  std::vector<double> fx, fy;
  for (std::size_t i = 0; i < ns.size(); ++i)
    if (status[i] == ok) fx.push_back(ns[i]), fy.push_back(samples[i].value);
  const double slope = fx.size() >= 2 ? lebesgue::fit_power(fx, fy).params[1] : NAN;
  const double target = 1.0 / (2.0 + 2.0 * alpha);
  const bool within = std::fabs(slope - target) <= band;
  Table t{{"alpha", "n", "value", "quad_error", "slope", "target", "within_band", "status"}, {}};
  for (std::size_t i = 0; i < ns.size(); ++i)
    t.rows.push_back({D(alpha), I(ns[i]), D(status[i] == ok ? samples[i].value : NAN),
                      D(status[i] == ok ? samples[i].quad_error : NAN), D(slope), D(target), B(within),
                      S(status[i])});
  return t;
}

Table rhombic_table(const Context& c) {
  const int n1 = c.params.get_int_in("n1", 1, 64);
  const int kmax = c.params.get_int_in("kmax", 1, 1024 / n1);
  const double tol = positive(c.params, "tol");
  Table t{{"n1", "n2", "value", "quad_error", "status"}, {}};
  t.rows.resize(kmax);
  parallel_for(t.rows.size(), c.threads, [&](std::size_t i) {
    const int n2 = n1 * static_cast<int>(i + 1);
    try {
      const auto s = lebesgue::rhombic_lebesgue(n1, n2, tol);
      t.rows[i] = {I(n1), I(n2), D(s.value), D(s.quad_error), S(ok)};
    } catch (const std::exception& e) {
      t.rows[i] = {I(n1), I(n2), D(NAN), D(NAN), S(status_of(e))};
    }
  });
  return t;
}

// ---------------------------------------------------------------- seq-spaces

Table duality_fuzz(const Context& c) {
  const int maxlen = c.params.get_int_in("maxlen", 1, 8);
  const int entries = c.params.get_int_in("entries", 1, 3);
  const int trials = c.params.get_int_in("trials", 0, 100000);
  const double tol = positive(c.params, "tol");
  Table t{{"length", "sequences", "astar_max_gap", "cesaro_max_excess", "cesaro_monotone_max_gap", "status"}, {}};
  for (int len = 1; len <= maxlen; ++len) {
    const std::size_t base = 2 * entries + 1;
    std::size_t count = 1;
    for (int k = 0; k < len; ++k) count *= base;
    std::vector<double> astar(count), excess(count), mono(count, 0.0);
    std::vector<std::string> errors(count);
    parallel_for(count, c.threads, [&](std::size_t i) {
      std::vector<double> seq(len);
      std::size_t code = i;
      for (auto& v : seq) {
        v = static_cast<double>(static_cast<int>(code % base) - entries);
        code /= base;
      }
      try {
        const auto a = seq::duality_identity_astar(seq, trials, mix(c.seed, i));
        astar[i] = std::fabs(a.lhs - a.rhs);
        const auto ce = seq::duality_identity_cesaro(seq, trials, mix(c.seed, i));
        excess[i] = ce.lhs - ce.rhs;
        const bool monotone = std::is_sorted(seq.begin(), seq.end(),
                                             [](double x, double y) { return std::fabs(x) > std::fabs(y); });
        if (monotone) mono[i] = std::fabs(ce.lhs - ce.rhs);
      } catch (const std::exception& e) {
        errors[i] = status_of(e);
      }
    });
    const double gap = *std::max_element(astar.begin(), astar.end());
    const double exc = *std::max_element(excess.begin(), excess.end());
    const double mgap = *std::max_element(mono.begin(), mono.end());
    std::string st = ok;
    if (const auto bad = std::find_if(errors.begin(), errors.end(), [](const auto& s) { return !s.empty(); });
        bad != errors.end())
      st = *bad;
    else if (gap > tol)
      st = "violation: A* identity gap";
    else if (exc > tol)
      st = "violation: Cesaro lhs exceeds rhs";
    else if (mgap > tol)
      st = "violation: Cesaro identity gap for monotone |alpha|";
    t.rows.push_back({I(len), I(static_cast<long long>(count)), D(gap), D(exc), D(mgap), S(st)});
  }
  return t;
}

// ---------------------------------------------------------------- smoothness

Table moduli(const Context& c) {
  const int M = c.params.get_int_in("M", 64, 1 << 14);
  if (M % 8 != 0) throw usage_error("parameter M must be a multiple of 8");
  const int rmax = c.params.get_int_in("rmax", 1, 6);
  const double scale = positive(c.params, "scale");
  const double step = 2.0 * pi / M;
  const auto& names = corpus::standard();
  auto fs = corpus::sampled(M);
  for (auto& f : fs) f = f.scaled(scale);
  std::vector<int> steps;
  for (int J = 2; J <= M / 4; J *= 2) steps.push_back(J);
  const std::size_t tasks = fs.size() * rmax;
  std::vector<std::vector<std::vector<Cell>>> blocks(tasks);
  parallel_for(tasks, c.threads, [&](std::size_t task) {
    const auto& f = fs[task / rmax];
    const int r = static_cast<int>(task % rmax) + 1;
    const std::string& id = names[task / rmax].id;
    bool premise = true;
    int checked = 0;
    for (int J : steps) {
      for (; checked < J && premise; ++checked) {
        const double h = (checked + 1) * step;
        premise = smooth::modulus(f, {r, trig::GridNorm::sup(), h}) <= std::pow(h, r);
      }
      const double h = J * step;
      try {
        const double w = smooth::modulus(f, {r, trig::GridNorm::sup(), h});
        const double lin = smooth::linearized_modulus(f, {r, trig::GridNorm::sup(), h});
        const double w2 = smooth::modulus(f, {r, trig::GridNorm::sup(), 2 * h});
        std::string st = ok;
        if (lin > w + 1e-12)
          st = "violation: linearized exceeds modulus";
        else if (w2 > std::ldexp(w, r) + 1e-12)
          st = "violation: doubling";
        else if (premise && lin > std::pow(h, r) / (r + 1) * (1.0 + 1e-6))
          st = "violation: linearized power bound";
        blocks[task].push_back({S(id), I(r), I(J), D(h), D(w), D(lin), D(w2), B(premise), S(st)});
      } catch (const std::exception& e) {
        blocks[task].push_back({S(id), I(r), I(J), D(h), D(NAN), D(NAN), D(NAN), B(premise), S(status_of(e))});
      }
    }
  });
  Table t{{"f_id", "r", "steps", "h", "modulus", "linearized", "modulus_2h", "power_premise", "status"}, {}};
  for (auto& b : blocks)
    for (auto& row : b) t.rows.push_back(std::move(row));
  return t;
}

Table two_sided_report(const Context& c) {
  const int r = c.params.get_int_in("r", 1, 6);
  const int nmin = c.params.get_int_in("nmin", std::max(r, 1), 1 << 12);
  const int nmax = c.params.get_int_in("nmax", nmin, 1 << 12);
  const int M = c.params.get_int_in("M", 64, 1 << 16);
  const auto ns = doubling(nmin, nmax);
  for (int n : ns)
    if (M % (2 * n) != 0) throw usage_error("parameter M must be a multiple of 2n for every n in the grid");
  const auto& names = corpus::standard();
  const auto fs = corpus::sampled(M);
  Table t{{"f_id", "r", "n", "approx_error", "modulus", "ratio", "k_functional", "bernstein_lower",
           "bernstein_error", "bernstein_slack", "status"},
          {}};
  t.rows.resize(fs.size() * ns.size());
  parallel_for(t.rows.size(), c.threads, [&](std::size_t i) {
    const auto& f = fs[i / ns.size()];
    const int n = ns[i % ns.size()];
    const std::string& id = names[i / ns.size()].id;
    try {
      const auto j = smooth::jackson_two_sided(f, r, n);
      const double k = smooth::k_functional(f, 1.0 / n, r);
      const auto b = smooth::bernstein_lower_bound(f, n);
      t.rows[i] = {S(id), I(r), I(n), D(j.approx_error), D(j.modulus_value), D(j.ratio), D(k), D(b.lower),
                   D(b.error), D(b.slack), S(b.slack >= -1e-9 ? ok : "violation: sharp lower bound")};
    } catch (const std::exception& e) {
      t.rows[i] = {S(id), I(r), I(n), D(NAN), D(NAN), D(NAN), D(NAN), D(NAN), D(NAN), D(NAN), S(status_of(e))};
    }
  });
  return t;
}

// ---------------------------------------------------------------- posdef-splines

std::vector<posdef::Point> random_points(std::mt19937_64& rng, int m, int trial) {
  std::vector<posdef::Point> pts;
  if (trial % 2 == 0) {
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    std::uniform_int_distribution<int> count(2, 10);
    for (int k = count(rng); k > 0; --k) {
      posdef::Point p(m);
      for (auto& v : p) v = u(rng);
      pts.push_back(std::move(p));
    }
  } else {
    // equally spaced points on a line probe the sign of the 1-D transform
    std::uniform_real_distribution<double> spacing(0.1, 0.5);
    const double s = spacing(rng);
    for (int k = 0; k < 12; ++k) {
      posdef::Point p(m, 0.0);
      p[0] = k * s;
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

std::vector<RadialProfile> report_profiles() {
  return {RadialProfile::closed_form("gaussian", [](double t) { return std::exp(-t * t); }, INFINITY, 100),
          RadialProfile::closed_form("exponential", [](double t) { return std::exp(-t); }, INFINITY, 100),
          RadialProfile::closed_form("inverse-quadratic", [](double t) { return 1.0 / (1.0 + t * t); }, INFINITY,
                                     100),
          RadialProfile::closed_form("stretched-exp-2.5", [](double t) { return std::exp(-std::pow(t, 2.5)); },
                                     INFINITY, 2),
          RadialProfile::polynomial("hat", {1.0, -1.0}, 0),
          posdef::a_spline(2),
          posdef::a_spline(3),
          posdef::b_spline_profile(3)};
}

Table posdef_report(const Context& c) {
  const int mmax = c.params.get_int_in("mmax", 1, 3);
  const int trials = c.params.get_int_in("gram_trials", 1, 100000);
  const double rmax = positive(c.params, "rmax");
  const double step = positive(c.params, "step");
  if (rmax / step > 1e6) throw usage_error("rmax/step exceeds the evaluation budget");
  const auto profiles = report_profiles();
  Table t{{"profile", "m", "polya", "polya_order", "ft_min", "ft_argmin", "gram_min", "gram_scale", "evidence",
           "status"},
          {}};
  t.rows.resize(profiles.size() * mmax);
  parallel_for(t.rows.size(), c.threads, [&](std::size_t i) {
    const auto& prof = profiles[i / mmax];
    const int m = static_cast<int>(i % mmax) + 1;
    try {
      const auto polya = posdef::polya_test(prof, m);
      double ft_min = NAN, ft_arg = NAN, ft_tol = 0.0;
      if (std::isfinite(prof.support())) {
        const auto pos = posdef::radial_ft_positivity(prof, m, rmax, step);
        ft_min = pos.min_value, ft_arg = pos.argmin;
        // rounding level of the transform evaluation
        ft_tol = 1e-13 * std::max(1.0, std::fabs(ftd::radial_ft(prof, m, 0.0)));
      }
      std::mt19937_64 rng(mix(c.seed, i));
      double gram_min = INFINITY, gram_scale = 1.0, best = INFINITY;
      for (int k = 0; k < trials; ++k) {
        const auto pts = random_points(rng, m, k);
        const double e = posdef::gram_min_eig(posdef::GramSpec::radial(pts, [&prof](double r) { return prof(r); }));
        const double scale = static_cast<double>(pts.size()) * std::fabs(prof(0.0));
        if (e / scale < best) best = e / scale, gram_min = e, gram_scale = scale;
      }
      const bool witness = gram_min < -1e-6 * gram_scale;
      std::string evidence;
      if (polya.verdict == posdef::Verdict::certified)
        evidence = "sufficient-condition";
      else if (witness)
        evidence = "counterexample";
      else if (std::isfinite(ft_min) && ft_min >= -ft_tol)
        evidence = "transform-nonnegative-on-grid";
      else if (std::isfinite(ft_min))
        evidence = "transform-negative";
      else
        evidence = "gram-search-only";
      std::string st = ok;
      if (polya.verdict == posdef::Verdict::certified && gram_min < -1e-8 * gram_scale)
        st = "violation: certified profile has a negative Gram eigenvalue";
      t.rows[i] = {S(prof.name()), I(m), S(posdef::to_string(polya.verdict)), I(polya.order), D(ft_min), D(ft_arg),
                   D(gram_min), D(gram_scale), S(evidence), S(st)};
    } catch (const std::exception& e) {
      t.rows[i] = {S(prof.name()), I(m), S(""), I(0), D(NAN), D(NAN), D(NAN), D(NAN), S(""), S(status_of(e))};
    }
  });
  return t;
}

int inflections(const RadialProfile& a) {
  int changes = 0;
  double prev = a.derivative(2, 1e-6);
  for (int i = 1; i < 20000; ++i) {
    const double d2 = a.derivative(2, i / 20000.0);
    if (std::fabs(d2) > 1e-9 && std::fabs(prev) > 1e-9 && (d2 < 0) != (prev < 0)) ++changes;
    if (std::fabs(d2) > 1e-9) prev = d2;
  }
  return changes;
}

Table aspline(const Context& c) {
  const int nmin = c.params.get_int_in("nmin", 2, 6);
  const int nmax = c.params.get_int_in("nmax", nmin, 6);
  const int m = c.params.get_int_in("m", 1, 3);
  const double rmax = positive(c.params, "rmax");
  const double step = positive(c.params, "step");
  if (rmax / step > 1e6) throw usage_error("rmax/step exceeds the evaluation budget");
  Table t{{"n", "degree", "smoothness", "value_at_half", "contact_residual", "inflections", "ft_min", "ft_argmin",
           "coefficients", "status"},
          {}};
  t.rows.resize(nmax - nmin + 1);
  parallel_for(t.rows.size(), c.threads, [&](std::size_t i) {
    const int n = nmin + static_cast<int>(i);
    try {
      const auto a = posdef::a_spline(n);
      double contact = 0.0;
      for (int j = 0; j <= 2 * n - 2; ++j) contact = std::max(contact, std::fabs(a.derivative(j, 1.0)));
      const int infl = inflections(a);
      const auto pos = posdef::radial_ft_positivity(a, m, rmax, step);
      std::ostringstream coeffs;
      coeffs.imbue(std::locale::classic());
      for (std::size_t k = 0; k < a.coefficients().size(); ++k)
        coeffs << (k ? " " : "") << format_double(a.coefficients()[k]);
      std::string st = ok;
      if (contact > 1e-10)
        st = "violation: contact residual";
      else if (infl != 1)
        st = "violation: not bell shaped";
      else if (!(pos.min_value > 0.0))
        st = "violation: transform not positive";
      t.rows[i] = {I(n), I(a.degree()), I(a.smoothness()), D(a(0.5)), D(contact), I(infl), D(pos.min_value),
                   D(pos.argmin), S(coeffs.str()), S(st)};
    } catch (const std::exception& e) {
      t.rows[i] = {I(n), I(0), I(0), D(NAN), D(NAN), I(0), D(NAN), D(NAN), S(""), S(status_of(e))};
    }
  });
  return t;
}

Table schoenberg(const Context& c) {
  const int m = c.params.get_int_in("m", 1, 8);
  const double p = c.params.get_double("p");
  if (!(p >= 1.0)) throw usage_error("parameter p must be >= 1 or inf");
  const double alpha = c.params.get_double("alpha");
  const int trials = c.params.get_int_in("trials", 1, 1000000);
  Table t{{"m", "p", "alpha", "trials", "seed", "min_eig", "scale", "violation", "witness_points", "status"}, {}};
  try {
    const auto res = posdef::schoenberg_check(m, p, alpha, trials, c.seed, c.threads);
    const bool violation = res.min_eig_found < -1e-8 * res.scale;
    t.rows.push_back({I(m), D(p), D(alpha), I(res.trials), I(static_cast<long long>(res.seed)), D(res.min_eig_found),
                      D(res.scale), B(violation), I(static_cast<long long>(res.witness.size())), S(ok)});
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  } catch (const std::exception& e) {
    t.rows.push_back({I(m), D(p), D(alpha), I(trials), I(static_cast<long long>(c.seed)), D(NAN), D(NAN), B(false),
                      I(0), S(status_of(e))});
  }
  return t;
}

// ---------------------------------------------------------------- walsh-dyadic

Table walsh_regularity(const Context& c) {
  const double alpha = c.params.get_double("alpha");
  const double beta = c.params.get_double("beta");
  const double nu = c.params.get_double("nu");
  const int nmax = c.params.get_int_in("nmax", 2, 1 << 14);
  if ((nmax & (nmax - 1)) != 0) throw usage_error("parameter nmax must be a power of two");
  walsh::Regularity reg;
  try {
    reg = walsh::br_means_regularity(alpha, beta, nu, nmax);
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());
  }
  Table t{{"alpha", "beta", "nu", "n", "lc", "bounded", "status"}, {}};
  for (int n = 1; n <= nmax; ++n)
    t.rows.push_back({D(alpha), D(beta), D(nu), I(n), D(reg.lc_values[n - 1]), B(reg.bounded), S(ok)});
  return t;
}

Table walsh_moduli(const Context& c) {
  const int bits = c.params.get_int_in("bits", 4, 16);
  const double alpha = positive(c.params, "alpha");
  const auto corpus = walsh::dyadic_corpus();
  std::vector<std::vector<std::vector<Cell>>> blocks(corpus.size());
  parallel_for(corpus.size(), c.threads, [&](std::size_t fi) {
    const auto f = walsh::DyadicSignal::sample(corpus[fi].f, bits);
    const auto coeffs = walsh::fwt(f);
    for (int n = 0; n + 2 < bits; ++n) {
      const int N = (1 << n) + (1 << n) / 2 + 1;
      try {
        const auto s = walsh::cesaro_means(coeffs, N, alpha);
        std::vector<double> d(f.size());
        for (std::size_t j = 0; j < f.size(); ++j) d[j] = f[j] - s[j];
        const double err = walsh::sup_norm(d);
        const auto mn = walsh::walsh_moduli(f, n);
        const auto mn1 = walsh::walsh_moduli(f, n + 1);
        const double lower_den = mn.Omega + mn1.omega, upper_den = mn.Omega + mn.omega;
        std::string st = ok;
        if (err > 1e-12 && upper_den == 0.0) st = "violation: moduli vanish while the mean moves f";
        blocks[fi].push_back({S(corpus[fi].id), I(n), I(N), D(err), D(mn.Omega), D(mn.omega), D(mn1.omega),
                              D(lower_den > 0.0 ? err / lower_den : NAN),
                              D(upper_den > 0.0 ? err / upper_den : NAN), S(st)});
      } catch (const std::exception& e) {
        blocks[fi].push_back({S(corpus[fi].id), I(n), I(N), D(NAN), D(NAN), D(NAN), D(NAN), D(NAN), D(NAN),
                              S(status_of(e))});
      }
    }
  });
  Table t{{"f_id", "n", "N", "error", "Omega_n", "omega_n", "omega_n1", "lower_ratio", "upper_ratio", "status"}, {}};
  for (auto& b : blocks)
    for (auto& row : b) t.rows.push_back(std::move(row));
  return t;
}

// ---------------------------------------------------------------- ft-discrete

Table euler_maclaurin_check(const Context& c) {
  const int cases = c.params.get_int_in("cases", 1, 10000);
  const double xs[] = {pi / 2, -pi / 2, 1.0, -1.0, 3.0, -3.0};
  Table t{{"case", "family", "param", "n", "r", "x", "lhs_re", "lhs_im", "rhs_re", "rhs_im", "theta_abs",
           "variation", "status"},
          {}};
  t.rows.resize(cases);
  parallel_for(t.rows.size(), c.threads, [&](std::size_t i) {
    const double s = cases > 1 ? static_cast<double>(i) / (cases - 1) : 0.0;
    const bool expo = i % 2 == 0;
    const double param = expo ? 0.2 + 1.8 * s : 1.5 + 2.5 * s;
    const auto f = expo ? ftd::DecayingFunction::exponential(param) : ftd::DecayingFunction::inverse_power(param);
    const double x = xs[i % 6];
    const int r = static_cast<int>((i / 6) % 3);
    const int n = static_cast<int>(i % 4);
    std::vector<Cell> head{I(static_cast<long long>(i)), S(expo ? "exponential" : "inverse_power"), D(param), I(n),
                           I(r), D(x)};
    try {
      const auto res = ftd::euler_maclaurin_sum(f, n, r, x);
      const double th = std::abs(res.theta);
      for (auto v : {D(res.lhs.real()), D(res.lhs.imag()), D(res.rhs_main.real()), D(res.rhs_main.imag()), D(th),
                     D(res.variation), S(th <= 3.0 ? ok : "violation: |theta| > 3")})
        head.push_back(v);
    } catch (const std::exception& e) {
      for (int k = 0; k < 6; ++k) head.push_back(D(NAN));
      head.push_back(S(status_of(e)));
    }
    t.rows[i] = std::move(head);
  });
  return t;
}

ftd::ConvexBody2D body_param(const Params& p) {
  const std::string& kind = p.get_string("body");
  const double radius = positive(p, "radius");
  if (kind == "disc") return ftd::ConvexBody2D::disc(radius);
  if (kind == "ellipse") return ftd::ConvexBody2D::ellipse(positive(p, "a"), positive(p, "b"));
  if (kind == "square")
    return ftd::ConvexBody2D::polygon({{-radius, -radius}, {radius, -radius}, {radius, radius}, {-radius, radius}});
  if (kind == "hexagon") {
    std::vector<ftd::ConvexBody2D::Point> v;
    for (int k = 0; k < 6; ++k) v.push_back({radius * std::cos(k * pi / 3), radius * std::sin(k * pi / 3)});
    return ftd::ConvexBody2D::polygon(std::move(v));
  }
  throw usage_error("parameter body must be disc, ellipse, square or hexagon");
}

Table indicator_zeros(const Context& c) {
  const auto body = body_param(c.params);
  const int p = c.params.get_int_in("p", 1, 50);
  const int phis = c.params.get_int_in("phis", 1, 1 << 14);
  Table t{{"phi", "r_p", "d_phi", "product", "lower", "upper", "status"}, {}};
  t.rows.resize(phis);
  parallel_for(t.rows.size(), c.threads, [&](std::size_t i) {
    const double phi = 2.0 * pi * static_cast<double>(i) / phis;
    const double lo = 2.0 * p * pi, hi = 2.0 * (p + 1) * pi;
    try {
      const auto z = ftd::zero_curve(body, p, phi);
      const double prod = z.width * z.r;
      t.rows[i] = {D(phi), D(z.r), D(z.width), D(prod), D(lo), D(hi),
                   S(prod > lo && prod < hi ? ok : "violation: product outside band")};
    } catch (const std::exception& e) {
      t.rows[i] = {D(phi), D(NAN), D(body.width(phi)), D(NAN), D(lo), D(hi), S(status_of(e))};
    }
  });
  return t;
}

// ---------------------------------------------------------------- trig-core

Table comparison_ratio(const Context& c) {
  const auto a = method_param(c.params, "a");
  const auto b = method_param(c.params, "b");
  const int nmax = c.params.get_int_in("nmax", 1, 4096);
  const int M = c.params.get_int_in("M", 16, 1 << 16);
  if (M <= 4 * nmax) throw usage_error("parameter M must exceed 4 nmax");
  const auto fs = corpus::sampled(M);
  std::vector<std::vector<trig::cplx>> spectra;
  std::vector<double> scales;
  for (const auto& f : fs) {
    spectra.push_back(trig::grid_spectrum(f));
    scales.push_back(std::max(trig::grid_norm(f, trig::GridNorm::sup()), 1e-300));
  }
  Table t{{"a", "b", "n", "min_ratio", "max_ratio", "status"}, {}};
  t.rows.resize(nmax);
  parallel_for(t.rows.size(), c.threads, [&](std::size_t i) {
    const int n = static_cast<int>(i) + 1;
    double lo = INFINITY, hi = 0.0;
    try {
      for (std::size_t k = 0; k < fs.size(); ++k) {
        const double ea = trig::grid_norm(fs[k] - trig::apply_means_spectrum(a, n, spectra[k]), trig::GridNorm::sup());
        const double eb = trig::grid_norm(fs[k] - trig::apply_means_spectrum(b, n, spectra[k]), trig::GridNorm::sup());
        const double zero = 1e-13 * scales[k];
        const double ratio = (ea <= zero && eb <= zero) ? 1.0 : eb <= zero ? INFINITY : ea / eb;
        lo = std::min(lo, ratio), hi = std::max(hi, ratio);
      }
      t.rows[i] = {S(a.name()), S(b.name()), I(n), D(lo), D(hi),
                   S(std::isfinite(hi) && lo > 0.0 ? ok : "violation: unbounded ratio")};
    } catch (const std::exception& e) {
      t.rows[i] = {S(a.name()), S(b.name()), I(n), D(NAN), D(NAN), S(status_of(e))};
    }
  });
  return t;
}

}  // namespace

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"lebesgue-table", "Lebesgue constants of a summability method for n in [nmin, nmax]", "sec. 4, 4.10",
        {{"method", "dirichlet", "summability method name"},
         {"nmin", "1", "first degree"},
         {"nmax", "64", "last degree"},
         {"tol", "1e-9", "absolute quadrature tolerance"}}},
       lebesgue_table},
      {{"kolmogorov-fit", "Deviation of Fourier sums on W^r and the ln n / n^r fit", "4.1",
        {{"r", "1", "smoothness order"},
         {"nmin", "64", "first degree of the doubling grid"},
         {"nmax", "1024", "last degree"},
         {"tol", "1e-9", "quadrature tolerance"}}},
       kolmogorov_fit},
      {{"hyperbolic-fit", "Norms of hyperbolic-cross Dirichlet kernels and the log-log slope", "4.4a",
        {{"alpha", "1", "cross exponent (>= 1)"},
         {"nmin", "64", "first n of the doubling grid"},
         {"nmax", "4096", "last n"},
         {"band", "0.08", "allowed distance of the slope from 1/(2+2 alpha)"}}},
       hyperbolic_fit},
      {{"rhombic-table", "Lebesgue constants of rhombic partial sums", "4.3",
        {{"n1", "4", "first index"}, {"kmax", "4", "n2 runs over n1, 2 n1, ..., kmax n1"}, {"tol", "1e-8", "tolerance"}}},
       rhombic_table},
      {{"duality-fuzz", "Exhaustive check of the A* and Cesaro duality identities", "1.13, 2.16",
        {{"maxlen", "6", "longest sequence"},
         {"entries", "2", "entries range over -entries..entries"},
         {"trials", "16", "randomized confirmation trials per sequence"},
         {"tol", "1e-9", "identity tolerance"}}},
       duality_fuzz},
      {{"moduli", "Moduli, linearized moduli and doubling over the corpus", "5.1, 5.3",
        {{"M", "512", "grid size"}, {"rmax", "3", "largest order"}, {"scale", "0.2", "corpus amplitude"}}},
       moduli},
      {{"two-sided-report", "Approximation error vs modulus, K-functional and the sharp Bernstein-mean bound",
        "5.1, 5.10, 5.15",
        {{"r", "1", "modulus order"},
         {"nmin", "8", "first degree of the doubling grid"},
         {"nmax", "128", "last degree"},
         {"M", "4096", "grid size"}}},
       two_sided_report},
      {{"posdef-report", "Positive-definiteness evidence for radial profiles in dimensions 1..mmax",
        "7.1, 7.4, 7.5, 7.6",
        {{"mmax", "3", "largest dimension"},
         {"gram_trials", "200", "random point sets per profile and dimension"},
         {"rmax", "100", "radial transform grid end"},
         {"step", "0.05", "radial transform grid step"}}},
       posdef_report},
      {{"aspline", "Coefficients, contact, shape and transform positivity of A-splines", "7.6, 7.7",
        {{"nmin", "2", "first n"},
         {"nmax", "6", "last n"},
         {"m", "1", "transform dimension"},
         {"rmax", "200", "transform grid end"},
         {"step", "0.01", "transform grid step"}}},
       aspline},
      {{"schoenberg", "Seeded search for negative Gram eigenvalues of exp(-||x||_p^alpha)", "7.14",
        {{"m", "3", "dimension"}, {"p", "inf", "norm exponent"}, {"alpha", "1", "power"}, {"trials", "4000", "point sets"}}},
       schoenberg},
      {{"walsh-regularity", "Kernel norms of dyadic Bochner-Riesz type means", "8.2, 8.3",
        {{"alpha", "0.5", "alpha"}, {"beta", "0.5", "beta"}, {"nu", "1", "nu"}, {"nmax", "1024", "largest n"}}},
       walsh_regularity},
      {{"walsh-moduli", "Walsh-Cesaro approximation error against the dyadic moduli", "8.5, 8.6",
        {{"bits", "12", "log2 of the sample count"}, {"alpha", "1", "Cesaro order"}}},
       walsh_moduli},
      {{"euler-maclaurin-check", "Euler-Maclaurin formula for exponential sums, 50-case family", "1.3",
        {{"cases", "50", "number of cases"}}},
       euler_maclaurin_check},
      {{"indicator-zeros", "Zero curves of the Fourier transform of a convex body indicator", "1.12",
        {{"body", "disc", "disc, ellipse, square or hexagon"},
         {"p", "1", "zero index"},
         {"phis", "64", "directions"},
         {"radius", "1", "disc radius, square half-side, hexagon circumradius"},
         {"a", "2", "ellipse semi-axis along x"},
         {"b", "1", "ellipse semi-axis along y"}}},
       indicator_zeros},
      {{"comparison-ratio", "Per-degree ratio band of two summability methods over the corpus", "2.14",
        {{"a", "fejer", "first method"},
         {"b", "abel-poisson", "second method"},
         {"nmax", "256", "largest degree"},
         {"M", "2048", "grid size"}}},
       comparison_ratio},
  };
  return entries;
}

}  // namespace xlab::driver::detail
