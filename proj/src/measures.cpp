#include "modspace/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modspace/error.hpp"

namespace modspace {

namespace {

bool atom_less(const Atom& a, const Atom& b) {
  if (a.x != b.x) return a.x < b.x;
  if (a.w.real() != b.w.real()) return a.w.real() < b.w.real();
  return a.w.imag() < b.w.imag();
}

// Sorts contributions into a canonical order before summing duplicates, so
// the result does not depend on the order the contributions were produced in.
std::vector<Atom> normalise(std::vector<Atom> atoms) {
  for (const auto& a : atoms) {
    if (!std::isfinite(a.x) || !std::isfinite(a.w.real()) || !std::isfinite(a.w.imag())) {
      throw InputError("measure atoms must be finite");
    }
  }
  std::sort(atoms.begin(), atoms.end(), atom_less);
  std::vector<Atom> out;
  out.reserve(atoms.size());
  for (const auto& a : atoms) {
    if (!out.empty() && out.back().x == a.x) {
      out.back().w += a.w;
    } else {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) : atoms_(normalise(std::move(atoms))) {}

double DiscreteMeasure::total_variation() const {
  double s = 0.0;
  for (const auto& a : atoms_) s += std::abs(a.w);
  return s;
}

DiscreteMeasure DiscreteMeasure::scaled(cplx a) const {
  std::vector<Atom> v(atoms_);
  for (auto& at : v) at.w *= a;
  return DiscreteMeasure(std::move(v));
}

DiscreteMeasure DiscreteMeasure::translated(double a) const {
  std::vector<Atom> v(atoms_);
  for (auto& at : v) at.x += a;
  return DiscreteMeasure(std::move(v));
}

Json DiscreteMeasure::to_json() const {
  Json j;
  j["atoms"] = Json::array();
  for (const auto& a : atoms_) {
    Json e;
    e["x"] = a.x;
    e["re"] = a.w.real();
    e["im"] = a.w.imag();
    j["atoms"].push_back(std::move(e));
  }
  return j;
}

DiscreteMeasure DiscreteMeasure::from_json(const Json& j) {
  std::vector<Atom> atoms;
  for (const auto& e : j.at("atoms")) {
    atoms.push_back({e.at("x").get<double>(), cplx(e.at("re").get<double>(), e.at("im").get<double>())});
  }
  return DiscreteMeasure(std::move(atoms));
}

bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  return std::equal(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(), b.atoms_.end(),
                    [](const Atom& u, const Atom& v) { return u.x == v.x && u.w == v.w; });
}

DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  std::vector<Atom> v(a.atoms().begin(), a.atoms().end());
  v.insert(v.end(), b.atoms().begin(), b.atoms().end());
  return DiscreteMeasure(std::move(v));
}

DiscreteMeasure operator-(const DiscreteMeasure& a, const DiscreteMeasure& b) {
  return a + b.scaled(-1.0);
}

DiscreteMeasure dirac(double a) { return DiscreteMeasure({Atom{a, cplx(1.0, 0.0)}}); }

DiscreteMeasure convolve_measures(const DiscreteMeasure& mu, const DiscreteMeasure& nu) {
  const double count = static_cast<double>(mu.size()) * static_cast<double>(nu.size());
  if (count > static_cast<double>(kMaxConvolutionAtoms)) {
    throw BudgetError("measure convolution would create " + format_double(count) +
                      " atom pairs, limit is " + std::to_string(kMaxConvolutionAtoms));
  }
  std::vector<Atom> v;
  v.reserve(mu.size() * nu.size());
  for (const auto& a : mu.atoms()) {
    for (const auto& b : nu.atoms()) v.push_back({a.x + b.x, a.w * b.w});
  }
  return DiscreteMeasure(std::move(v));
}

std::vector<cplx> fourier_stieltjes(const DiscreteMeasure& mu, std::span<const double> xis) {
  constexpr long double two_pi = 6.283185307179586476925286766559005768L;
  std::vector<cplx> out(xis.size());
  for (std::size_t i = 0; i < xis.size(); ++i) {
    const long double xi = xis[i];
    cplx acc{};
    for (const auto& a : mu.atoms()) {
      // Large x * xi loses the phase in double; reduce first.
      long double t = std::fmod(static_cast<long double>(a.x) * xi, two_pi);
      const double th = static_cast<double>(t);
      acc += a.w * cplx(std::cos(th), -std::sin(th));
    }
    out[i] = acc;
  }
  return out;
}

std::vector<cplx> fourier_stieltjes_progression(const DiscreteMeasure& mu, double xi0, double step,
                                                std::size_t count) {
  constexpr long double two_pi = 6.283185307179586476925286766559005768L;
  constexpr std::size_t kReseed = 256;
  std::vector<double> re(count, 0.0);
  std::vector<double> im(count, 0.0);
  for (const auto& a : mu.atoms()) {
    const long double x = a.x;
    const auto rot = static_cast<double>(std::fmod(x * static_cast<long double>(step), two_pi));
    const double rc = std::cos(rot);
    const double rs = -std::sin(rot);
    const double wr = a.w.real();
    const double wi = a.w.imag();
    double pr = 0.0;
    double pi = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      if (i % kReseed == 0) {
        const long double xi = static_cast<long double>(xi0) + static_cast<long double>(i) * step;
        const auto th = static_cast<double>(std::fmod(x * xi, two_pi));
        // w e^{-i x xi}
        const double c = std::cos(th);
        const double s = -std::sin(th);
        pr = wr * c - wi * s;
        pi = wr * s + wi * c;
      }
      re[i] += pr;
      im[i] += pi;
      const double t = pr * rc - pi * rs;
      pi = pr * rs + pi * rc;
      pr = t;
    }
  }
  std::vector<cplx> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = cplx(re[i], im[i]);
  return out;
}

RudinShapiroPair rudin_shapiro(int m, long long N, RsNormalization normalization, double p) {
  if (m < 0 || m > 24) throw InputError("Rudin-Shapiro depth must lie in [0, 24]");
  if (N < 1) throw InputError("Rudin-Shapiro spacing must be a positive integer");
  if (normalization == RsNormalization::LpAtoms && !(p >= 1.0 && std::isfinite(p))) {
    throw InputError("LpAtoms normalization needs finite p >= 1");
  }
  // Both measures share the support {sum alpha_j N 2^{j-1}} = N * {0..2^m-1},
  // so the recursion runs on dense sign arrays indexed by location / N.
  std::vector<double> mu{1.0};
  std::vector<double> nu{1.0};
  for (int j = 1; j <= m; ++j) {
    const std::size_t half = mu.size();
    std::vector<double> mu2(2 * half);
    std::vector<double> nu2(2 * half);
    for (std::size_t i = 0; i < half; ++i) {
      mu2[i] = mu[i];
      nu2[i] = mu[i];
      mu2[half + i] = nu[i];
      nu2[half + i] = -nu[i];
    }
    mu.swap(mu2);
    nu.swap(nu2);
  }
  double scale = 1.0;
  if (normalization == RsNormalization::TotalVariation) scale = std::ldexp(1.0, -m);
  if (normalization == RsNormalization::LpAtoms) scale = std::exp2(-static_cast<double>(m) / p);
  std::vector<Atom> a;
  std::vector<Atom> b;
  a.reserve(mu.size());
  b.reserve(nu.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    const double x = static_cast<double>(N) * static_cast<double>(i);
    a.push_back({x, cplx(scale * mu[i], 0.0)});
    b.push_back({x, cplx(scale * nu[i], 0.0)});
  }
  RudinShapiroPair out;
  out.mu = DiscreteMeasure(std::move(a));
  out.nu = DiscreteMeasure(std::move(b));
  out.m = m;
  out.N = N;
  out.normalization = normalization;
  out.p = p;
  return out;
}

long long disjointness_spacing(double K_halfwidth, int m) {
  if (!(K_halfwidth > 0.0) || !std::isfinite(K_halfwidth)) {
    throw InputError("disjointness half-width must be positive and finite");
  }
  if (m < 0) throw InputError("depth must be nonnegative");
  // Support points differ by multiples of N; disjoint closed intervals of
  // length 2K need N > 2K.
  return static_cast<long long>(std::floor(2.0 * K_halfwidth)) + 1;
}

SampledSignal measure_signal_convolve(const DiscreteMeasure& mu, const SampledSignal& f) {
  const std::size_t n = f.size();
  const double h = f.spacing();
  const double peak = f.sup_abs();
  std::vector<cplx> out(n);
  for (const auto& a : mu.atoms()) {
    const double t = a.x / h;
    const double shift = std::round(t);
    if (std::abs(t - shift) > 1e-9 * std::max(1.0, std::abs(t))) {
      throw InputError("atom at " + format_double(a.x) + " is not aligned with the grid");
    }
    const auto s = static_cast<std::ptrdiff_t>(shift);
    for (std::size_t j = 0; j < n; ++j) {
      const std::ptrdiff_t dst = static_cast<std::ptrdiff_t>(j) + s;
      if (dst < 0 || dst >= static_cast<std::ptrdiff_t>(n)) {
        if (std::abs(f[j]) > 1e-12 * peak) {
          throw BudgetError("translate by " + format_double(a.x) + " leaves the domain");
        }
        continue;
      }
      out[static_cast<std::size_t>(dst)] += a.w * f[j];
    }
  }
  return SampledSignal(f.grid(), std::move(out), f.domain());
}

}  // namespace modspace
