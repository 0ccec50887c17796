#include <gtest/gtest.h>

#include <cmath>

#include "modspace/corpus.hpp"
#include "modspace/error.hpp"
#include "modspace/stft.hpp"

using namespace modspace;

namespace {

double gauss(double x) { return std::exp(-0.5 * x * x); }

// Direct Riemann sum of \int f(t) conj(phi(t - x)) e^{-i t xi} dt.
cplx direct_stft(const SampledSignal& f, const SampledSignal& phi, std::size_t j, std::size_t m) {
  const Grid& g = f.grid();
  const std::size_t n = g.n();
  cplx acc{};
  for (std::size_t l = 0; l < n; ++l) {
    const std::size_t idx = (l + n - j + n / 2) % n;  // node of t_l - x_j
    acc += f[l] * std::conj(phi[idx]) * std::polar(1.0, -g.x(l) * g.xi(m));
  }
  return acc * g.dx();
}

}  // namespace

TEST(Stft, GaussianClosedForm) {
  const Grid g(256, 12.0);
  const auto f = gaussian_window(g);
  const auto V = stft(f, f);
  double err = 0.0;
  for (std::size_t j = 0; j < g.n(); j += 3) {
    for (std::size_t m = 0; m < g.n(); m += 5) {
      const double x = g.x(j), xi = g.xi(m);
      const cplx want =
          std::sqrt(kPi) * std::polar(1.0, -x * xi / 2) * std::exp(-(x * x + xi * xi) / 4);
      if (std::abs(x) < 6) err = std::max(err, std::abs(V(j, m) - want));
    }
  }
  EXPECT_LE(err, 1e-10);
}

TEST(Stft, MatchesDirectSum) {
  const Grid g(128, 10.0);
  const auto f = random_smooth_signal(g, 9);
  const auto phi = random_smooth_signal(g, 10);
  const auto V = stft(f, phi);
  for (std::size_t j : {0u, 17u, 64u, 127u}) {
    for (std::size_t m : {0u, 5u, 64u, 100u}) {
      EXPECT_NEAR(std::abs(V(j, m) - direct_stft(f, phi, j, m)), 0.0, 1e-12);
    }
  }
}

TEST(Stft, ZeroSignalAndZeroWindow) {
  const Grid g(64, 8.0);
  const auto V = stft(SampledSignal::zeros(g), gaussian_window(g));
  for (std::size_t m = 0; m < g.n(); ++m)
    for (const auto& z : V.row(m)) EXPECT_EQ(std::abs(z), 0.0);
  EXPECT_THROW(stft(gaussian_window(g), SampledSignal::zeros(g)), InputError);
}

TEST(Stft, SizeGate) {
  const Grid g(8192, 40.0);
  EXPECT_THROW(stft(gaussian_window(g), gaussian_window(g)), BudgetError);
}

TEST(Stft, ModulationCovariance) {
  const Grid g(256, 16.0);
  const auto f = random_smooth_signal(g, 4);
  const auto phi = gaussian_window(g);
  const std::ptrdiff_t shift = 7;  // eta = 7 dxi
  const double eta = shift * g.dxi();
  const auto mf = f.mapped([eta](double x, cplx v) { return v * std::polar(1.0, eta * x); });
  const auto V = stft(f, phi);
  const auto W = stft(mf, phi);
  double err = 0.0;
  for (std::size_t m = shift; m < g.n(); ++m) {
    for (std::size_t j = 0; j < g.n(); ++j) {
      err = std::max(err, std::abs(std::abs(W(j, m)) - std::abs(V(j, m - shift))));
    }
  }
  EXPECT_LE(err, 1e-8);
}

TEST(Stft, TranslationCovariance) {
  const Grid g(256, 16.0);
  const auto f = random_smooth_signal(g, 8);
  const auto phi = gaussian_window(g);
  const std::size_t shift = 11;
  std::vector<cplx> v(g.n());
  for (std::size_t j = 0; j < g.n(); ++j) v[(j + shift) % g.n()] = f[j];
  const SampledSignal tf(g, v);
  const auto V = stft(f, phi);
  const auto W = stft(tf, phi);
  double err = 0.0;
  for (std::size_t m = 0; m < g.n(); ++m) {
    for (std::size_t j = shift; j < g.n(); ++j) {
      err = std::max(err, std::abs(std::abs(W(j, m)) - std::abs(V(j - shift, m))));
    }
  }
  EXPECT_LE(err, 1e-8);
}

TEST(Moyal, GaussianAndOrthogonalPairs) {
  const Grid g(512, 20.0);
  const auto gs = gaussian_window(g);
  EXPECT_LE(moyal_residual(gs, gs, gs, gs), 1e-6);
  const auto odd = SampledSignal::from_function(g, [](double x) { return cplx(x * gauss(x)); });
  EXPECT_LE(moyal_residual(gs, odd, gs, gs), 1e-6);
}

TEST(Moyal, ScalingLeavesResidualUnchanged) {
  const Grid g(256, 16.0);
  const auto f = random_smooth_signal(g, 1);
  const auto h = random_smooth_signal(g, 2);
  const auto phi = gaussian_window(g);
  const auto psi = random_smooth_signal(g, 3);
  const double r1 = moyal_residual(f, h, phi, psi);
  const double r2 = moyal_residual(f.scaled(2.0), h, phi, psi);
  EXPECT_LE(r1, 1e-6);
  EXPECT_NEAR(r1, r2, 1e-12);
}

TEST(IdentityRatio, ConstantAcrossCorpus) {
  const Grid g(512, 30.0);
  const auto phi = gaussian_window(g);
  const double want = std::sqrt(2 * kPi) * std::pow(kPi, 0.25);
  double lo = kInf, hi = 0.0;
  for (const auto& e : standard_corpus(g)) {
    const double r = stft_l2_identity_ratio(e.signal, phi);
    EXPECT_NEAR(r / want, 1.0, 1e-6) << e.name;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  EXPECT_LE((hi - lo) / want, 1e-6);
  const auto f = random_smooth_signal(g, 0);
  EXPECT_NEAR(stft_l2_identity_ratio(f, phi.scaled(3.0)), 3 * stft_l2_identity_ratio(f, phi),
              1e-10);
  EXPECT_THROW(stft_l2_identity_ratio(SampledSignal::zeros(g), phi), InputError);
}
