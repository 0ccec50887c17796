#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "modspace/corpus.hpp"
#include "modspace/error.hpp"
#include "modspace/grid.hpp"

using namespace modspace;

namespace {

double gauss(double x) { return std::exp(-0.5 * x * x); }

}  // namespace

TEST(Grid, RejectsBadSizes) {
  EXPECT_THROW(Grid(6, 1.0), InputError);
  EXPECT_THROW(Grid(12, 1.0), InputError);
  EXPECT_THROW(Grid(16, 0.0), InputError);
  EXPECT_THROW(Grid(16, kInf), InputError);
}

TEST(Grid, SpacingIdentity) {
  for (std::size_t n : {8u, 64u, 4096u}) {
    for (double L : {0.5, 20.0, 40.0}) {
      const Grid g(n, L);
      EXPECT_NEAR(g.dx() * g.dxi() * static_cast<double>(n), 2.0 * kPi, 1e-12);
    }
  }
}

TEST(SampledSignal, RejectsNonFinite) {
  const Grid g(8, 1.0);
  std::vector<cplx> v(8);
  v[3] = cplx(std::nan(""), 0.0);
  EXPECT_THROW(SampledSignal(g, v), InputError);
  EXPECT_THROW(SampledSignal(g, std::vector<cplx>(7)), InputError);
}

TEST(Fourier, GaussianPair) {
  const Grid g(4096, 20.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(gauss(x)); });
  const auto fh = fourier_forward(f);
  double err = 0.0;
  for (std::size_t m = 0; m < g.n(); ++m) {
    err = std::max(err, std::abs(fh[m] - std::sqrt(2 * kPi) * gauss(g.xi(m))));
  }
  EXPECT_LE(err, 1e-8);
  const auto back = fourier_inverse(fh);
  double err2 = 0.0;
  for (std::size_t j = 0; j < g.n(); ++j) err2 = std::max(err2, std::abs(back[j] - f[j]));
  EXPECT_LE(err2, 1e-12);
}

TEST(Fourier, ModulatedGaussian) {
  const Grid g(4096, 20.0);
  const auto f =
      SampledSignal::from_function(g, [](double x) { return cplx(gauss(x) * std::cos(3 * x)); });
  const auto fh = fourier_forward(f);
  double err = 0.0;
  for (std::size_t m = 0; m < g.n(); ++m) {
    const double xi = g.xi(m);
    const double want = std::sqrt(2 * kPi) / 2 * (gauss(xi - 3) + gauss(xi + 3));
    err = std::max(err, std::abs(fh[m] - want));
  }
  EXPECT_LE(err, 1e-8);
}

TEST(Fourier, ZeroAndLinearity) {
  const Grid g(256, 10.0);
  EXPECT_TRUE(fourier_forward(SampledSignal::zeros(g)).is_zero());
  const auto h = fourier_forward(random_smooth_signal(g, 3));
  const cplx a(0.5, -2.0);
  const auto lhs = fourier_inverse(h.scaled(a));
  const auto rhs = fourier_inverse(h).scaled(a);
  for (std::size_t j = 0; j < g.n(); ++j) EXPECT_NEAR(std::abs(lhs[j] - rhs[j]), 0.0, 1e-15);
}

TEST(Fourier, InverseOfGaussianSpectrum) {
  const Grid g(4096, 20.0);
  const auto h = SampledSignal::from_function(
      g, [](double xi) { return cplx(std::sqrt(2 * kPi) * gauss(xi)); }, Domain::Frequency);
  const auto f = fourier_inverse(h);
  for (std::size_t j = 0; j < g.n(); j += 17) EXPECT_NEAR(std::abs(f[j] - gauss(g.x(j))), 0, 1e-10);
}

TEST(Fourier, DomainChecks) {
  const Grid g(64, 4.0);
  const auto f = SampledSignal::zeros(g);
  EXPECT_THROW(fourier_inverse(f), StructuralError);
  EXPECT_THROW(fourier_forward(fourier_forward(f)), StructuralError);
}

// Band-limited round trip: random spectrum on the inner 80% of the grid.
TEST(Fourier, RoundTripBandLimited) {
  const Grid g(4096, 40.0);
  std::mt19937_64 gen(11);
  std::vector<cplx> spec(g.n());
  for (std::size_t m = 0; m < g.n(); ++m) {
    if (std::abs(g.freq_index(m)) < static_cast<std::ptrdiff_t>(0.4 * g.n())) {
      spec[m] = cplx(uniform_from_bits(gen(), -1, 1), uniform_from_bits(gen(), -1, 1));
    }
  }
  const auto f = fourier_inverse(SampledSignal(g, spec, Domain::Frequency));
  const auto back = fourier_inverse(fourier_forward(f));
  double err = 0.0;
  for (std::size_t j = 0; j < g.n(); ++j) err = std::max(err, std::abs(back[j] - f[j]));
  EXPECT_LE(err, 1e-10 * f.sup_abs());
}

TEST(Convolution, GaussianIdentity) {
  const Grid g(4096, 40.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(std::exp(-x * x)); });
  const auto c = convolve(f, f);
  for (std::size_t j = 0; j < g.n(); j += 13) {
    const double x = g.x(j);
    EXPECT_NEAR(std::abs(c[j] - std::sqrt(kPi / 2) * std::exp(-x * x / 2)), 0.0, 1e-12);
  }
  EXPECT_TRUE(convolve(f, SampledSignal::zeros(g)).is_zero() ||
              convolve(f, SampledSignal::zeros(g)).sup_abs() == 0.0);
}

TEST(Convolution, TransformTheorem) {
  const Grid g(1024, 30.0);
  const auto f = random_smooth_signal(g, 1);
  const auto h = random_smooth_signal(g, 2);
  const auto lhs = fourier_forward(convolve(f, h));
  const auto fh = fourier_forward(f);
  const auto hh = fourier_forward(h);
  const auto rhs = fh * hh;
  double err = 0.0;
  for (std::size_t m = 0; m < g.n(); ++m) err = std::max(err, std::abs(lhs[m] - rhs[m]));
  EXPECT_LE(err, 1e-8 * fh.sup_abs() * hh.sup_abs());
}

TEST(Convolution, GridMismatch) {
  EXPECT_THROW(convolve(SampledSignal::zeros(Grid(64, 1.0)), SampledSignal::zeros(Grid(64, 2.0))),
               StructuralError);
}

TEST(Norms, GaussianL2) {
  const Grid g(4096, 40.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(gauss(x)); });
  EXPECT_NEAR(weighted_lp_norm(f, 2.0), std::pow(kPi, 0.25), 1e-12);
  EXPECT_EQ(weighted_lp_norm(SampledSignal::zeros(g), 3.0, 1.0), 0.0);
  EXPECT_NEAR(weighted_lp_norm(f, kInf), 1.0, 1e-15);
}

// L^1_1 of the Gaussian against a Richardson-extrapolated trapezoid oracle at
// four times the resolution.
TEST(Norms, WeightedL1AgainstRefinedQuadrature) {
  const auto integrand = [](double x) { return std::sqrt(1 + x * x) * gauss(x); };
  const auto trap = [&](int n) {
    const double a = -40, b = 40, h = (b - a) / n;
    double s = 0.5 * (integrand(a) + integrand(b));
    for (int i = 1; i < n; ++i) s += integrand(a + i * h);
    return s * h;
  };
  const double T1 = trap(8192), T2 = trap(16384);
  const double oracle = (4 * T2 - T1) / 3;
  const Grid g(4096, 40.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(gauss(x)); });
  EXPECT_NEAR(weighted_lp_norm(f, 1.0, 1.0) / oracle, 1.0, 1e-6);
}

TEST(Norms, Axioms) {
  const Grid g(512, 20.0);
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto f = random_smooth_signal(g, 100 + seed);
    const auto h = random_smooth_signal(g, 200 + seed);
    for (double p : {1.0, 1.5, 2.0, 3.0, kInf}) {
      for (double s : {0.0, 0.5, 2.0}) {
        const double nf = weighted_lp_norm(f, p, s);
        EXPECT_NEAR(weighted_lp_norm(f.scaled(-2.5), p, s), 2.5 * nf, 1e-12 * nf);
        EXPECT_LE(weighted_lp_norm(f + h, p, s),
                  nf + weighted_lp_norm(h, p, s) + 1e-12 * nf);
      }
    }
  }
  EXPECT_THROW(weighted_lp_norm(SampledSignal::zeros(g), 0.5), InputError);
}

TEST(InnerProduct, ParsevalAndParity) {
  const Grid g(2048, 30.0);
  const auto f = random_smooth_signal(g, 5);
  const auto h = random_smooth_signal(g, 6);
  const cplx lhs = inner_product(f, h);
  const cplx rhs = inner_product(fourier_forward(f), fourier_forward(h)) / (2 * kPi);
  EXPECT_LE(std::abs(lhs - rhs), 1e-8 * weighted_lp_norm(f, 2) * weighted_lp_norm(h, 2));
  EXPECT_GE(inner_product(f, f).real(), 0.0);
  const auto e = SampledSignal::from_function(g, [](double x) { return cplx(gauss(x)); });
  const auto o = SampledSignal::from_function(g, [](double x) { return cplx(x * gauss(x)); });
  EXPECT_NEAR(std::abs(inner_product(e, o)), 0.0, 1e-14);
}

TEST(BandLimited, ReproducesNodesAndSmoothValues) {
  const Grid g(1024, 20.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(gauss(x)); });
  EXPECT_EQ(band_limited_eval(f, g.x(300)), f[300]);
  for (double y : {0.0137, -1.3, 2.71828, 5.5}) {
    EXPECT_NEAR(std::abs(band_limited_eval(f, y) - gauss(y)), 0.0, 1e-12);
  }
}

TEST(BandLimited, ProgressionMatchesPointwise) {
  const Grid g(2048, 40.0);
  const auto f = SampledSignal::from_function(
      g, [](double x) { return cplx(gauss(x - 1.0), std::sin(3 * x) * gauss(x / 2)); });
  const double start = -2.3456;
  const double step = 0.0123;
  const std::size_t count = 300;
  const auto fast = band_limited_eval_progression(f, start, step, count);
  std::vector<double> pts(count);
  for (std::size_t k = 0; k < count; ++k) pts[k] = start + static_cast<double>(k) * step;
  const auto slow = band_limited_eval(f, pts);
  for (std::size_t k = 0; k < count; ++k) EXPECT_NEAR(std::abs(fast[k] - slow[k]), 0.0, 1e-12);
  const auto on_nodes = band_limited_eval_progression(f, g.x(100), g.dx(), 5);
  EXPECT_EQ(on_nodes[3], f[103]);
}

TEST(Leakage, OuterMass) {
  const Grid g(1024, 20.0);
  const auto in = SampledSignal::from_function(g, [](double x) { return cplx(gauss(x)); });
  EXPECT_LT(outer_mass_fraction(in), 1e-30);
  const auto wide = SampledSignal::from_function(g, [](double x) { return cplx(gauss(x / 15)); });
  EXPECT_GT(outer_mass_fraction(wide), 1e-6);
}
