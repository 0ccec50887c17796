#include <gtest/gtest.h>

#include <cmath>

#include "modspace/corpus.hpp"
#include "modspace/error.hpp"
#include "modspace/power_series.hpp"
#include "modspace/wiener_levy.hpp"

using namespace modspace;

namespace {

double gauss(double x) { return std::exp(-0.5 * x * x); }

SampledSignal gaussian(const Grid& g) {
  return SampledSignal::from_function(g, [](double x) { return cplx(gauss(x)); });
}

}  // namespace

TEST(PowerSeries, TailBoundsAreRigorous) {
  for (const auto& F : {reciprocal_function(), mobius_function(), expm1_function()}) {
    const cplx z0(1.5, 0.25);
    const auto P = F.expand(z0);
    for (double t : {0.1, 0.5, 1.0}) {
      const cplx w = t * std::polar(1.0, 0.7);
      if (std::abs(w) >= P.bound_radius(std::abs(w))) continue;
      const int J = P.truncation_for(std::abs(w));
      EXPECT_LT(P.tail_bound(std::abs(w), J), 1e-8);
      EXPECT_LE(std::abs(P.evaluate(w, J) - F.eval(z0 + w)), P.tail_bound(std::abs(w), J) + 1e-14)
          << F.name;
    }
  }
}

TEST(PowerSeries, PolynomialsAreExact) {
  const auto P = square_function().expand(cplx(2.0));
  EXPECT_EQ(P.truncation_for(100.0), 2);
  EXPECT_EQ(P.tail_bound(100.0, 2), 0.0);
  EXPECT_EQ(P.evaluate(cplx(0.5), 2), cplx(6.25));
  EXPECT_THROW(reciprocal_function().expand(cplx(1.0)).truncation_for(1.5), BudgetError);
  EXPECT_THROW(reciprocal_function().expand(cplx(0.0)), InputError);
  EXPECT_THROW(analytic_function_by_name("sqrt"), InputError);
}

TEST(Plateau, ProfileValues) {
  const PlateauProfile psi(1.0);
  EXPECT_EQ(psi(0.0), 1.0);
  EXPECT_EQ(psi(1.0), 1.0);
  EXPECT_EQ(psi(5.0), 0.0);
  for (double u : {1.5, 2.5, 3.7, 4.9}) {
    EXPECT_GE(psi(u), 0.0);
    EXPECT_LE(psi(u), 1.0);
    EXPECT_EQ(psi(u), psi(-u));
  }
}

class PlateauMatrix : public ::testing::TestWithParam<std::pair<double, double>> {};

TEST_P(PlateauMatrix, WindowInvariants) {
  const auto [t0, R] = GetParam();
  const Grid g(4096, 40.0);
  const auto w = plateau_window(t0, R, g);
  const auto conv = convolve(w.psi1, w.psi2);
  for (std::size_t j = 0; j < g.n(); ++j) {
    const double x = g.x(j);
    EXPECT_NEAR(std::abs(w.psi[j] - conv[j]), 0.0, 1e-8);
    if (std::abs(x - t0) <= R) EXPECT_NEAR(w.psi[j].real(), 1.0, 1e-6) << x;
    if (std::abs(x - t0) >= 5 * R + g.dx()) EXPECT_LE(std::abs(w.psi[j]), 1e-10) << x;
    EXPECT_GE(w.psi[j].real(), -1e-10);
  }
  const auto integral = [&](const SampledSignal& s) {
    cplx acc{};
    for (const auto& v : s.samples()) acc += v;
    return acc.real() * g.dx();
  };
  EXPECT_NEAR(integral(w.psi), integral(w.psi1) * integral(w.psi2), 1e-8);
}

INSTANTIATE_TEST_SUITE_P(Centres, PlateauMatrix,
                         ::testing::Values(std::pair{0.0, 1.0}, std::pair{2.0, 0.5},
                                           std::pair{-3.0, 0.25}));

TEST(Plateau, DomainTooSmall) { EXPECT_THROW(plateau_window(0.0, 5.0, Grid(1024, 20.0)), BudgetError); }

TEST(TranslationBound, ZeroAndSymmetry) {
  const auto w = plateau_window(0.0, 1.0, Grid(4096, 40.0));
  const auto z = translation_difference_bound(w, 0.5, 0.0);
  EXPECT_EQ(z.lhs, 0.0);
  EXPECT_EQ(z.rhs, 0.0);
  for (double th : {0.3, 2.0, 7.5}) {
    EXPECT_NEAR(translation_difference_bound(w, 0.5, th).lhs,
                translation_difference_bound(w, 0.5, -th).lhs, 1e-10);
  }
  EXPECT_THROW(translation_difference_bound(w, 1.0, 1.0), InputError);
}

// The ratio lhs/rhs moves between its small-theta and large-theta limits,
// which differ by a factor of about 2.1 for this window.
TEST(TranslationBound, FittedConstantIsModerate) {
  const auto w = plateau_window(0.0, 1.0, Grid(4096, 40.0));
  for (double s : {0.0, 0.5, 0.9}) {
    double lo = kInf, hi = 0.0;
    for (double th = 0.1; th <= 10.0; th *= 1.25) {
      const auto b = translation_difference_bound(w, s, th);
      lo = std::min(lo, b.lhs / b.rhs);
      hi = std::max(hi, b.lhs / b.rhs);
    }
    EXPECT_LT(hi / lo, 2.5) << s;
  }
}

TEST(Dilation, ConstantAndLinearRates) {
  const Grid g(4096, 40.0);
  const auto tau = localising_cutoff(Grid(512, 8.0));
  const auto spec = NormSpec::modulation(2, 1, 0);
  const auto c = SampledSignal::from_function(g, [](double) { return cplx(3.0); });
  EXPECT_NEAR(dilation_difference_norm(c, 0.3, tau, 4.0, spec), 0.0, 1e-12);
  const auto lin = SampledSignal::from_function(g, [](double x) { return cplx(x * gauss(x / 8)); });
  double prev = dilation_difference_norm(lin, 0.0, tau, 4.0, spec);
  for (double lam = 8.0; lam <= 64.0; lam *= 2.0) {
    const double v = dilation_difference_norm(lin, 0.0, tau, lam, spec);
    EXPECT_NEAR(v / prev, 0.5, 0.05) << lam;
    prev = v;
  }
  EXPECT_THROW(dilation_difference_norm(lin, 39.0, tau, 1.0, spec), BudgetError);
}

TEST(Dilation, GaussianSweepDecreases) {
  const Grid g(4096, 40.0);
  const auto tau = localising_cutoff(Grid(512, 8.0));
  const auto f = gaussian(g);
  const auto spec = NormSpec::modulation(2, 1, 0);
  std::vector<double> v;
  for (double lam = 1.0; lam <= 64.0; lam *= 2.0) v.push_back(dilation_difference_norm(f, 0.5, tau, lam, spec));
  for (std::size_t i = 2; i < v.size(); ++i) EXPECT_LE(v[i], v[i - 1] * 1.05);
  EXPECT_LT(v.back(), v.front() / 20);
}

TEST(LocalCompose, IdentitySquareReciprocal) {
  const Grid g(4096, 40.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(1.5 + gauss(x)); });
  const auto spec = NormSpec::modulation(2, 1, 0);
  const double x0 = 0.4;
  const cplx z0 = band_limited_eval(f, x0);
  const auto check = [&](const AnalyticFunction& F, double tol) {
    const auto patch = local_compose(f, x0, F.expand(z0), spec, 1.0);
    double err = 0.0;
    for (std::size_t j = 0; j < g.n(); ++j) {
      if (std::abs(g.x(j) - x0) <= patch.radius) err = std::max(err, std::abs(patch.g[j] - F.eval(f[j])));
    }
    EXPECT_LE(err, patch.tail_bound + tol) << F.name;
  };
  check(identity_function(), 1e-10);
  check(square_function(), 1e-8);
  check(reciprocal_function(), 1e-8);
  check(expm1_function(), 1e-8);
  EXPECT_THROW(local_compose(f, x0, square_function().expand(cplx(0.0)), spec, 1.0), InputError);
}

TEST(Glue, PartitionSumsToOne) {
  const Grid g(4096, 40.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(2.0 + std::sin(x)); });
  const auto spec = NormSpec::modulation(2, 1, 0);
  const auto res = compose_on_compact(f, Interval{-3.0, 3.0}, square_function(), spec, 1.0);
  EXPECT_LE(res.partition_error, 1e-10);
  EXPECT_LE(res.sup_error, 1e-8);
  EXPECT_GE(res.patches.size(), 2u);
  // A single patch that covers K reproduces its own g there.
  const auto one = compose_on_compact(f, Interval{-0.01, 0.01}, square_function(), spec, 1.0);
  ASSERT_EQ(one.patches.size(), 1u);
  for (std::size_t j = 0; j < g.n(); ++j) {
    if (std::abs(g.x(j)) <= 0.01) EXPECT_EQ(one.g[j], one.patches[0].g[j]);
  }
  std::vector<LocalPatch> gap{one.patches[0]};
  EXPECT_THROW(glue_local(f, Interval{-1.0, 1.0}, gap), InputError);
}

TEST(Reciprocal, ConstantAndVanishing) {
  const Grid g(2048, 4 * kPi);
  const auto two = SampledSignal::from_function(g, [](double) { return cplx(2.0); });
  const auto spec = NormSpec::modulation(2, 1, 0);
  const auto r = reciprocal_on_compact(two, Interval{-5, 5}, spec, 1.0);
  for (std::size_t j = 0; j < g.n(); ++j) {
    if (std::abs(g.x(j)) <= 5) EXPECT_NEAR(std::abs(r.g[j] - 0.5), 0.0, 1e-12);
  }
  const auto s = SampledSignal::from_function(g, [](double x) { return cplx(std::sin(x)); });
  EXPECT_THROW(reciprocal_on_compact(s, Interval{-1, 1}, spec, 1.0), InputError);
}

TEST(GlobalCompose, IdentitySquareMobius) {
  const Grid g(4096, 40.0);
  const auto f = gaussian(g);
  const auto spec = NormSpec::modulation(2, 1, 0);
  EXPECT_LE(global_compose(f, identity_function(), spec, 1.0).sup_error, 1e-9);
  EXPECT_LE(global_compose(f, square_function(), spec, 1.0).sup_error, 1e-7);
  const auto m = global_compose(f, mobius_function(), spec, 1.0);
  EXPECT_LE(m.sup_error, 1e-6);
  EXPECT_THROW(global_compose(f, reciprocal_function(), spec, 1.0), InputError);
}

TEST(Ditkin, ConstantLinearGaussian) {
  const Grid g(4096, 40.0);
  const auto c = SampledSignal::from_function(g, [](double) { return cplx(1.0); });
  const auto s0 = NormSpec::modulation(1, 1, 0);
  const auto rc = point_ditkin_window(c, 0.0, s0, 1e-6);
  EXPECT_EQ(rc.residual, 0.0);
  // x psi(lambda x) = lambda^{-1} (y psi(y))(lambda x): residual halves per doubling.
  const Grid fine(8192, 10.0);
  const auto lin = SampledSignal::from_function(fine, [](double x) { return cplx(x); });
  EXPECT_THROW(point_ditkin_window(lin, 0.0, s0, 1e-3), BudgetError);
  const auto rl = point_ditkin_window(lin, 0.0, s0, 0.7);
  ASSERT_GE(rl.history.size(), 5u);
  for (std::size_t i = 2; i < rl.history.size(); ++i) {
    EXPECT_NEAR(rl.history[i].second / rl.history[i - 1].second, 0.5, 0.5 * 0.15);
  }
  const Grid local(8192, 4.0);
  const auto rg = point_ditkin_window(gaussian(local), 0.0, NormSpec::modulation(1, 1, 0.5), 2e-2);
  EXPECT_LT(rg.residual, 2e-2);
  EXPECT_EQ(rg.neighborhood, 1.0 / rg.lambda);
  EXPECT_EQ(dilated_plateau(local, rg.lambda)[local.n() / 2 + 3].real(), 1.0);
  EXPECT_THROW(point_ditkin_window(lin, 0.0, NormSpec::modulation(1, 1, 1.0), 1e-3), InputError);
}
