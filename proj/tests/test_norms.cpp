#include <gtest/gtest.h>

#include <cmath>

#include "modspace/corpus.hpp"
#include "modspace/error.hpp"
#include "modspace/norms.hpp"
#include "modspace/smooth.hpp"
#include "modspace/stft.hpp"

using namespace modspace;

namespace {

double gauss(double x) { return std::exp(-0.5 * x * x); }

SampledSignal block_zero_signal(const Grid& g) {
  return fourier_inverse(SampledSignal::from_function(
      g, [](double xi) { return cplx(plateau_bump(xi, 0.03, 0.09)); }, Domain::Frequency));
}

}  // namespace

TEST(NormSpec, Validation) {
  EXPECT_THROW(NormSpec::modulation(0.5, 1.0).validate(), InputError);
  EXPECT_THROW(NormSpec::modulation(1.0, 1.0, -0.1).validate(), InputError);
  EXPECT_THROW(NormSpec::fourier_segal(kInf).validate(), InputError);
  EXPECT_NO_THROW(NormSpec::modulation(kInf, kInf, 2.0).validate());
  const NormSpec s = NormSpec::modulation(kInf, 2.0, 0.5);
  EXPECT_EQ(NormSpec::from_json(s.to_json()), s);
}

TEST(Modulation, ZeroHomogeneityAndSum) {
  const Grid g(1024, 40.0);
  const Bupu b = build_bupu(g);
  EXPECT_EQ(modulation_norm(SampledSignal::zeros(g), 1, 1, 0, b).value, 0.0);
  const auto f = random_smooth_signal(g, 2);
  const auto r = modulation_norm(f, 1.5, 1, 0.5, b);
  EXPECT_NEAR(modulation_norm(f.scaled(2.0), 1.5, 1, 0.5, b).value, 2 * r.value, 1e-12 * r.value);
  double sum = 0.0;
  for (const auto& c : r.blocks) sum += c.contribution;
  EXPECT_NEAR(r.value, sum, 1e-12 * r.value);
  EXPECT_GE(r.tail_estimate, 0.0);
  const Json j = r.to_json();
  EXPECT_EQ(j["space"], "modulation");
  EXPECT_EQ(j["blocks"].size(), r.blocks.size());
}

TEST(Modulation, SingleBlockCollapse) {
  const Grid g(1024, 40.0);
  const Bupu b = build_bupu(g);
  const auto f = block_zero_signal(g);
  for (double p : {1.0, 2.0, kInf}) {
    for (double q : {1.0, 2.0, kInf}) {
      for (double s : {0.0, 1.0}) {
        EXPECT_NEAR(modulation_norm(f, p, q, s, b).value, weighted_lp_norm(f, p),
                    1e-13 * weighted_lp_norm(f, p));
      }
    }
  }
}

TEST(Modulation, MonotoneInSAndNestedInQ) {
  const Grid g(1024, 40.0);
  const Bupu b = build_bupu(g);
  for (const auto& e : standard_corpus(g)) {
    const auto& f = e.signal;
    EXPECT_LE(modulation_norm(f, 2, 1, 0.5, b).value, modulation_norm(f, 2, 1, 1.0, b).value);
    EXPECT_LE(modulation_norm(f, 2, 2, 0, b).value, modulation_norm(f, 2, 1, 0, b).value * (1 + 1e-14));
    EXPECT_LE(modulation_norm(f, 1, kInf, 0, b).value, modulation_norm(f, 1, 2, 0, b).value * (1 + 1e-14));
  }
}

TEST(Modulation, TriangleInequality) {
  const Grid g(512, 30.0);
  const Bupu b = build_bupu(g);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const auto f = random_smooth_signal(g, 10 + seed);
    const auto h = random_smooth_signal(g, 20 + seed);
    for (auto [p, q, s] : {std::tuple{1.0, 1.0, 0.0}, {2.0, 1.0, 0.5}, {1.5, 2.0, 1.0}, {kInf, kInf, 0.0}}) {
      const double a = modulation_norm(f, p, q, s, b).value;
      const double c = modulation_norm(h, p, q, s, b).value;
      EXPECT_LE(modulation_norm(f + h, p, q, s, b).value, a + c + 1e-12 * (a + c));
    }
  }
}

TEST(ModulationStft, MoyalDiagonal) {
  const Grid g(512, 30.0);
  const auto phi = gaussian_window(g);
  const auto f = random_smooth_signal(g, 3);
  const double want = std::sqrt(2 * kPi) * weighted_lp_norm(phi, 2) * weighted_lp_norm(f, 2);
  EXPECT_NEAR(modulation_norm_stft(f, 2, 2, 0, phi) / want, 1.0, 1e-6);
  EXPECT_EQ(modulation_norm_stft(SampledSignal::zeros(g), 1, 1, 0, phi), 0.0);
  const Grid big(8192, 40.0);
  EXPECT_THROW(modulation_norm_stft(gaussian_window(big), 1, 1, 0, gaussian_window(big)),
               BudgetError);
}

TEST(ModulationStft, EquivalenceBandAcrossCorpus) {
  const Grid g(1024, 40.0);
  const Bupu b = build_bupu(g);
  const auto phi = gaussian_window(g);
  double lo = kInf, hi = 0.0;
  for (const auto& e : standard_corpus(g)) {
    const double r = modulation_norm_stft(e.signal, 1, 1, 0, phi) /
                     modulation_norm(e.signal, 1, 1, 0, b).value;
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  EXPECT_GT(lo, 0.0);
  EXPECT_LT(hi / lo, 10.0);  // equivalence constants are finite; band recorded by the sweeps
}

TEST(FourierBeurling, GaussianAndMonotone) {
  const Grid g(4096, 40.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(gauss(x)); });
  EXPECT_NEAR(fourier_beurling_norm(f, 0), 2 * kPi, 1e-10);
  EXPECT_LE(fourier_beurling_norm(f, 0.5), fourier_beurling_norm(f, 1.0));
  // Real even f: twice the half-line integral.
  const auto fh = fourier_forward(f);
  double half = 0.0;
  for (std::size_t m = 0; m < g.n(); ++m) {
    const double xi = g.xi(m);
    const double w = std::sqrt(1 + xi * xi) * std::abs(fh[m]);
    if (xi > 0) half += w;
    if (xi == 0) half += 0.5 * w;
  }
  EXPECT_NEAR(fourier_beurling_norm(f, 1.0), 2 * half * g.dxi(), 1e-10);
}

TEST(FourierSegal, GaussianAndModulationInvariance) {
  const Grid g(4096, 40.0);
  const auto f = SampledSignal::from_function(g, [](double x) { return cplx(gauss(x)); });
  EXPECT_NEAR(fourier_segal_norm(f, 2), std::pow(kPi, 0.25) + 2 * kPi, 1e-10);
  EXPECT_EQ(fourier_segal_norm(SampledSignal::zeros(g), 1.5), 0.0);
  const double eta = 12 * g.dxi();
  const auto r = random_smooth_signal(g, 4);
  const auto mr = r.mapped([eta](double x, cplx v) { return v * std::polar(1.0, eta * x); });
  EXPECT_NEAR(fourier_segal_norm(mr, 1.5), fourier_segal_norm(r, 1.5), 1e-12 * fourier_segal_norm(r, 1.5));
}

TEST(Embedding, IdenticalSpecsAndZero) {
  const Grid g(512, 30.0);
  const Bupu b = build_bupu(g);
  const auto f = random_smooth_signal(g, 1);
  const auto s = NormSpec::modulation(1, 1, 1);
  EXPECT_EQ(embedding_ratio(f, s, s, b), 1.0);
  EXPECT_THROW(embedding_ratio(SampledSignal::zeros(g), s, NormSpec::lebesgue(2), b), InputError);
}

TEST(Embedding, M111IntoM210) {
  const Grid g(2048, 40.0);
  const Bupu b = build_bupu(g);
  for (const auto& e : standard_corpus(g)) {
    EXPECT_LE(embedding_ratio(e.signal, NormSpec::modulation(1, 1, 1), NormSpec::modulation(2, 1, 0), b),
              1 + 1e-9)
        << e.name;
  }
}

TEST(Algebra, RegimeAndScaling) {
  EXPECT_TRUE(in_algebra_regime(NormSpec::modulation(2, 1, 0)));
  EXPECT_TRUE(in_algebra_regime(NormSpec::modulation(2, 2, 0.6)));
  EXPECT_FALSE(in_algebra_regime(NormSpec::modulation(2, 2, 0.5)));
  EXPECT_FALSE(in_algebra_regime(NormSpec::fourier_beurling(0)));
  const Grid g(1024, 40.0);
  const Bupu b = build_bupu(g);
  const auto f = random_smooth_signal(g, 5);
  const auto h = random_smooth_signal(g, 6);
  const auto spec = NormSpec::modulation(2, 1, 0);
  EXPECT_THROW(algebra_ratio(f, h, NormSpec::modulation(2, 2, 0), b), InputError);
  const double r = algebra_ratio(f, h, spec, b);
  EXPECT_NEAR(algebra_ratio(f.scaled(3.0), h.scaled(cplx(0, -0.25)), spec, b), r, 1e-12 * r);
  EXPECT_GT(algebra_ratio_mixed(f, h, spec, b), 0.0);
}

TEST(Algebra, SingleBlockReduction) {
  // f^ in [-0.05, 0.05] so f^2 stays inside the plateau block.
  const Grid g(1024, 40.0);
  const Bupu b = build_bupu(g);
  auto f = fourier_inverse(SampledSignal::from_function(
      g, [](double xi) { return cplx(plateau_bump(xi, 0.01, 0.045)); }, Domain::Frequency));
  f = f.scaled(1.0 / f.sup_abs());
  for (double p : {1.0, 2.0}) {
    const auto spec = NormSpec::modulation(p, 1, 0);
    const double r = algebra_ratio(f, f, spec, b);
    const double direct = weighted_lp_norm(f * f, p) / std::pow(weighted_lp_norm(f, p), 2);
    EXPECT_NEAR(r, direct, 1e-12);
    EXPECT_LE(r, 1.0);
  }
}
