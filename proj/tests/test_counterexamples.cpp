#include <gtest/gtest.h>

#include <cmath>

#include "modspace/counterexamples.hpp"
#include "modspace/error.hpp"

using namespace modspace;

namespace {

// Plain ascending summation, the oracle for the Euler-Maclaurin tail.
L2PartialSums direct_sums(long long k0, long long K) {
  L2PartialSums s;
  for (long long k = k0; k <= K; ++k) {
    const double kk = static_cast<double>(k);
    const double l = std::log(kk);
    s.modulation += std::sqrt(2.0) / (kk * l);
    s.fourier += 2.0 / (kk * l * l);
    s.l2 += 2.0 / (kk * kk * l * l);
  }
  return s;
}

}  // namespace

TEST(CounterexampleL2, MatchesDirectSumBelowAndAboveSwitch) {
  for (long long K : {1000LL, 3000000LL}) {
    const auto a = l2_partial_sums(3, static_cast<double>(K));
    const auto b = direct_sums(3, K);
    EXPECT_NEAR(a.modulation, b.modulation, 1e-12 * b.modulation) << K;
    EXPECT_NEAR(a.fourier, b.fourier, 1e-12 * b.fourier) << K;
    EXPECT_NEAR(a.l2, b.l2, 1e-12 * b.l2) << K;
  }
}

TEST(CounterexampleL2, TailBetweenIntegrals) {
  for (double K : {50.0, 1e4, 1e7, 1e12}) {
    const double t = l2_fourier_tail(K);
    EXPECT_LE(t, 2.0 / std::log(K));
    EXPECT_GE(t, 2.0 / std::log(K + 1.0));
  }
}

TEST(CounterexampleL2, SquaringIncrements) {
  const auto rep = counterexample_l2(3, {1e2, 1e4, 1e8});
  EXPECT_TRUE(rep.all_pass());
  const auto& rows = rep.rows();
  ASSERT_EQ(rows.size(), 3u);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_NEAR(rows[i][4].get<double>(), std::sqrt(2.0) * std::log(2.0), 0.098);
  }
}

TEST(CounterexampleL2, RejectsBadInput) {
  EXPECT_THROW(counterexample_l2(2, {10.0}), InputError);
  EXPECT_THROW(counterexample_l2(3, {100.0, 10.0}), InputError);
  EXPECT_THROW(counterexample_l2(3, {}), InputError);
}

TEST(CounterexampleFlat, SmallInstanceIdentities) {
  const FlatInstance s = flat_instance({1.5, 2, 2}, 0.025, 128.0);
  // Each block holds one translate of nu^ phi with weight |mu_k|, |mu| = 1.
  EXPECT_NEAR(s.mu_tv, 1.0, 1e-15);
  EXPECT_NEAR(s.modulation, s.nu_conv_p, 1e-9 * s.nu_conv_p);
  EXPECT_LE(s.fhat_1, s.nu_hat_sup * s.phi_1);
  EXPECT_LE(s.f_p, s.mu_hat_sup * s.nu_conv_p);
  // Rudin-Shapiro sup bound after normalisation.
  EXPECT_LE(s.mu_hat_sup, std::exp2(0.5 * (1 - 2)) * (1 + 1e-12));
  EXPECT_NEAR(s.ratio, s.modulation / (s.f_p + s.fhat_1), 1e-15);
}

TEST(CounterexampleFlat, RejectsBadExponent) {
  EXPECT_THROW(flat_instance({2.0, 2, 2}, 0.025, 128.0), InputError);
  EXPECT_THROW(flat_instance({1.0, 0, 2}, 0.025, 128.0), InputError);
}
