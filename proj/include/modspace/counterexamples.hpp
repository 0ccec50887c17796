#pragma once

// The two constructions showing M^{p,1} is not contained in FA_p.

#include <vector>

#include "modspace/report.hpp"

namespace modspace {

struct FlatCase {
  double p = 1.0;
  int m = 4;  // depth of the frequency-side measure mu
  int r = 4;  // depth of the spatial measure nu
};

struct FlatOptions {
  std::vector<FlatCase> cases{{1.0, 4, 4}, {1.5, 2, 6}};
  double phi_width = 0.025;  // Gaussian width of phi inside its cutoff
  double k_eta = 128.0;      // half-width holding the bulk of F^{-1} phi
  bool scaling_run = true;   // also run (m + 2, r + 2) and check growth
};

/// Measured quantities of one (p, m, r) instance.
struct FlatInstance {
  FlatCase c;
  std::size_t n = 0;
  double L = 0.0;
  long long spacing_mu = 0;
  long long spacing_nu = 0;
  double modulation = 0.0;    // |f|_{M^{p,1}}
  double f_p = 0.0;           // |f|_{L^p}
  double fhat_1 = 0.0;        // |f^|_{L^1}
  double segal = 0.0;         // |f|_{FA_p}
  double ratio = 0.0;         // modulation / segal
  double mu_hat_sup = 0.0;
  double nu_hat_sup = 0.0;
  double eps = 0.0;           // max(2^{(1-m)/2}, 2^{1/2 - r(1/p - 1/2)})
  double phi_1 = 0.0;         // |phi|_{L^1}
  double inv_phi_p = 0.0;     // |F^{-1} phi|_{L^p}
  double nu_conv_p = 0.0;     // |nu * F^{-1} phi|_{L^p}
  double mu_tv = 0.0;
};

/// Builds and measures one instance on the smallest adequate grid.
FlatInstance flat_instance(const FlatCase& c, double phi_width, double k_eta);

/// f^ = mu * (nu^ phi) with mu, nu Rudin-Shapiro measures, mu on the integers
/// of the frequency axis and nu spread in space.  Rows per (p, m, r).
SweepReport counterexample_flat(const FlatOptions& opts);

/// Closed-form partial sums of the blocks chi_{I_k} / k,
/// I_k = [k - 1/ln^2 k, k + 1/ln^2 k], for k0 <= k <= K at each checkpoint K.
SweepReport counterexample_l2(long long k0, const std::vector<double>& checkpoints);

/// Partial sums of the three block series at K; exposed for tests.
struct L2PartialSums {
  double modulation = 0.0;  // sum sqrt(2) / (k ln k)
  double fourier = 0.0;     // sum 2 / (k ln^2 k)
  double l2 = 0.0;          // sum 2 / (k^2 ln^2 k)
};
L2PartialSums l2_partial_sums(long long k0, double K);

/// sum_{k > K} 2 / (k ln^2 k)
double l2_fourier_tail(double K);

}  // namespace modspace
