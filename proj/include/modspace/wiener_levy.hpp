#pragma once

// Plateau windows, the translation-difference estimate, dilation experiments
// and composition F o f for analytic F.

#include <cstddef>
#include <utility>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/norms.hpp"
#include "modspace/power_series.hpp"
#include "modspace/report.hpp"

namespace modspace {

/// psi = psi1 * psi2 for centre 0 and inner radius R, with
///   psi1(x) = g(x/2),  psi2(x) = 2 g(2x) / |g|_{L^1},
/// g = 1 on [-R, R], supp g = [-2R, 2R].  Evaluated at arbitrary points by a
/// fixed midpoint rule whose weights are renormalised so that psi is exactly
/// 1 on [-R, R].  Zero for |u| >= 5R.
class PlateauProfile {
 public:
  explicit PlateauProfile(double R = 1.0, int nodes = 400);
  double radius() const { return R_; }
  double operator()(double u) const;

 private:
  double R_;
  std::vector<double> y_;
  std::vector<double> w_;
};

struct PlateauWindow {
  SampledSignal psi1;
  SampledSignal psi2;
  SampledSignal psi;  // psi1 * psi2 on the grid
  double t0 = 0.0;
  double R = 1.0;

  /// Common support radius R0 of psi1 and psi2 about the origin.
  double support_radius() const;
};

/// psi2 is normalised by its discrete integral so that psi = 1 on B_R(t0) up
/// to rounding.  Requires 5R + |t0| < L/2.
PlateauWindow plateau_window(double t0, double R, const Grid& grid);

struct TranslationBound {
  double lhs;  // \int <xi>^s |psi^(xi - theta) - psi^(xi)| dxi
  double rhs;  // |theta|^s (max_{|t|<=R0} |e^{i theta t} - 1|)^{1-s}
};

/// 0 <= s < 1.  The shifted transform is computed as the transform of
/// e^{i theta x} psi, so theta need not be a grid frequency.
TranslationBound translation_difference_bound(const PlateauWindow& w, double s, double theta);

/// tau(y): 1 for |y| <= 1, 0 for |y| >= 2.
double localising_cutoff(double y);
SampledSignal localising_cutoff(const Grid& grid);

/// Norm of G(y) = (f(x0 + y/lambda) - f(x0)) tau(y) on tau's grid, with f
/// resampled by band-limited interpolation.  BudgetError if the resampled
/// points leave f's domain.
double dilation_difference_norm(const SampledSignal& f, double x0, const SampledSignal& tau,
                                double lambda, const NormSpec& spec);

struct ComposeOptions {
  double series_tol = 1e-8;
  double safety = 2.0;  // threshold radius / (safety * c_hat)
  std::size_t aux_n = 512;
  double aux_L = 8.0;
  double lambda_start = 1.0;  // first lambda tried by local_compose
};

struct LocalPatch {
  double center = 0.0;
  double lambda = 1.0;
  double radius = 0.0;  // chi = 1 and g = F(f) on |x - center| <= radius
  SampledSignal g;
  SampledSignal chi;
  int truncation = 0;
  double tail_bound = 0.0;
  double dilation_norm = 0.0;
};

/// Expands F about f(x0) and doubles lambda until
/// |(f(x0 + ./lambda) - f(x0)) tau|_spec < F.radius / (safety c_hat); then
/// g = F(z0) tau_x0 + sum_{j<=J} c_j ((f - z0) tau_x0)^j on f's grid with
/// tau_x0 = tau(lambda (x - x0)).  Lambda is capped at 1/(8 dx).
LocalPatch local_compose(const SampledSignal& f, double x0, const PowerSeries& F,
                         const NormSpec& spec, double c_hat, const ComposeOptions& opts = {});

struct Interval {
  double lo;
  double hi;
};

struct GlueResult {
  SampledSignal g;
  double partition_error;  // max over K of |sum_j h_j - 1|
};

/// g = sum_j h_j g_j with h_j = chi_j prod_{i<j} (1 - chi_i).  Every grid
/// point of K must lie in some |x - center_j| <= radius_j.
GlueResult glue_local(const SampledSignal& f, Interval K, const std::vector<LocalPatch>& patches);

struct RangeCheck {
  bool ok = true;
  double min_distance = kInf;  // from sampled range to the nearest singularity
  double margin = 0.0;
};

/// Sampled range of f on K against the singularities of F, with a margin of
/// 10% of (1 + diameter of the sampled range).
RangeCheck check_range(const AnalyticFunction& F, const SampledSignal& f, Interval K);

struct CompositionResult {
  std::string function;
  Interval K{0.0, 0.0};
  SampledSignal g;
  std::vector<LocalPatch> patches;
  double global_lambda = 0.0;  // approximate-unit dilation (global only)
  double sup_error = 0.0;      // max |g - F(f)| over the checked set
  double max_tail_bound = 0.0;
  int max_truncation = 0;
  double partition_error = 0.0;
  double norm_value = 0.0;

  Json to_json() const;
};

/// Greedy left-to-right cover of K by local patches, glued.
CompositionResult compose_on_compact(const SampledSignal& f, Interval K, const AnalyticFunction& F,
                                     const NormSpec& spec, double c_hat,
                                     const ComposeOptions& opts = {});

/// 1/f on K; InputError when f vanishes somewhere on K.
CompositionResult reciprocal_on_compact(const SampledSignal& f, Interval K, const NormSpec& spec,
                                        double c_hat, const ComposeOptions& opts = {});

/// F o f on the whole grid for F(0) = 0, via g = (1 - tau0) g0 + tau0 g1.
CompositionResult global_compose(const SampledSignal& f, const AnalyticFunction& F,
                                 const NormSpec& spec, double c_hat,
                                 const ComposeOptions& opts = {});

/// psi(lambda (x - x0)) with the R = 1 plateau profile.
SampledSignal dilated_plateau(const Grid& grid, double lambda, double x0 = 0.0);

struct DitkinResult {
  SampledSignal window;
  double lambda = 1.0;
  double residual = 0.0;
  double neighborhood = 0.0;  // window = 1 on |x - x0| <= neighborhood
  std::vector<std::pair<double, double>> history;  // (lambda, residual)
};

/// Doubles lambda until |(f - f(x0)) psi_lambda|_spec < eps.  0 <= s < 1.
DitkinResult point_ditkin_window(const SampledSignal& f, double x0, const NormSpec& spec,
                                 double eps);

}  // namespace modspace
