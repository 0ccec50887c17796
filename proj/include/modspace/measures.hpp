#pragma once

// Finite atomic measures sum_j w_j delta_{x_j} and the Rudin-Shapiro pair.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/report.hpp"

namespace modspace {

struct Atom {
  double x;
  cplx w;
};

/// Atoms sorted by location with pairwise distinct locations.  Atoms with
/// equal locations are merged by exact comparison; zero weights are kept so
/// the support of a signed recursion stays visible.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  std::span<const Atom> atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  double total_variation() const;
  DiscreteMeasure scaled(cplx a) const;
  /// Shift every location by `a`.
  DiscreteMeasure translated(double a) const;

  Json to_json() const;
  static DiscreteMeasure from_json(const Json& j);

  friend bool operator==(const DiscreteMeasure& a, const DiscreteMeasure& b);

 private:
  std::vector<Atom> atoms_;
};

DiscreteMeasure operator+(const DiscreteMeasure& a, const DiscreteMeasure& b);
DiscreteMeasure operator-(const DiscreteMeasure& a, const DiscreteMeasure& b);

DiscreteMeasure dirac(double a);

/// Atom-count product must not exceed kMaxConvolutionAtoms.
inline constexpr std::size_t kMaxConvolutionAtoms = 10'000'000;
DiscreteMeasure convolve_measures(const DiscreteMeasure& mu, const DiscreteMeasure& nu);

/// mu^(xi) = sum_j w_j e^{-i x_j xi}, phases reduced in extended precision.
std::vector<cplx> fourier_stieltjes(const DiscreteMeasure& mu, std::span<const double> xis);
/// Same at xi0 + i step, i < count; phases advance by rotation and are
/// recomputed exactly every 256 samples.
std::vector<cplx> fourier_stieltjes_progression(const DiscreteMeasure& mu, double xi0, double step,
                                                std::size_t count);

enum class RsNormalization { Raw, TotalVariation, LpAtoms };

struct RudinShapiroPair {
  DiscreteMeasure mu;
  DiscreteMeasure nu;
  int m = 0;
  long long N = 1;
  RsNormalization normalization = RsNormalization::Raw;
  double p = 1.0;  // LpAtoms only
};

/// mu_j = mu_{j-1} + nu_{j-1} * delta_{N_j}, nu_j = mu_{j-1} - nu_{j-1} * delta_{N_j}
/// with N_j = 2^{j-1} N, from mu_0 = nu_0 = delta_0.  Weights are then scaled
/// by 1 (Raw), 2^{-m} (TotalVariation) or 2^{-m/p} (LpAtoms).
RudinShapiroPair rudin_shapiro(int m, long long N, RsNormalization normalization,
                               double p = 1.0);

/// Smallest integer spacing N making the translates -x + [-K, K], x in the
/// support of a depth-m pair, pairwise disjoint: floor(2K) + 1.
long long disjointness_spacing(double K_halfwidth, int m);

/// sum_j w_j f(. - x_j) by exact index shifts in f's own domain.  Locations
/// must be integer multiples of the sample spacing; shifted mass leaving the
/// domain raises BudgetError.
SampledSignal measure_signal_convolve(const DiscreteMeasure& mu, const SampledSignal& f);

}  // namespace modspace
