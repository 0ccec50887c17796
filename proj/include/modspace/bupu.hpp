#pragma once

// Smooth bounded uniform partition of unity {phi(. - k)} on the frequency
// line and the block projections phi(D - k) f.

#include <cstddef>
#include <utility>
#include <vector>

#include "modspace/grid.hpp"

namespace modspace {

class Bupu {
 public:
  static constexpr double kPlateau = 0.1;
  static constexpr double kSupport = 0.9;

  explicit Bupu(Grid grid);

  const Grid& grid() const { return grid_; }

  /// phi(xi) = b(xi) / sum_k b(xi - k) with b the plateau bump on
  /// [-0.1, 0.1] inside [-0.9, 0.9].  Exact in xi, so integer shifts need not
  /// land on grid nodes.
  static double phi(double xi);

  /// sum_k phi(xi - k), summed over the (at most three) nonzero terms.
  static double partition_sum(double xi);

  /// phi sampled on the frequency grid.
  const SampledSignal& profile() const { return profile_; }

  /// Blocks whose support meets the frequency grid.
  std::ptrdiff_t k_min() const { return k_min_; }
  std::ptrdiff_t k_max() const { return k_max_; }

  /// phi(xi_m - k) for every stored frequency sample.
  std::vector<double> mask(std::ptrdiff_t k) const;

  /// Index range [first, last] of samples that block k can touch.
  std::pair<std::size_t, std::size_t> window(std::ptrdiff_t k) const;

  /// exp(2 pi i j / n), j = 0..n-1.
  const std::vector<cplx>& twiddles() const { return twiddles_; }

 private:
  Grid grid_;
  SampledSignal profile_;
  std::vector<cplx> twiddles_;
  std::ptrdiff_t k_min_;
  std::ptrdiff_t k_max_;
};

Bupu build_bupu(const Grid& grid);

/// F^{-1}(phi(. - k) f^).  Throws InputError when block k misses the grid.
SampledSignal frequency_block(const SampledSignal& f, std::ptrdiff_t k, const Bupu& bupu);

/// Same, from a precomputed spectrum f^.  A block whose masked spectrum is
/// identically zero is returned as zeros without a transform.
SampledSignal frequency_block_from_spectrum(const SampledSignal& fhat, std::ptrdiff_t k,
                                            const Bupu& bupu);

}  // namespace modspace
