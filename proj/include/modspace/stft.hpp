#pragma once

// Short-time Fourier transform
//   V_phi f(x, xi) = \int f(t) conj(phi(t - x)) e^{-i t xi} dt
// sampled on the grid nodes x_j and the frequency nodes xi_m.  Everything is
// periodic on [-L, L), so the discrete Moyal identity holds exactly up to
// rounding.

#include <cstddef>
#include <filesystem>
#include <span>
#include <vector>

#include "modspace/grid.hpp"

namespace modspace {

/// Largest grid accepted by the full n x n transform.
inline constexpr std::size_t kStftMaxSize = 4096;

/// Row generator for a fixed window.  Each call produces the samples
/// V_phi f(x_j, xi_m), j = 0..n-1, for one frequency index m.
class StftEngine {
 public:
  /// Throws InputError for a zero window.
  explicit StftEngine(const SampledSignal& window);

  const Grid& grid() const { return window_hat_.grid(); }
  double window_norm() const { return window_norm_; }

  /// `fhat` is the spectrum of f, `out` has length n.
  void row(const SampledSignal& fhat, std::size_t m, std::span<cplx> out) const;

 private:
  SampledSignal window_hat_;
  double window_norm_;
  std::vector<cplx> twiddle_;  // e^{-2 pi i t / n}
};

class TimeFrequencyMatrix {
 public:
  TimeFrequencyMatrix(Grid grid, std::vector<cplx> values, double window_norm);

  const Grid& grid() const { return grid_; }
  double window_norm() const { return window_norm_; }
  /// V(x_j, xi_m)
  cplx operator()(std::size_t j, std::size_t m) const { return values_[m * grid_.n() + j]; }
  std::span<const cplx> row(std::size_t m) const {
    return std::span<const cplx>(values_).subspan(m * grid_.n(), grid_.n());
  }

 private:
  Grid grid_;
  std::vector<cplx> values_;
  double window_norm_;
};

/// Full transform; n must not exceed kStftMaxSize (BudgetError otherwise).
TimeFrequencyMatrix stft(const SampledSignal& f, const SampledSignal& window);

/// |<V_phi f, V_psi g> - 2 pi <psi, phi><f, g>| / (|f| |g| |phi| |psi|)
double moyal_residual(const SampledSignal& f, const SampledSignal& g, const SampledSignal& phi,
                      const SampledSignal& psi);

/// |V_phi f|_{L^2(R^2)} / |f|_{L^2}; equals sqrt(2 pi) |phi|_{L^2}.
double stft_l2_identity_ratio(const SampledSignal& f, const SampledSignal& window);

/// Writes |V| as a CSV matrix: one line per frequency row, first column xi.
void write_stft_magnitude(const std::filesystem::path& path, const TimeFrequencyMatrix& v);

/// e^{-t^2/2}
SampledSignal gaussian_window(const Grid& grid);

}  // namespace modspace
