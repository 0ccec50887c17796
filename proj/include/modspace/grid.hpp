#pragma once

// Uniform 1-D grids, sampled signals and the Fourier core.
//
// Transform convention:
//   forward   f^(xi) = \int f(x) e^{-i x xi} dx
//   inverse   f(x)   = (2 pi)^{-1} \int f^(xi) e^{i x xi} dxi
// A grid with n samples on [-L, L) has spacing dx = 2L/n and frequency
// spacing dxi = pi/L, so dx * dxi * n = 2 pi.  Frequency samples are stored in
// centred order: index m holds xi = (m - n/2) * dxi.

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace modspace {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// <x>^s = (1 + |x|^2)^{s/2}
double japanese_bracket(double x, double s);

class Grid {
 public:
  /// n must be a power of two >= 8, half_width > 0 and finite.
  Grid(std::size_t n, double half_width);

  std::size_t n() const { return n_; }
  double half_width() const { return half_width_; }
  double dx() const { return 2.0 * half_width_ / static_cast<double>(n_); }
  double dxi() const { return kPi / half_width_; }
  double nyquist() const { return static_cast<double>(n_) * kPi / (2.0 * half_width_); }

  double x(std::size_t j) const { return -half_width_ + static_cast<double>(j) * dx(); }
  /// Integer frequency index k = m - n/2 of stored sample m.
  std::ptrdiff_t freq_index(std::size_t m) const {
    return static_cast<std::ptrdiff_t>(m) - static_cast<std::ptrdiff_t>(n_ / 2);
  }
  double xi(std::size_t m) const { return static_cast<double>(freq_index(m)) * dxi(); }

  /// Same grid with twice the samples on the same domain.
  Grid refined() const { return Grid(2 * n_, half_width_); }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.n_ == b.n_ && a.half_width_ == b.half_width_;
  }

 private:
  std::size_t n_;
  double half_width_;
};

enum class Domain { Space, Frequency };

/// Complex samples of a function on a Grid, either on the spatial grid
/// x_j = -L + j dx or on the centred frequency grid.  Immutable.
class SampledSignal {
 public:
  /// Placeholder: eight zero samples on [-1, 1).
  SampledSignal() : SampledSignal(Grid(8, 1.0), std::vector<cplx>(8)) {}
  /// Throws InputError on length mismatch or non-finite samples.
  SampledSignal(Grid grid, std::vector<cplx> samples, Domain domain = Domain::Space);

  static SampledSignal zeros(const Grid& grid, Domain domain = Domain::Space);
  static SampledSignal from_function(const Grid& grid, const std::function<cplx(double)>& f,
                                     Domain domain = Domain::Space);

  const Grid& grid() const { return grid_; }
  Domain domain() const { return domain_; }
  std::size_t size() const { return samples_.size(); }
  std::span<const cplx> samples() const { return samples_; }
  const cplx& operator[](std::size_t j) const { return samples_[j]; }

  /// Coordinate of sample j in this signal's domain.
  double coordinate(std::size_t j) const {
    return domain_ == Domain::Space ? grid_.x(j) : grid_.xi(j);
  }
  /// Sample spacing in this signal's domain.
  double spacing() const { return domain_ == Domain::Space ? grid_.dx() : grid_.dxi(); }

  double sup_abs() const;
  bool is_zero() const;

  SampledSignal scaled(cplx a) const;
  /// Pointwise map of sample values; coordinates passed alongside.
  SampledSignal mapped(const std::function<cplx(double, cplx)>& op) const;

 private:
  Grid grid_;
  std::vector<cplx> samples_;
  Domain domain_;
};

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b);
SampledSignal operator-(const SampledSignal& a, const SampledSignal& b);
/// Pointwise product.
SampledSignal operator*(const SampledSignal& a, const SampledSignal& b);

/// Throws StructuralError unless a and b share grid and domain.
void require_compatible(const SampledSignal& a, const SampledSignal& b, const char* what);

SampledSignal fourier_forward(const SampledSignal& f);
SampledSignal fourier_inverse(const SampledSignal& h);

/// Circular convolution scaled by dx; callers keep supports inside the inner
/// half of the domain (see outer_mass_fraction).
SampledSignal convolve(const SampledSignal& f, const SampledSignal& g);

/// (\int (<t>^s |f(t)|)^p dt)^{1/p} by left Riemann sum in the signal's own
/// domain; grid maximum when p is infinite.
double weighted_lp_norm(const SampledSignal& f, double p, double s = 0.0);

/// \int f conj(g).
cplx inner_product(const SampledSignal& f, const SampledSignal& g);

/// Share of |f|^2 mass located in the outer 10% of the domain.
double outer_mass_fraction(const SampledSignal& f);

/// Trigonometric (band-limited) interpolant of a spatial signal at arbitrary
/// points.  Points that coincide with grid nodes return the stored sample.
std::vector<cplx> band_limited_eval(const SampledSignal& f, std::span<const double> points);
cplx band_limited_eval(const SampledSignal& f, double point);
/// Same interpolant at start + k step, k < count, in O(n log n) via chirp-z.
std::vector<cplx> band_limited_eval_progression(const SampledSignal& f, double start, double step,
                                                std::size_t count);

/// Index of the grid node nearest to x (clamped into the grid).
std::size_t nearest_index(const Grid& grid, double x);

}  // namespace modspace
