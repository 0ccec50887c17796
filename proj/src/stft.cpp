#include "modspace/stft.hpp"

#include <cmath>
#include <fstream>
#include <string>

#include "modspace/error.hpp"
#include "modspace/report.hpp"

namespace modspace {

namespace {

std::size_t wrap(std::ptrdiff_t k, std::size_t n) {
  const auto nn = static_cast<std::ptrdiff_t>(n);
  return static_cast<std::size_t>(((k % nn) + nn) % nn);
}

void require_size(const Grid& g) {
  if (g.n() > kStftMaxSize) {
    throw BudgetError("full STFT limited to n <= " + std::to_string(kStftMaxSize) + ", got " +
                      std::to_string(g.n()) + "; use the partition-of-unity norms instead");
  }
}

}  // namespace

StftEngine::StftEngine(const SampledSignal& window)
    : window_hat_(fourier_forward(window)), window_norm_(weighted_lp_norm(window, 2.0)) {
  if (window.is_zero()) throw InputError("STFT window is identically zero");
  const std::size_t n = window.size();
  twiddle_.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    twiddle_[t] = std::polar(1.0, -2.0 * kPi * static_cast<double>(t) / static_cast<double>(n));
  }
}

void StftEngine::row(const SampledSignal& fhat, std::size_t m, std::span<cplx> out) const {
  require_compatible(fhat, window_hat_, "stft");
  const std::size_t n = fhat.size();
  const std::ptrdiff_t k = grid().freq_index(m);
  // (f * M_xi phi^*)^(eta) = f^(eta) conj(phi^(eta - xi)); the shift is by
  // whole frequency bins and wraps with the periodic spectrum.
  std::vector<cplx> prod(n);
  for (std::size_t i = 0; i < n; ++i) {
    prod[i] = fhat[i] * std::conj(window_hat_[wrap(static_cast<std::ptrdiff_t>(i) - k, n)]);
  }
  const SampledSignal conv =
      fourier_inverse(SampledSignal(grid(), std::move(prod), Domain::Frequency));
  // e^{-i x_j xi_k} = (-1)^k e^{-2 pi i jk/n}
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const std::size_t kk = wrap(k, n);
  for (std::size_t j = 0; j < n; ++j) out[j] = sign * twiddle_[(j * kk) % n] * conv[j];
}

TimeFrequencyMatrix::TimeFrequencyMatrix(Grid grid, std::vector<cplx> values, double window_norm)
    : grid_(grid), values_(std::move(values)), window_norm_(window_norm) {
  if (values_.size() != grid_.n() * grid_.n()) {
    throw InputError("time-frequency matrix must be n x n");
  }
}

TimeFrequencyMatrix stft(const SampledSignal& f, const SampledSignal& window) {
  require_compatible(f, window, "stft");
  require_size(f.grid());
  const StftEngine engine(window);
  const SampledSignal fhat = fourier_forward(f);
  const std::size_t n = f.size();
  std::vector<cplx> values(n * n);
  for (std::size_t m = 0; m < n; ++m) {
    engine.row(fhat, m, std::span<cplx>(values).subspan(m * n, n));
  }
  return TimeFrequencyMatrix(f.grid(), std::move(values), engine.window_norm());
}

double moyal_residual(const SampledSignal& f, const SampledSignal& g, const SampledSignal& phi,
                      const SampledSignal& psi) {
  require_compatible(f, g, "moyal");
  require_compatible(f, phi, "moyal");
  require_compatible(f, psi, "moyal");
  const StftEngine ephi(phi);
  const StftEngine epsi(psi);
  const SampledSignal fhat = fourier_forward(f);
  const SampledSignal ghat = fourier_forward(g);
  const std::size_t n = f.size();
  std::vector<cplx> vf(n);
  std::vector<cplx> vg(n);
  cplx lhs{};
  for (std::size_t m = 0; m < n; ++m) {
    ephi.row(fhat, m, vf);
    epsi.row(ghat, m, vg);
    cplx acc{};
    for (std::size_t j = 0; j < n; ++j) acc += vf[j] * std::conj(vg[j]);
    lhs += acc;
  }
  lhs *= f.grid().dx() * f.grid().dxi();
  const cplx rhs = 2.0 * kPi * inner_product(psi, phi) * inner_product(f, g);
  const double scale = weighted_lp_norm(f, 2.0) * weighted_lp_norm(g, 2.0) *
                       ephi.window_norm() * epsi.window_norm();
  if (scale == 0.0) throw InputError("Moyal residual undefined for zero signals");
  return std::abs(lhs - rhs) / scale;
}

double stft_l2_identity_ratio(const SampledSignal& f, const SampledSignal& window) {
  require_compatible(f, window, "stft");
  const double fn = weighted_lp_norm(f, 2.0);
  if (fn == 0.0) throw InputError("identity ratio undefined for a zero signal");
  const StftEngine engine(window);
  const SampledSignal fhat = fourier_forward(f);
  const std::size_t n = f.size();
  std::vector<cplx> v(n);
  double sum = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    engine.row(fhat, m, v);
    double acc = 0.0;
    for (const auto& z : v) acc += std::norm(z);
    sum += acc;
  }
  return std::sqrt(sum * f.grid().dx() * f.grid().dxi()) / fn;
}

void write_stft_magnitude(const std::filesystem::path& path, const TimeFrequencyMatrix& v) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot open " + path.string());
  const Grid& g = v.grid();
  os << "xi";
  for (std::size_t j = 0; j < g.n(); ++j) os << ',' << format_double(g.x(j));
  os << '\n';
  for (std::size_t m = 0; m < g.n(); ++m) {
    os << format_double(g.xi(m));
    for (const auto& z : v.row(m)) os << ',' << format_double(std::abs(z));
    os << '\n';
  }
}

SampledSignal gaussian_window(const Grid& grid) {
  return SampledSignal::from_function(grid, [](double t) { return cplx(std::exp(-0.5 * t * t)); });
}

}  // namespace modspace
