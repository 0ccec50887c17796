#include "modspace/bupu.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modspace/error.hpp"
#include "modspace/smooth.hpp"

namespace modspace {

namespace {

double raw_bump(double xi) { return plateau_bump(xi, Bupu::kPlateau, Bupu::kSupport); }

}  // namespace

double Bupu::phi(double xi) {
  const double b = raw_bump(xi);
  if (b == 0.0) return 0.0;
  // Shifts farther than one unit are outside the support of b.
  const double k = std::round(xi);
  double denom = 0.0;
  for (double j = k - 1.0; j <= k + 1.0; j += 1.0) denom += raw_bump(xi - j);
  return b / denom;
}

double Bupu::partition_sum(double xi) {
  const double k = std::round(xi);
  double sum = 0.0;
  for (double j = k - 1.0; j <= k + 1.0; j += 1.0) sum += phi(xi - j);
  return sum;
}

Bupu::Bupu(Grid grid)
    : grid_(grid),
      profile_(SampledSignal::from_function(
          grid, [](double xi) { return cplx(phi(xi), 0.0); }, Domain::Frequency)) {
  const double lo = grid_.xi(0);
  const double hi = grid_.xi(grid_.n() - 1);
  k_min_ = static_cast<std::ptrdiff_t>(std::ceil(lo - kSupport));
  k_max_ = static_cast<std::ptrdiff_t>(std::floor(hi + kSupport));
  // A block touching the grid only at its support boundary carries nothing.
  if (lo - static_cast<double>(k_min_) >= kSupport) ++k_min_;
  if (static_cast<double>(k_max_) - hi >= kSupport) --k_max_;
  const std::size_t n = grid_.n();
  twiddles_.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    twiddles_[j] = std::polar(1.0, 2.0 * kPi * static_cast<double>(j) / static_cast<double>(n));
  }
}

std::pair<std::size_t, std::size_t> Bupu::window(std::ptrdiff_t k) const {
  const double kk = static_cast<double>(k);
  const double dxi = grid_.dxi();
  const auto half = static_cast<double>(grid_.n() / 2);
  const double last_index = static_cast<double>(grid_.n() - 1);
  const double first = std::clamp(std::floor((kk - kSupport) / dxi + half), 0.0, last_index);
  const double last = std::clamp(std::ceil((kk + kSupport) / dxi + half), 0.0, last_index);
  return {static_cast<std::size_t>(first), static_cast<std::size_t>(last)};
}

std::vector<double> Bupu::mask(std::ptrdiff_t k) const {
  std::vector<double> out(grid_.n(), 0.0);
  const double kk = static_cast<double>(k);
  // Only indices with |xi - k| < kSupport can be nonzero.
  const auto [first, last] = window(k);
  for (std::size_t m = first; m <= last; ++m) out[m] = phi(grid_.xi(m) - kk);
  return out;
}

Bupu build_bupu(const Grid& grid) { return Bupu(grid); }

SampledSignal frequency_block_from_spectrum(const SampledSignal& fhat, std::ptrdiff_t k,
                                            const Bupu& bupu) {
  if (fhat.domain() != Domain::Frequency) {
    throw StructuralError("frequency_block expects a spectrum");
  }
  if (!(fhat.grid() == bupu.grid())) {
    throw StructuralError("frequency_block: partition built on another grid");
  }
  if (k < bupu.k_min() || k > bupu.k_max()) {
    throw InputError("block index " + std::to_string(k) + " lies outside the frequency grid");
  }
  const Grid& g = fhat.grid();
  const std::size_t n = g.n();
  const auto [first, last] = bupu.window(k);
  const double kk = static_cast<double>(k);
  std::vector<cplx> c;
  c.reserve(last - first + 1);
  bool zero = true;
  for (std::size_t m = first; m <= last; ++m) {
    c.push_back(Bupu::phi(g.xi(m) - kk) * fhat[m]);
    if (c.back() != cplx(0.0, 0.0)) zero = false;
  }
  if (zero) return SampledSignal::zeros(g, Domain::Space);

  // Direct synthesis costs about a third of an FFT per mode.
  if (c.size() > 4) {
    std::vector<cplx> v(n);
    std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(first));
    return fourier_inverse(SampledSignal(g, std::move(v), Domain::Frequency));
  }
  // Narrow block: sum the few nonzero modes directly.  With k = m - n/2,
  // e^{i xi_m x_j} = (-1)^k w^{(k j) mod n}.  The modes are summed relative to
  // the first one, so the twiddle strides stay small, and the carrier of the
  // first mode is applied at the end.
  const double scale = 1.0 / (static_cast<double>(n) * g.dx());
  const auto& tw = bupu.twiddles();
  std::vector<double> re(n, 0.0);
  std::vector<double> im(n, 0.0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const cplx a = ((i & 1) ? -scale : scale) * c[i];
    const double ar = a.real();
    const double ai = a.imag();
    std::size_t idx = 0;
    // Spelled out: std::complex multiplication goes through the slow
    // NaN-recovery path.
    for (std::size_t j = 0; j < n; ++j) {
      const double tr = tw[idx].real();
      const double ti = tw[idx].imag();
      re[j] += ar * tr - ai * ti;
      im[j] += ar * ti + ai * tr;
      idx = (idx + i) & (n - 1);
    }
  }
  const std::size_t k0 = (first + n / 2) & (n - 1);
  const double sign = (first & 1) ? -1.0 : 1.0;
  std::vector<cplx> out(n);
  std::size_t idx = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const double tr = sign * tw[idx].real();
    const double ti = sign * tw[idx].imag();
    out[j] = cplx(re[j] * tr - im[j] * ti, re[j] * ti + im[j] * tr);
    idx = (idx + k0) & (n - 1);
  }
  return SampledSignal(g, std::move(out), Domain::Space);
}

SampledSignal frequency_block(const SampledSignal& f, std::ptrdiff_t k, const Bupu& bupu) {
  return frequency_block_from_spectrum(fourier_forward(f), k, bupu);
}

}  // namespace modspace
