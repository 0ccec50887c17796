#include "modspace/grid.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modspace/error.hpp"
#include "modspace/fft.hpp"

namespace modspace {

double japanese_bracket(double x, double s) {
  if (s == 0.0) return 1.0;
  return std::pow(1.0 + x * x, 0.5 * s);
}

Grid::Grid(std::size_t n, double half_width) : n_(n), half_width_(half_width) {
  if (n < 8 || (n & (n - 1)) != 0) {
    throw InputError("grid size must be a power of two >= 8, got " + std::to_string(n));
  }
  if (!(half_width > 0.0) || !std::isfinite(half_width)) {
    throw InputError("grid half-width must be positive and finite");
  }
}

SampledSignal::SampledSignal(Grid grid, std::vector<cplx> samples, Domain domain)
    : grid_(grid), samples_(std::move(samples)), domain_(domain) {
  if (samples_.size() != grid_.n()) {
    throw InputError("sample count " + std::to_string(samples_.size()) +
                     " does not match grid size " + std::to_string(grid_.n()));
  }
  for (const auto& v : samples_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw InputError("signal contains non-finite samples");
    }
  }
}

SampledSignal SampledSignal::zeros(const Grid& grid, Domain domain) {
  return SampledSignal(grid, std::vector<cplx>(grid.n()), domain);
}

SampledSignal SampledSignal::from_function(const Grid& grid, const std::function<cplx(double)>& f,
                                           Domain domain) {
  std::vector<cplx> v(grid.n());
  for (std::size_t j = 0; j < grid.n(); ++j) {
    v[j] = f(domain == Domain::Space ? grid.x(j) : grid.xi(j));
  }
  return SampledSignal(grid, std::move(v), domain);
}

double SampledSignal::sup_abs() const {
  double m = 0.0;
  for (const auto& v : samples_) m = std::max(m, std::abs(v));
  return m;
}

bool SampledSignal::is_zero() const {
  return std::all_of(samples_.begin(), samples_.end(),
                     [](const cplx& v) { return v == cplx(0.0, 0.0); });
}

SampledSignal SampledSignal::scaled(cplx a) const {
  std::vector<cplx> v(samples_);
  for (auto& x : v) x *= a;
  return SampledSignal(grid_, std::move(v), domain_);
}

SampledSignal SampledSignal::mapped(const std::function<cplx(double, cplx)>& op) const {
  std::vector<cplx> v(samples_.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = op(coordinate(j), samples_[j]);
  return SampledSignal(grid_, std::move(v), domain_);
}

void require_compatible(const SampledSignal& a, const SampledSignal& b, const char* what) {
  if (!(a.grid() == b.grid())) {
    throw StructuralError(std::string(what) + ": operands live on different grids");
  }
  if (a.domain() != b.domain()) {
    throw StructuralError(std::string(what) + ": operands live in different domains");
  }
}

namespace {

template <typename Op>
SampledSignal combine(const SampledSignal& a, const SampledSignal& b, const char* what, Op op) {
  require_compatible(a, b, what);
  std::vector<cplx> v(a.size());
  for (std::size_t j = 0; j < v.size(); ++j) v[j] = op(a[j], b[j]);
  return SampledSignal(a.grid(), std::move(v), a.domain());
}

}  // namespace

SampledSignal operator+(const SampledSignal& a, const SampledSignal& b) {
  return combine(a, b, "add", [](cplx x, cplx y) { return x + y; });
}
SampledSignal operator-(const SampledSignal& a, const SampledSignal& b) {
  return combine(a, b, "subtract", [](cplx x, cplx y) { return x - y; });
}
SampledSignal operator*(const SampledSignal& a, const SampledSignal& b) {
  return combine(a, b, "multiply", [](cplx x, cplx y) { return x * y; });
}

SampledSignal fourier_forward(const SampledSignal& f) {
  if (f.domain() != Domain::Space) {
    throw StructuralError("fourier_forward expects a spatial signal");
  }
  const Grid& g = f.grid();
  const std::size_t n = g.n();
  std::vector<cplx> work(f.samples().begin(), f.samples().end());
  dft_forward(work);
  // The DFT treats x_0 as the origin; the true origin sits n/2 samples later,
  // which is the phase e^{i L xi_k} = (-1)^k.  With n a power of two >= 8,
  // k = m - n/2 wraps to m ^ (n/2) and (-1)^k = (-1)^m.
  std::vector<cplx> out(n);
  const double dx = g.dx();
  const std::size_t half = n / 2;
  for (std::size_t m = 0; m < n; ++m) {
    out[m] = ((m & 1) ? -dx : dx) * work[m ^ half];
  }
  return SampledSignal(g, std::move(out), Domain::Frequency);
}

SampledSignal fourier_inverse(const SampledSignal& h) {
  if (h.domain() != Domain::Frequency) {
    throw StructuralError("fourier_inverse expects a frequency-domain signal");
  }
  const Grid& g = h.grid();
  const std::size_t n = g.n();
  const std::size_t half = n / 2;
  // dxi / (2 pi) == 1 / (n dx)
  const double scale = 1.0 / (static_cast<double>(n) * g.dx());
  std::vector<cplx> work(n);
  for (std::size_t m = 0; m < n; ++m) work[m ^ half] = ((m & 1) ? -scale : scale) * h[m];
  dft_backward(work);
  return SampledSignal(g, std::move(work), Domain::Space);
}

SampledSignal convolve(const SampledSignal& f, const SampledSignal& g) {
  require_compatible(f, g, "convolve");
  if (f.domain() != Domain::Space) {
    throw StructuralError("convolve expects spatial signals");
  }
  return fourier_inverse(fourier_forward(f) * fourier_forward(g));
}

double weighted_lp_norm(const SampledSignal& f, double p, double s) {
  if (!(p >= 1.0)) throw InputError("Lebesgue exponent must lie in [1, inf]");
  if (!std::isfinite(s)) throw InputError("weight power must be finite");
  const std::size_t n = f.size();
  std::vector<double> a(n);
  double peak = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    // Explicit squares instead of abs: hypot is several times slower and the
    // samples are far from overflow.
    a[j] = std::sqrt(f[j].real() * f[j].real() + f[j].imag() * f[j].imag());
    if (s != 0.0) a[j] *= japanese_bracket(f.coordinate(j), s);
    peak = std::max(peak, a[j]);
  }
  if (std::isinf(p) || peak == 0.0) return peak;
  // Scale by the peak so tiny signals neither underflow nor lose digits.
  double sum = 0.0;
  const double inv = 1.0 / peak;
  if (p == 1.0) {
    for (double v : a) sum += v;
    return sum * f.spacing();
  }
  if (p == 2.0) {
    for (double v : a) {
      const double r = v * inv;
      sum += r * r;
    }
    return peak * std::sqrt(sum * f.spacing());
  }
  if (2.0 * p == std::floor(2.0 * p) && p <= 8.0) {
    // Half-integer exponent: integer power times one square root.
    const int whole = static_cast<int>(std::floor(p));
    const bool half = p != std::floor(p);
    for (double v : a) {
      const double r = v * inv;
      double t = half ? std::sqrt(r) : 1.0;
      for (int i = 0; i < whole; ++i) t *= r;
      sum += t;
    }
  } else {
    for (double v : a) sum += std::pow(v * inv, p);
  }
  return peak * std::pow(sum * f.spacing(), 1.0 / p);
}

cplx inner_product(const SampledSignal& f, const SampledSignal& g) {
  require_compatible(f, g, "inner_product");
  cplx sum{};
  for (std::size_t j = 0; j < f.size(); ++j) sum += f[j] * std::conj(g[j]);
  return sum * f.spacing();
}

double outer_mass_fraction(const SampledSignal& f) {
  const std::size_t n = f.size();
  const std::size_t band = n / 20;  // 5% at each end
  double total = 0.0;
  double outer = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double e = std::norm(f[j]);
    total += e;
    if (j < band || j >= n - band) outer += e;
  }
  return total > 0.0 ? outer / total : 0.0;
}

std::size_t nearest_index(const Grid& grid, double x) {
  const double t = std::round((x + grid.half_width()) / grid.dx());
  if (t <= 0.0) return 0;
  const auto last = static_cast<double>(grid.n() - 1);
  return static_cast<std::size_t>(std::min(t, last));
}

std::vector<cplx> band_limited_eval(const SampledSignal& f, std::span<const double> points) {
  if (f.domain() != Domain::Space) {
    throw StructuralError("band-limited evaluation expects a spatial signal");
  }
  const Grid& g = f.grid();
  const SampledSignal spec = fourier_forward(f);
  const std::size_t n = g.n();
  const double dxi = g.dxi();
  const double scale = dxi / (2.0 * kPi);
  const double nyq = static_cast<double>(n / 2) * dxi;
  std::vector<cplx> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double y = points[i];
    const double pos = (y + g.half_width()) / g.dx();
    const double node = std::round(pos);
    if (std::abs(pos - node) < 1e-12 && node >= 0.0 && node < static_cast<double>(n)) {
      out[i] = f[static_cast<std::size_t>(node)];
      continue;
    }
    // The Nyquist term is split evenly between +-nyq so real data stays real.
    const cplx a0 = spec[0] * std::cos(y * nyq);
    double acc_re = a0.real();
    double acc_im = a0.imag();
    const double st_re = std::cos(y * dxi);
    const double st_im = std::sin(y * dxi);
    double ph_re = 0.0;
    double ph_im = 0.0;
    // Real arithmetic throughout: std::complex products take a slow
    // NaN-recovery path.  The phase is reseeded every 64 steps.
    for (std::size_t m = 1; m < n; ++m) {
      if ((m - 1) % 64 == 0) {
        ph_re = std::cos(y * g.xi(m));
        ph_im = std::sin(y * g.xi(m));
      }
      const double s_re = spec[m].real();
      const double s_im = spec[m].imag();
      acc_re += s_re * ph_re - s_im * ph_im;
      acc_im += s_re * ph_im + s_im * ph_re;
      const double t = ph_re * st_re - ph_im * st_im;
      ph_im = ph_re * st_im + ph_im * st_re;
      ph_re = t;
    }
    out[i] = cplx(acc_re * scale, acc_im * scale);
  }
  return out;
}

namespace {

// Chirp e^{i beta j^2 / 2} and the transformed convolution kernel for one
// (n, beta, count); reused across calls with the same progression step.
struct ChirpPlan {
  std::size_t n = 0;
  std::size_t count = 0;
  double beta = 0.0;
  std::size_t size = 0;
  std::vector<cplx> chirp;
  std::vector<cplx> kernel_hat;
};

const ChirpPlan& chirp_plan(std::size_t n, double beta, std::size_t count) {
  thread_local std::vector<ChirpPlan> plans;
  for (const auto& p : plans) {
    if (p.n == n && p.count == count && p.beta == beta) return p;
  }
  if (plans.size() >= 8) plans.erase(plans.begin());
  ChirpPlan p;
  p.n = n;
  p.count = count;
  p.beta = beta;
  const std::size_t terms = n - 1;
  p.size = 1;
  while (p.size < terms + count - 1) p.size <<= 1;
  const long double two_pi = 2.0L * static_cast<long double>(kPi);
  const std::size_t len = std::max(terms, count);
  p.chirp.resize(len);
  for (std::size_t j = 0; j < len; ++j) {
    const auto jj = static_cast<long double>(j);
    const long double a = std::fmod(0.5L * static_cast<long double>(beta) * jj * jj, two_pi);
    p.chirp[j] = cplx(static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a)));
  }
  // e^{-i beta j^2 / 2} for j = -(terms - 1) .. count - 1, wrapped.
  p.kernel_hat.assign(p.size, cplx{});
  for (std::size_t j = 0; j < count; ++j) p.kernel_hat[j] = std::conj(p.chirp[j]);
  for (std::size_t j = 1; j < terms; ++j) p.kernel_hat[p.size - j] = std::conj(p.chirp[j]);
  dft_forward(p.kernel_hat);
  plans.push_back(std::move(p));
  return plans.back();
}

}  // namespace

std::vector<cplx> band_limited_eval_progression(const SampledSignal& f, double start, double step,
                                                std::size_t count) {
  if (f.domain() != Domain::Space) {
    throw StructuralError("band-limited evaluation expects a spatial signal");
  }
  if (count == 0) return {};
  const Grid& g = f.grid();
  const SampledSignal spec = fourier_forward(f);
  const std::size_t n = g.n();
  const double dxi = g.dxi();
  const double scale = dxi / (2.0 * kPi);
  const double nyq = static_cast<double>(n / 2) * dxi;
  // Chirp-z: with y_k = start + k step and xi_m = xi_1 + (m - 1) dxi,
  //   sum_m S_m e^{i xi_m y_k} = e^{i xi_1 y_k} sum_i a_i w^{ik},  w = e^{i beta},
  // and ik = (i^2 + k^2 - (k - i)^2) / 2 turns the sum into a convolution.
  // The Nyquist term m = 0 is added directly.
  const ChirpPlan& plan = chirp_plan(n, dxi * step, count);
  const std::size_t terms = n - 1;
  std::vector<cplx> u(plan.size);
  const double shift_rate = dxi * start;
  for (std::size_t i = 0; i < terms; ++i) {
    const double a = static_cast<double>(i) * shift_rate;
    const cplx c = plan.chirp[i];
    const double sr = std::cos(a) * c.real() - std::sin(a) * c.imag();
    const double si = std::cos(a) * c.imag() + std::sin(a) * c.real();
    const cplx v = spec[i + 1];
    u[i] = cplx(v.real() * sr - v.imag() * si, v.real() * si + v.imag() * sr);
  }
  dft_forward(u);
  for (std::size_t i = 0; i < plan.size; ++i) {
    const cplx a = u[i];
    const cplx b = plan.kernel_hat[i];
    u[i] = cplx(a.real() * b.real() - a.imag() * b.imag(), a.real() * b.imag() + a.imag() * b.real());
  }
  dft_backward(u);
  const double inv_size = 1.0 / static_cast<double>(plan.size);
  const double xi1 = g.xi(1);
  std::vector<cplx> out(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double y = start + static_cast<double>(k) * step;
    const double pos = (y + g.half_width()) / g.dx();
    const double node = std::round(pos);
    if (std::abs(pos - node) < 1e-12 && node >= 0.0 && node < static_cast<double>(n)) {
      out[k] = f[static_cast<std::size_t>(node)];
      continue;
    }
    const cplx sum = u[k] * inv_size * plan.chirp[k] * std::polar(1.0, xi1 * y);
    out[k] = (sum + spec[0] * std::cos(y * nyq)) * scale;
  }
  return out;
}

cplx band_limited_eval(const SampledSignal& f, double point) {
  const double p[1] = {point};
  return band_limited_eval(f, p)[0];
}

}  // namespace modspace
