#include <cmath>
#include <string>
#include <vector>

#include "modspace/bupu.hpp"
#include "modspace/counterexamples.hpp"
#include "modspace/error.hpp"
#include "modspace/fft.hpp"
#include "modspace/grid.hpp"
#include "modspace/measures.hpp"
#include "modspace/norms.hpp"
#include "modspace/smooth.hpp"

namespace modspace {

namespace {

constexpr std::size_t kMaxFlatSize = std::size_t{1} << 23;

// phi on the frequency axis: a Gaussian cut off smoothly to [-0.1, 0.1].
double flat_phi(double xi, double width) {
  return std::exp(-xi * xi / (2.0 * width * width)) * plateau_bump(xi, 0.06, 0.1);
}

// Weights of an equally spaced measure in location order.
std::vector<cplx> ordered_weights(const DiscreteMeasure& mu) {
  std::vector<cplx> w;
  for (const auto& a : mu.atoms()) w.push_back(a.w);
  return w;
}

// Largest sampled modulus of sum_j w_j e^{-i j theta}; 256 samples per unit
// of degree, so the sample max sits within 0.01% of the true sup.
double trig_sup(const std::vector<cplx>& w) {
  std::size_t K = 1024;
  while (K < 256 * w.size()) K <<= 1;
  std::vector<cplx> v(K);
  std::copy(w.begin(), w.end(), v.begin());
  dft_forward(v);
  double sup = 0.0;
  for (const auto& z : v) sup = std::max(sup, std::abs(z));
  return sup;
}

}  // namespace

FlatInstance flat_instance(const FlatCase& c, double phi_width, double k_eta) {
  if (!(c.p >= 1.0 && c.p < 2.0)) throw InputError("flat counterexample needs 1 <= p < 2");
  if (c.m < 1 || c.r < 1 || c.m > 16 || c.r > 16) throw InputError("depths must lie in [1, 16]");
  if (!(phi_width > 0.0) || !(k_eta > 0.0)) throw InputError("phi width and k_eta must be positive");
  FlatInstance out;
  out.c = c;
  // mu sits on the integers, so the plateau of block k holds its k-th translate
  // of phi whole; nu's translates of F^{-1} phi stay apart.
  out.spacing_mu = disjointness_spacing(0.1, c.m);
  out.spacing_nu = disjointness_spacing(k_eta, c.r);
  const double half_mu = std::ldexp(static_cast<double>(out.spacing_mu), c.m - 1);
  const double half_nu = std::ldexp(static_cast<double>(out.spacing_nu), c.r - 1);
  // dxi = 1 / M puts every integer frequency on the grid.
  const double M = std::ceil((half_nu + 2.0 * k_eta) / kPi);
  out.L = kPi * M;
  std::size_t n = 8;
  while (static_cast<double>(n) / (2.0 * M) < half_mu + 1.0) {
    n <<= 1;
    if (n > kMaxFlatSize) {
      throw BudgetError("flat counterexample at m = " + std::to_string(c.m) +
                        ", r = " + std::to_string(c.r) + " needs more than 2^23 samples");
    }
  }
  out.n = n;
  const Grid grid(n, out.L);

  const RudinShapiroPair rmu = rudin_shapiro(c.m, out.spacing_mu, RsNormalization::TotalVariation);
  const RudinShapiroPair rnu = rudin_shapiro(c.r, out.spacing_nu, RsNormalization::LpAtoms, c.p);
  const DiscreteMeasure mu = rmu.mu.translated(-half_mu);
  const DiscreteMeasure nu =
      rnu.mu.translated(-0.5 * static_cast<double>(out.spacing_nu) * (std::ldexp(1.0, c.r) - 1.0));
  out.mu_tv = mu.total_variation();
  out.mu_hat_sup = trig_sup(ordered_weights(mu));
  out.nu_hat_sup = trig_sup(ordered_weights(nu));
  out.eps = std::max(std::exp2(0.5 * (1.0 - c.m)), std::exp2(0.5 - c.r * (1.0 / c.p - 0.5)));

  // nu^ phi, evaluated only where phi is nonzero.
  std::vector<cplx> phi(n);
  std::vector<cplx> base(n);
  std::size_t first = n;
  std::size_t last = 0;
  for (std::size_t j = 0; j < n; ++j) {
    phi[j] = flat_phi(grid.xi(j), phi_width);
    if (phi[j] != cplx(0.0)) {
      first = std::min(first, j);
      last = std::max(last, j);
    }
  }
  const std::vector<cplx> nu_hat =
      fourier_stieltjes_progression(nu, grid.xi(first), grid.dxi(), last - first + 1);
  for (std::size_t j = first; j <= last; ++j) base[j] = nu_hat[j - first] * phi[j];
  const SampledSignal phi_sig(grid, std::move(phi), Domain::Frequency);
  const SampledSignal base_sig(grid, std::move(base), Domain::Frequency);
  const SampledSignal fhat = measure_signal_convolve(mu, base_sig);
  const SampledSignal f = fourier_inverse(fhat);

  out.phi_1 = weighted_lp_norm(phi_sig, 1.0);
  out.inv_phi_p = weighted_lp_norm(fourier_inverse(phi_sig), c.p);
  out.nu_conv_p = weighted_lp_norm(fourier_inverse(base_sig), c.p);
  out.f_p = weighted_lp_norm(f, c.p);
  out.fhat_1 = weighted_lp_norm(fhat, 1.0);
  out.segal = out.f_p + out.fhat_1;
  out.modulation = modulation_norm(f, c.p, 1.0, 0.0, build_bupu(grid)).value;
  out.ratio = out.modulation / out.segal;
  return out;
}

SweepReport counterexample_flat(const FlatOptions& opts) {
  if (opts.cases.empty()) throw InputError("no flat cases requested");
  SweepReport rep("counterexample-flat", "(p, m, r)");
  rep.set_columns({"p", "m", "r", "n", "L", "M_p1", "f_Lp", "fhat_L1", "FA_p", "ratio",
                   "mu_hat_sup", "nu_hat_sup", "eps", "invphi_Lp", "nu_invphi_Lp", "phi_L1"});
  auto record = [&](const FlatInstance& s) {
    const std::string tag = "p=" + format_double(s.c.p) + " m=" + std::to_string(s.c.m) +
                            " r=" + std::to_string(s.c.r);
    rep.add_row(Json::array({s.c.p, s.c.m, s.c.r, s.n, s.L, s.modulation, s.f_p, s.fhat_1,
                             s.segal, s.ratio, s.mu_hat_sup, s.nu_hat_sup, s.eps, s.inv_phi_p,
                             s.nu_conv_p, s.phi_1}));
    const double lower = std::exp2(-1.0 - 1.0 / s.c.p) * s.inv_phi_p * s.mu_tv;
    rep.check_ge("(A) M^{p,1} lower bound " + tag, s.modulation, lower);
    rep.check_le("(B) |f^|_1 <= |nu^|_inf |phi|_1 " + tag, s.fhat_1, s.nu_hat_sup * s.phi_1);
    rep.check_le("(B) |f^|_1 <= eps |phi|_1 " + tag, s.fhat_1, s.eps * s.phi_1);
    rep.check_le("(C) |f|_p <= |nu^|_inf |F^-1 phi|_p " + tag, s.f_p,
                 s.nu_hat_sup * s.inv_phi_p);
    rep.check_le("(C) |f|_p <= eps |F^-1 phi|_p " + tag, s.f_p, s.eps * s.inv_phi_p);
    rep.check_le("(C') |f|_p <= |mu^|_inf |nu * F^-1 phi|_p " + tag, s.f_p,
                 s.mu_hat_sup * s.nu_conv_p);
  };
  for (const auto& c : opts.cases) {
    const FlatInstance a = flat_instance(c, opts.phi_width, opts.k_eta);
    record(a);
    if (!opts.scaling_run) continue;
    const FlatInstance b = flat_instance({c.p, c.m + 2, c.r + 2}, opts.phi_width, opts.k_eta);
    record(b);
    rep.check_ge("ratio growth p=" + format_double(c.p) + " (m,r)=(" + std::to_string(c.m) + "," +
                     std::to_string(c.r) + ")->(+2,+2)",
                 b.ratio / a.ratio, 1.6);
  }
  rep.set_summary("phi_width", opts.phi_width);
  rep.set_summary("k_eta", opts.k_eta);
  rep.note("f = mu^(-x) (nu * F^{-1} phi)(x): the sup of |mu^| multiplies |nu * F^{-1} phi|_p, "
           "so (C') is the bound that follows from f^ = mu * (nu^ phi); (C) with |nu^|_inf is "
           "reported as stated");
  rep.note("the lower bound (A) uses |F^{-1} phi|_{L^p}");
  rep.warn("lower bound (A) could also be read with |F^{-1} phi|_{L^1}; only the L^p form is "
           "checked");
  return rep;
}

}  // namespace modspace
