#include "modspace/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "modspace/counterexamples.hpp"
#include "modspace/error.hpp"
#include "modspace/measures.hpp"
#include "modspace/signal_io.hpp"
#include "modspace/smooth.hpp"
#include "modspace/stft.hpp"
#include "modspace/wiener_levy.hpp"

namespace modspace {

namespace {

SampledSignal gaussian(const Grid& g, double width = 1.0) {
  return SampledSignal::from_function(g, [width](double x) {
    const double d = x / width;
    return cplx(std::exp(-0.5 * d * d));
  });
}

double max_diff(const SampledSignal& a, const SampledSignal& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

double rel_diff(double a, double b) { return std::abs(a - b) / std::abs(b); }

// Random trigonometric polynomial whose spectrum fills the inner 80% of the
// frequency grid.
SampledSignal random_band_limited(const Grid& g, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  const std::size_t n = g.n();
  std::vector<cplx> spec(n);
  const double edge = 0.4 * static_cast<double>(n);
  for (std::size_t m = 0; m < n; ++m) {
    const double re = uniform_from_bits(gen(), -1.0, 1.0);
    const double im = uniform_from_bits(gen(), -1.0, 1.0);
    if (std::abs(static_cast<double>(g.freq_index(m))) < edge) spec[m] = cplx(re, im);
  }
  return fourier_inverse(SampledSignal(g, std::move(spec), Domain::Frequency));
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  // splitmix64 step, so neighbouring seeds give unrelated streams
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

NormSpec spec_from_params(const RunConfig& cfg, const NormSpec& fallback) {
  NormSpec s = fallback;
  if (cfg.has("space")) s.space = space_from_string(cfg.param_string("space", ""));
  s.p = cfg.param_double("p", s.p);
  s.q = cfg.param_double("q", s.q);
  s.s = cfg.param_double("s", s.s);
  s.validate();
  return s;
}

void set_grid_summary(SweepReport& rep, const Grid& g) {
  rep.set_summary("n", g.n());
  rep.set_summary("L", g.half_width());
}

// ---------------------------------------------------------------- fourier

ExperimentOutput run_fourier(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  SweepReport rep("fourier", "check");
  rep.set_columns({"check", "measured", "tolerance"});
  auto row = [&](const std::string& name, double v, double tol) {
    rep.add_row(Json::array({name, v, tol}));
    rep.check_le(name, v, tol);
  };

  const SampledSignal g0 = gaussian(g);
  const SampledSignal g0_hat = fourier_forward(g0);
  double err = 0.0;
  for (std::size_t m = 0; m < g.n(); ++m) {
    const double xi = g.xi(m);
    err = std::max(err, std::abs(g0_hat[m] - std::sqrt(2.0 * kPi) * std::exp(-0.5 * xi * xi)));
  }
  row("gaussian transform max error", err, 1e-8);

  const SampledSignal mod = g0.mapped([](double x, cplx v) { return v * std::cos(3.0 * x); });
  const SampledSignal mod_hat = fourier_forward(mod);
  err = 0.0;
  for (std::size_t m = 0; m < g.n(); ++m) {
    const double xi = g.xi(m);
    const double want = std::sqrt(2.0 * kPi) / 2.0 *
                        (std::exp(-0.5 * (xi - 3) * (xi - 3)) + std::exp(-0.5 * (xi + 3) * (xi + 3)));
    err = std::max(err, std::abs(mod_hat[m] - want));
  }
  row("modulated gaussian transform max error", err, 1e-8);
  row("transform of zero", fourier_forward(SampledSignal::zeros(g)).sup_abs(), 0.0);

  double roundtrip = 0.0;
  double parseval = 0.0;
  double convolution = 0.0;
  for (std::uint64_t t = 0; t < 3; ++t) {
    const SampledSignal b = random_band_limited(g, derive_seed(cfg.seed, t));
    const SampledSignal back = fourier_inverse(fourier_forward(b));
    roundtrip = std::max(roundtrip, max_diff(back, b) / b.sup_abs());

    const SampledSignal f = random_smooth_signal(g, derive_seed(cfg.seed, 10 + 2 * t));
    const SampledSignal h = random_smooth_signal(g, derive_seed(cfg.seed, 11 + 2 * t));
    const SampledSignal fh = fourier_forward(f);
    const SampledSignal hh = fourier_forward(h);
    const cplx lhs = inner_product(f, h);
    const cplx rhs = inner_product(fh, hh) / (2.0 * kPi);
    parseval = std::max(parseval, std::abs(lhs - rhs) /
                                      (weighted_lp_norm(f, 2.0) * weighted_lp_norm(h, 2.0)));

    const SampledSignal conv = convolve(f, h);
    if (outer_mass_fraction(conv) > 1e-6) rep.warn("convolution mass reaches the domain edge");
    const SampledSignal conv_hat = fourier_forward(conv);
    convolution = std::max(convolution,
                           max_diff(conv_hat, fh * hh) / (fh.sup_abs() * hh.sup_abs()));
  }
  row("round trip relative error", roundtrip, 1e-10);
  row("parseval relative residual", parseval, 1e-8);
  row("convolution theorem residual", convolution, 1e-8);

  const SampledSignal e2 = gaussian(g, std::sqrt(0.5));
  const SampledSignal want = gaussian(g).scaled(std::sqrt(kPi / 2.0));
  row("gaussian self-convolution max error", max_diff(convolve(e2, e2), want), 1e-8);
  row("gaussian L2 norm relative error", rel_diff(weighted_lp_norm(g0, 2.0), std::pow(kPi, 0.25)),
      1e-12);
  set_grid_summary(rep, g);
  return {std::move(rep), {}};
}

// ---------------------------------------------------------------- stft

ExperimentOutput run_moyal(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  const auto corpus = standard_corpus(g, cfg.seed);
  const SampledSignal phi = gaussian(g);
  const SampledSignal psi = gaussian(g, std::sqrt(2.0));
  SweepReport rep("moyal", "signal pair");
  rep.set_columns({"f", "g", "residual"});
  double worst = 0.0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& a = corpus[i];
    const auto& b = corpus[(i + 1) % corpus.size()];
    const double r = moyal_residual(a.signal, b.signal, phi, psi);
    worst = std::max(worst, r);
    rep.add_row(Json::array({a.name, b.name, r}));
  }
  rep.check_le("corpus max residual", worst, 1e-6);

  const SampledSignal odd = phi.mapped([](double x, cplx v) { return x * v; });
  const double orth = moyal_residual(phi, odd, phi, phi);
  rep.add_row(Json::array({"gauss", "x gauss", orth}));
  rep.check_le("orthogonal pair residual", orth, 1e-6);
  const double r1 = moyal_residual(corpus[0].signal, corpus[1].signal, phi, psi);
  const double r2 = moyal_residual(corpus[0].signal.scaled(2.0), corpus[1].signal, phi, psi);
  rep.check_le("residual unchanged under f -> 2f", std::abs(r1 - r2), 1e-12);
  rep.note("windows: phi = e^{-t^2/2}, psi = e^{-t^2/4}; pairs (f_i, f_{i+1})");
  set_grid_summary(rep, g);
  return {std::move(rep), {}};
}

ExperimentOutput run_stft(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  if (g.n() > kStftMaxSize) {
    throw InputError("stft needs n <= " + std::to_string(kStftMaxSize));
  }
  const std::size_t n = g.n();
  const SampledSignal phi = gaussian_window(g);
  const StftEngine engine(phi);
  SweepReport rep("stft", "check");
  rep.set_columns({"check", "measured", "tolerance"});
  auto row = [&](const std::string& name, double v, double tol) {
    rep.add_row(Json::array({name, v, tol}));
    rep.check_le(name, v, tol);
  };

  // Gaussian against the closed form, plus both covariances, row by row.
  const SampledSignal fhat = fourier_forward(phi);
  const std::size_t shift_m = 8;
  const std::size_t shift_j = 16;
  const SampledSignal modulated =
      phi.mapped([&](double x, cplx v) { return v * std::polar(1.0, static_cast<double>(shift_m) * g.dxi() * x); });
  const SampledSignal translated = SampledSignal::from_function(g, [&](double x) {
    const double d = x - static_cast<double>(shift_j) * g.dx();
    return cplx(std::exp(-0.5 * d * d));
  });
  const SampledSignal mhat = fourier_forward(modulated);
  const SampledSignal that = fourier_forward(translated);
  std::vector<cplx> v(n), prev(n), vm(n), vt(n);
  double closed = 0.0;
  double mod_cov = 0.0;
  double trans_cov = 0.0;
  for (std::size_t m = 0; m < n; ++m) {
    engine.row(fhat, m, v);
    const double xi = g.xi(m);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = g.x(j);
      const cplx want = std::sqrt(kPi) * std::polar(1.0, -0.5 * x * xi) *
                        std::exp(-0.25 * (x * x + xi * xi));
      closed = std::max(closed, std::abs(v[j] - want));
    }
    engine.row(that, m, vt);
    for (std::size_t j = shift_j; j < n; ++j) {
      trans_cov = std::max(trans_cov, std::abs(std::abs(vt[j]) - std::abs(v[j - shift_j])));
    }
    if (m + shift_m < n) {
      engine.row(mhat, m + shift_m, vm);
      for (std::size_t j = 0; j < n; ++j) {
        mod_cov = std::max(mod_cov, std::abs(std::abs(vm[j]) - std::abs(v[j])));
      }
    }
  }
  row("gaussian closed form max error", closed, 1e-8);
  row("modulation covariance max error", mod_cov, 1e-8);
  row("translation covariance max error", trans_cov, 1e-8);

  const double want = std::sqrt(2.0 * kPi) * std::pow(kPi, 0.25);
  const auto corpus = standard_corpus(g, cfg.seed);
  double lo = kInf, hi = 0.0, worst = 0.0;
  for (const auto& e : corpus) {
    const double r = stft_l2_identity_ratio(e.signal, phi);
    lo = std::min(lo, r);
    hi = std::max(hi, r);
    worst = std::max(worst, rel_diff(r, want));
  }
  row("identity ratio relative error", worst, 1e-6);
  row("identity ratio relative spread", (hi - lo) / want, 1e-6);
  const double tripled = stft_l2_identity_ratio(corpus[0].signal, phi.scaled(3.0));
  row("identity ratio under phi -> 3 phi", rel_diff(tripled, 3.0 * lo), 1e-6);
  row("stft of zero", [&] {
    engine.row(SampledSignal::zeros(g, Domain::Frequency), n / 2, v);
    double m = 0.0;
    for (const auto& z : v) m = std::max(m, std::abs(z));
    return m;
  }(), 0.0);
  rep.set_summary("identity_ratio_expected", want);
  set_grid_summary(rep, g);
  ExperimentOutput out{std::move(rep), {}};
  if (cfg.param_bool("dump", false)) {
    std::filesystem::create_directories(cfg.out);
    write_stft_magnitude(std::filesystem::path(cfg.out) / "stft_magnitude.csv",
                         stft(corpus[0].signal, phi));
    out.report.set_summary("stft_magnitude", "stft_magnitude.csv");
  }
  return out;
}

// ---------------------------------------------------------------- norms

ExperimentOutput run_norm(const RunConfig& cfg) {
  const NormSpec spec = spec_from_params(cfg, NormSpec::modulation(2.0, 1.0, 0.0));
  std::vector<CorpusEntry> inputs;
  const std::string path = cfg.param_string("signal", "");
  if (!path.empty()) {
    inputs.push_back({path, read_signal(path)});
  } else {
    inputs = standard_corpus(cfg.grid(), cfg.seed);
  }
  const Grid g = inputs.front().signal.grid();
  const Bupu bupu = build_bupu(g);
  SweepReport rep("norm", "signal");
  rep.set_columns({"signal", "value", "tail_estimate"});
  double homog = 0.0;
  double block_sum = 0.0;
  double s_monotone = kInf;
  double q_nesting = kInf;
  for (const auto& e : inputs) {
    const double v = norm(e.signal, spec, bupu);
    double tail = 0.0;
    if (spec.space == Space::Modulation) {
      const NormReport r = modulation_norm(e.signal, spec.p, spec.q, spec.s, bupu);
      tail = r.tail_estimate;
      if (spec.q == 1.0) {
        double sum = 0.0;
        for (const auto& b : r.blocks) sum += b.contribution;
        block_sum = std::max(block_sum, rel_diff(sum, r.value));
      }
      const double heavier = modulation_norm(e.signal, spec.p, spec.q, spec.s + 0.5, bupu).value;
      s_monotone = std::min(s_monotone, heavier - v);
      const double q2 = std::isinf(spec.q) ? spec.q : 2.0 * spec.q;
      const double looser = modulation_norm(e.signal, spec.p, q2, spec.s, bupu).value;
      q_nesting = std::min(q_nesting, v - looser);
    }
    homog = std::max(homog, rel_diff(norm(e.signal.scaled(2.0), spec, bupu), 2.0 * v));
    rep.add_row(Json::array({e.name, v, tail}));
  }
  rep.check_le("homogeneity |2f| = 2|f|", homog, 1e-14);
  if (spec.space == Space::Modulation) {
    if (spec.q == 1.0) rep.check_le("q = 1 value equals block sum", block_sum, 1e-12);
    rep.check_ge("monotone in s", s_monotone, 0.0);
    rep.check_ge("nested in q", q_nesting, 0.0);

    // Spectrum inside the plateau of block 0: the norm is the L^p norm.
    const SampledSignal one_block = fourier_inverse(SampledSignal::from_function(
        g, [](double xi) { return cplx(classic_bump(xi / 0.09)); }, Domain::Frequency));
    if (!one_block.is_zero()) {
      rep.check_le("single block equals L^p norm",
                   rel_diff(modulation_norm(one_block, spec.p, spec.q, spec.s, bupu).value,
                            weighted_lp_norm(one_block, spec.p)),
                   1e-12);
    }
  }
  const SampledSignal g0 = gaussian(g);
  rep.check_le("gaussian FL^1_0 = 2 pi", rel_diff(fourier_beurling_norm(g0, 0.0), 2.0 * kPi), 1e-10);
  rep.check_le("gaussian FA_2 = pi^{1/4} + 2 pi",
               rel_diff(fourier_segal_norm(g0, 2.0), std::pow(kPi, 0.25) + 2.0 * kPi), 1e-10);
  rep.set_summary("spec", spec.to_json());
  set_grid_summary(rep, g);
  ExperimentOutput out{std::move(rep), {}};
  if (path.empty()) out.signals.push_back({"signal_" + inputs.front().name + ".csv", inputs.front().signal});
  return out;
}

ExperimentOutput run_bupu_check(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  const Bupu bupu = build_bupu(g);
  SweepReport rep("bupu-check", "check");
  rep.set_columns({"check", "measured", "tolerance"});
  auto row = [&](const std::string& name, double v, double tol) {
    rep.add_row(Json::array({name, v, tol}));
    rep.check_le(name, v, tol);
  };
  std::vector<double> sum(g.n(), 0.0);
  for (std::ptrdiff_t k = bupu.k_min(); k <= bupu.k_max(); ++k) {
    const auto mask = bupu.mask(k);
    for (std::size_t m = 0; m < g.n(); ++m) sum[m] += mask[m];
  }
  // Frequencies near the edge are also covered by blocks beyond the grid.
  double part = 0.0;
  for (std::size_t m = 0; m < g.n(); ++m) {
    double s = sum[m];
    for (std::ptrdiff_t k : {bupu.k_min() - 1, bupu.k_max() + 1}) s += Bupu::phi(g.xi(m) - static_cast<double>(k));
    part = std::max(part, std::abs(s - 1.0));
  }
  row("partition sum max error", part, 1e-12);
  row("|phi(0) - 1|", std::abs(Bupu::phi(0.0) - 1.0), 0.0);
  row("|phi(1)| + |phi(-1)|", std::abs(Bupu::phi(1.0)) + std::abs(Bupu::phi(-1.0)), 0.0);
  row("|phi(1/2) - 1/2|", std::abs(Bupu::phi(0.5) - 0.5), 1e-15);
  double range = 0.0;
  double plateau = 0.0;
  double outside = 0.0;
  for (std::size_t m = 0; m < g.n(); ++m) {
    const double xi = g.xi(m);
    const double v = bupu.profile()[m].real();
    range = std::max({range, -v, v - 1.0});
    if (std::abs(xi) <= Bupu::kPlateau) plateau = std::max(plateau, std::abs(v - 1.0));
    if (std::abs(xi) >= 1.0) outside = std::max(outside, std::abs(v));
  }
  row("profile outside [0, 1]", std::max(range, 0.0), 0.0);
  row("profile plateau error", plateau, 0.0);
  row("profile outside support", outside, 0.0);

  const auto corpus = standard_corpus(g, cfg.seed);
  double recon = 0.0;
  for (const auto& e : corpus) {
    const SampledSignal fhat = fourier_forward(e.signal);
    std::vector<cplx> acc(g.n());
    for (std::ptrdiff_t k = bupu.k_min(); k <= bupu.k_max(); ++k) {
      const SampledSignal b = frequency_block_from_spectrum(fhat, k, bupu);
      for (std::size_t j = 0; j < g.n(); ++j) acc[j] += b[j];
    }
    recon = std::max(recon, max_diff(SampledSignal(g, std::move(acc)), e.signal) / e.signal.sup_abs());
  }
  row("reconstruction relative error", recon, 1e-8);

  const SampledSignal inner_hat = SampledSignal::from_function(
      g, [](double xi) { return cplx(classic_bump(xi / 0.09)); }, Domain::Frequency);
  const SampledSignal inner = fourier_inverse(inner_hat);
  double others = 0.0;
  for (std::ptrdiff_t k = bupu.k_min(); k <= bupu.k_max(); ++k) {
    if (k != 0) others = std::max(others, frequency_block_from_spectrum(inner_hat, k, bupu).sup_abs());
  }
  row("plateau spectrum: block 0 error",
      max_diff(frequency_block_from_spectrum(inner_hat, 0, bupu), inner) / inner.sup_abs(), 1e-14);
  row("plateau spectrum: other blocks", others, 0.0);
  rep.set_summary("blocks", Json::array({bupu.k_min(), bupu.k_max()}));
  set_grid_summary(rep, g);
  return {std::move(rep), {}};
}

// ---------------------------------------------------------------- measures

ExperimentOutput run_rudin_shapiro(const RunConfig& cfg) {
  const long long max_m = cfg.param_int("m", 12);
  if (max_m < 0 || max_m > 20) throw InputError("m must lie in [0, 20]");
  const double p = cfg.param_double("p", 1.5);
  if (!(p >= 1.0 && p < 2.0)) throw InputError("p must lie in [1, 2)");
  SweepReport rep("rudin-shapiro", "m");
  rep.set_columns({"m", "atoms", "identity_rel_error", "mu_hat_sup_tv", "tv_bound",
                   "nu_hat_sup_lp", "lp_bound"});
  constexpr std::size_t kSamples = 4096;
  // one full period of a spacing-1 measure
  const double step = 2.0 * kPi / kSamples;
  const auto transform = [&](const DiscreteMeasure& mu) {
    return fourier_stieltjes_progression(mu, 0.0, step, kSamples);
  };
  double worst = 0.0;
  bool cardinality = true;
  bool flat_tv = true;
  bool flat_lp = true;
  bool equal_weights = true;
  for (int m = 0; m <= static_cast<int>(max_m); ++m) {
    const auto raw = rudin_shapiro(m, 1, RsNormalization::Raw);
    const auto mh = transform(raw.mu);
    const auto nh = transform(raw.nu);
    const double target = std::ldexp(2.0, m);
    double err = 0.0;
    for (std::size_t i = 0; i < kSamples; ++i) {
      const double v = mh[i].real() * mh[i].real() + mh[i].imag() * mh[i].imag() +
                       nh[i].real() * nh[i].real() + nh[i].imag() * nh[i].imag();
      err = std::max(err, std::abs(v - target) / target);
    }
    worst = std::max(worst, err);
    const std::size_t atoms = raw.mu.size();
    cardinality = cardinality && atoms == (std::size_t{1} << m) && raw.nu.size() == atoms;
    for (const auto& a : raw.mu.atoms()) equal_weights = equal_weights && std::abs(a.w) == 1.0;

    const auto tv = rudin_shapiro(m, 1, RsNormalization::TotalVariation);
    double sup_tv = 0.0;
    for (const auto& z : transform(tv.mu)) sup_tv = std::max(sup_tv, std::abs(z));
    const double tv_bound = std::exp2(0.5 * (1.0 - m));
    flat_tv = flat_tv && sup_tv <= tv_bound * (1.0 + 1e-12);

    const auto lp = rudin_shapiro(m, 1, RsNormalization::LpAtoms, p);
    double sup_lp = 0.0;
    for (const auto& z : transform(lp.nu)) sup_lp = std::max(sup_lp, std::abs(z));
    const double lp_bound = std::exp2(0.5 - m * (1.0 / p - 0.5));
    flat_lp = flat_lp && sup_lp <= lp_bound * (1.0 + 1e-12);
    rep.add_row(Json::array({m, atoms, err, sup_tv, tv_bound, sup_lp, lp_bound}));
  }
  rep.check_le("identity |mu^|^2 + |nu^|^2 = 2^{m+1} max rel error", worst, 1e-12);
  rep.check("support has 2^m points", cardinality, 0.0, 0.0, "exact");
  rep.check("raw weights are +-1", equal_weights, 0.0, 0.0, "exact");
  rep.check("|mu^|_inf <= 2^{(1-m)/2} after TV normalisation", flat_tv, 0.0, 1e-12, "relative");
  rep.check("|nu^|_inf <= 2^{1/2 - m(1/p - 1/2)} after l^p normalisation", flat_lp, 0.0, 1e-12,
            "relative");
  rep.check("disjointness spacing K=3, m=2 is 7", disjointness_spacing(3.0, 2) == 7,
            static_cast<double>(disjointness_spacing(3.0, 2)), 0.0, "== 7");
  rep.set_summary("samples", kSamples);
  rep.set_summary("p", p);
  return {std::move(rep), {}};
}

// ---------------------------------------------------------------- windows

ExperimentOutput run_plateau(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  SweepReport rep("plateau", "(t0, R)");
  rep.set_columns({"t0", "R", "conv_error", "plateau_error", "outside_max", "min_value",
                   "mass_error"});
  const std::vector<std::pair<double, double>> cases{{0.0, 1.0}, {2.0, 0.5}, {-3.0, 0.25}};
  for (const auto& [t0, R] : cases) {
    const PlateauWindow w = plateau_window(t0, R, g);
    const double conv = max_diff(convolve(w.psi1, w.psi2), w.psi);
    double plateau = 0.0, outside = 0.0, lowest = kInf;
    for (std::size_t j = 0; j < g.n(); ++j) {
      const double d = std::abs(g.x(j) - t0);
      const double v = w.psi[j].real();
      if (d <= R) plateau = std::max(plateau, std::abs(w.psi[j] - 1.0));
      if (d >= 5.0 * R + g.dx()) outside = std::max(outside, std::abs(w.psi[j]));
      lowest = std::min(lowest, v);
    }
    const auto integral = [&](const SampledSignal& s) {
      cplx a{};
      for (const auto& v : s.samples()) a += v;
      return a * g.dx();
    };
    const double mass = std::abs(integral(w.psi) - integral(w.psi1) * integral(w.psi2)) /
                        std::abs(integral(w.psi));
    const std::string tag = " (" + format_double(t0) + ", " + format_double(R) + ")";
    rep.check_le("psi = psi1 * psi2" + tag, conv, 1e-8);
    rep.check_le("psi = 1 on the inner ball" + tag, plateau, 1e-6);
    rep.check_le("psi = 0 beyond 5R + dx" + tag, outside, 1e-10);
    rep.check_ge("psi >= 0" + tag, lowest, -1e-10);
    rep.check_le("integral factorises" + tag, mass, 1e-8);
    rep.add_row(Json::array({t0, R, conv, plateau, outside, lowest, mass}));
  }
  set_grid_summary(rep, g);
  return {std::move(rep), {}};
}

ExperimentOutput run_translation_bound(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  const PlateauWindow w = plateau_window(0.0, cfg.param_double("R", 1.0), g);
  SweepReport rep("translation-bound", "(s, theta)");
  rep.set_columns({"s", "theta", "lhs", "rhs", "ratio", "split"});
  struct Point {
    double s, theta, lhs, rhs;
    bool fit;
  };
  std::vector<Point> pts;
  constexpr int kThetas = 21;  // 0.1 * 1.25^i covers [0.1, 8.7]
  double spread = 0.0;
  for (double s : {0.0, 0.5, 0.9}) {
    double lo = kInf, hi = 0.0;
    for (int i = 0; i < kThetas; ++i) {
      const double theta = 0.1 * std::pow(1.25, i);
      const TranslationBound b = translation_difference_bound(w, s, theta);
      pts.push_back({s, theta, b.lhs, b.rhs, i % 2 == 0});
      lo = std::min(lo, b.lhs / b.rhs);
      hi = std::max(hi, b.lhs / b.rhs);
    }
    spread = std::max(spread, hi / lo);
  }
  // One constant for the whole window, fitted on the even theta indices.
  double C = 0.0;
  for (const auto& p : pts) {
    if (p.fit) C = std::max(C, p.lhs / p.rhs);
  }
  double worst = 0.0;
  for (const auto& p : pts) {
    rep.add_row(Json::array({p.s, p.theta, p.lhs, p.rhs, p.lhs / p.rhs, p.fit ? "fit" : "test"}));
    if (!p.fit) worst = std::max(worst, p.lhs / (C * p.rhs));
  }
  rep.check_le("held-out lhs / (C rhs)", worst, 1.0);
  rep.check_le("ratio spread per s", spread, 2.5);
  const auto zero = translation_difference_bound(w, 0.5, 0.0);
  rep.check_le("theta = 0 gives lhs = 0", zero.lhs, 0.0);
  const auto plus = translation_difference_bound(w, 0.5, 1.7);
  const auto minus = translation_difference_bound(w, 0.5, -1.7);
  rep.check_le("lhs(theta) = lhs(-theta)", rel_diff(minus.lhs, plus.lhs), 1e-10);
  rep.set_summary("C_psi", C);
  rep.set_summary("support_radius", w.support_radius());
  rep.note("the fitted constant is the max of lhs/rhs over the even theta indices of all s");
  set_grid_summary(rep, g);
  return {std::move(rep), {}};
}

// ---------------------------------------------------------------- dilation

ExperimentOutput run_dilation(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  const SampledSignal tau = localising_cutoff(Grid(512, 8.0));
  const NormSpec spec = spec_from_params(cfg, NormSpec::modulation(2.0, 1.0, 0.0));
  const double x0 = cfg.param_double("x0", 0.5);
  SweepReport rep("dilation", "lambda");
  rep.set_columns({"lambda", "gaussian", "linear", "linear_ratio"});
  const SampledSignal f = gaussian(g);
  const SampledSignal lin =
      SampledSignal::from_function(g, [](double x) { return cplx(x * std::exp(-x * x / 128.0)); });
  std::vector<double> gv;
  double prev_lin = 0.0;
  double worst_rate = 0.0;
  for (double lam = 1.0; lam <= 256.0; lam *= 2.0) {
    const double a = dilation_difference_norm(f, x0, tau, lam, spec);
    const double b = dilation_difference_norm(lin, 0.0, tau, lam, spec);
    Json ratio = nullptr;
    if (prev_lin > 0.0) {
      ratio = b / prev_lin;
      if (lam >= 8.0) worst_rate = std::max(worst_rate, std::abs(b / prev_lin - 0.5) / 0.5);
    }
    rep.add_row(Json::array({lam, a, b, ratio}));
    gv.push_back(a);
    prev_lin = b;
  }
  double rise = 0.0;
  for (std::size_t i = 1; i < gv.size(); ++i) rise = std::max(rise, gv[i] / gv[i - 1]);
  rep.check_le("gaussian sweep decreasing (5% slack)", rise, 1.05);
  rep.check_le("gaussian last / first", gv.back() / gv.front(), 0.01);
  rep.check_le("linear halving rate error for lambda >= 8", worst_rate, 0.1);
  const SampledSignal c = SampledSignal::from_function(g, [](double) { return cplx(3.0); });
  rep.check_le("constant f", dilation_difference_norm(c, x0, tau, 4.0, spec), 1e-12);
  rep.set_summary("x0", x0);
  rep.set_summary("spec", spec.to_json());
  set_grid_summary(rep, g);
  return {std::move(rep), {}};
}

ExperimentOutput run_ditkin(const RunConfig& cfg) {
  const double eps = cfg.param_double("eps", 2e-2);
  SweepReport rep("ditkin", "lambda");
  rep.set_columns({"signal", "lambda", "residual"});
  const Grid local(8192, 4.0);
  const NormSpec spec = NormSpec::modulation(1.0, 1.0, 0.5);
  const DitkinResult r = point_ditkin_window(gaussian(local), 0.0, spec, eps);
  for (const auto& [lam, res] : r.history) rep.add_row(Json::array({"gaussian", lam, res}));
  rep.check_le("gaussian residual below eps", r.residual, eps);
  rep.check("window is 1 on the reported neighbourhood",
            r.window[nearest_index(local, 0.5 * r.neighborhood)].real() == 1.0, r.neighborhood,
            0.0, "exact");

  const Grid wide(8192, 10.0);
  const SampledSignal lin = SampledSignal::from_function(wide, [](double x) { return cplx(x); });
  const DitkinResult rl = point_ditkin_window(lin, 0.0, NormSpec::modulation(1.0, 1.0, 0.0), 0.7);
  double rate = 0.0;
  for (std::size_t i = 0; i < rl.history.size(); ++i) {
    rep.add_row(Json::array({"linear", rl.history[i].first, rl.history[i].second}));
    if (i >= 2) rate = std::max(rate, std::abs(rl.history[i].second / rl.history[i - 1].second - 0.5) / 0.5);
  }
  rep.check_le("linear residual halving rate error", rate, 0.15);
  const SampledSignal one = SampledSignal::from_function(local, [](double) { return cplx(1.0); });
  rep.check_le("constant f residual", point_ditkin_window(one, 0.0, spec, 1e-6).residual, 0.0);
  rep.set_summary("lambda", r.lambda);
  rep.set_summary("neighborhood", r.neighborhood);
  rep.set_summary("eps", eps);
  rep.note("gaussian on n = 8192, L = 4; linear on n = 8192, L = 10");
  return {std::move(rep), {}};
}

// ---------------------------------------------------------------- composition

void add_composition_row(SweepReport& rep, const CompositionResult& r, double tol) {
  rep.add_row(Json::array({r.function, r.K.lo, r.K.hi, r.patches.size(), r.max_truncation,
                           r.max_tail_bound, r.sup_error, r.partition_error, r.norm_value}));
  rep.check_le(r.function + " on [" + format_double(r.K.lo) + ", " + format_double(r.K.hi) +
                   "] sup error",
               r.sup_error, r.max_tail_bound + tol);
}

const std::vector<std::string> kComposeColumns{"F", "K_lo", "K_hi", "patches", "truncation",
                                               "tail_bound", "sup_error", "partition_error",
                                               "norm"};

ExperimentOutput run_compose(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  const NormSpec spec = spec_from_params(cfg, NormSpec::modulation(2.0, 1.0, 0.0));
  const double c_hat = std::max(1.0, cfg.param_double("c_hat", 1.0));
  SweepReport rep("compose", "F");
  rep.set_columns(kComposeColumns);
  const SampledSignal f = gaussian(g);
  std::vector<std::pair<std::string, double>> global{
      {"identity", 1e-9}, {"square", 1e-7}, {"mobius", 1e-7}, {"expm1", 1e-7}};
  const std::string only = cfg.param_string("F", "");
  ExperimentOutput out{SweepReport("compose", "F"), {}};
  for (const auto& [name, tol] : global) {
    if (!only.empty() && only != name) continue;
    const CompositionResult r = global_compose(f, analytic_function_by_name(name), spec, c_hat);
    add_composition_row(rep, r, tol);
    out.signals.push_back({"compose_" + name + ".csv", r.g});
  }
  const SampledSignal h = SampledSignal::from_function(g, [](double x) { return cplx(2.0 + std::sin(x)); });
  for (const std::string name : {"square", "reciprocal"}) {
    if (!only.empty() && only != name) continue;
    const CompositionResult r =
        compose_on_compact(h, Interval{-3.0, 3.0}, analytic_function_by_name(name), spec, c_hat);
    add_composition_row(rep, r, 1e-7);
    rep.check_le(name + " partition of unity error", r.partition_error, 1e-10);
  }
  if (rep.rows().empty()) throw InputError("unknown function '" + only + "'");
  rep.set_summary("spec", spec.to_json());
  rep.set_summary("c_hat", c_hat);
  rep.note("global compositions act on e^{-x^2/2}; compact ones on 2 + sin x");
  set_grid_summary(rep, g);
  out.report = std::move(rep);
  return out;
}

ExperimentOutput run_reciprocal(const RunConfig& cfg) {
  const long long over = cfg.param_int("oversample", 4);
  if (over < 1 || over > 64) throw InputError("oversample must lie in [1, 64]");
  const Grid g(cfg.n * static_cast<std::size_t>(over), cfg.L);
  const NormSpec spec = spec_from_params(cfg, NormSpec::modulation(1.0, 1.0, 0.0));
  // The measured algebra ratios stay below 1; the bound c >= 1 is kept.
  const double c_hat = std::max(1.0, cfg.param_double("c_hat", 1.0));
  const Interval K{cfg.param_double("K_lo", -5.0), cfg.param_double("K_hi", 5.0)};
  SweepReport rep("reciprocal", "grid");
  rep.set_columns({"F", "n", "patches", "max_lambda", "truncation", "tail_bound", "sup_fg_minus_1",
                   "norm"});
  auto make = [](const Grid& gr) {
    return SampledSignal::from_function(gr, [](double x) { return cplx(2.0 + std::sin(x)); });
  };
  const auto residual = [&](const SampledSignal& f, const SampledSignal& r) {
    double e = 0.0;
    for (std::size_t j = 0; j < f.size(); ++j) {
      const double x = f.grid().x(j);
      if (x >= K.lo && x <= K.hi) e = std::max(e, std::abs(f[j] * r[j] - 1.0));
    }
    return e;
  };
  const auto record = [&](const Grid& gr) {
    const SampledSignal f = make(gr);
    CompositionResult r = reciprocal_on_compact(f, K, spec, c_hat);
    double lam = 0.0;
    for (const auto& p : r.patches) lam = std::max(lam, p.lambda);
    const double e = residual(f, r.g);
    rep.add_row(Json::array({"reciprocal", gr.n(), r.patches.size(), lam, r.max_truncation,
                             r.max_tail_bound, e, r.norm_value}));
    rep.check_le("sup |fg - 1| on K at n = " + std::to_string(gr.n()), e, 1e-6);
    return r;
  };
  const CompositionResult coarse = record(g);
  const CompositionResult fine = record(g.refined());
  rep.check_le("norm refinement change", rel_diff(fine.norm_value, coarse.norm_value), 0.05);

  const Grid base = cfg.grid();
  const CompositionResult sq = global_compose(gaussian(base), square_function(), spec, c_hat);
  rep.add_row(Json::array({"square (global)", base.n(), sq.patches.size(), sq.global_lambda,
                           sq.max_truncation, sq.max_tail_bound, sq.sup_error, sq.norm_value}));
  rep.check_le("global z^2 sup error", sq.sup_error, 1e-7);
  rep.set_summary("spec", spec.to_json());
  rep.set_summary("c_hat", c_hat);
  rep.set_summary("K", Json::array({K.lo, K.hi}));
  rep.note("f = 2 + sin x on a grid oversampled by " + std::to_string(over) +
           " so the patch dilations fit; refinement doubles n again");
  rep.note("last column of the global row is the norm of g; its lambda column is the approximate-unit dilation");
  ExperimentOutput out{std::move(rep), {}};
  out.signals.push_back({"reciprocal_g.csv", coarse.g});
  return out;
}

// ---------------------------------------------------------------- sweeps

ExperimentOutput run_approx_unit(const RunConfig& cfg) {
  const Grid g = cfg.grid();
  const NormSpec spec = spec_from_params(cfg, NormSpec::modulation(1.0, 1.0, 0.5));
  const double width = cfg.param_double("width", 2.0);
  std::vector<double> lambdas;
  for (int i = 0; i <= 6; ++i) lambdas.push_back(std::ldexp(1.0, -i));
  SweepReport rep = approximate_unit_sweep(gaussian(g, width), spec, lambdas);

  // Support inside the plateau of psi_lambda for lambda <= 1/4.
  const SampledSignal bump =
      SampledSignal::from_function(g, [](double x) { return cplx(classic_bump(x / 3.0)); });
  const Bupu bupu = build_bupu(g);
  double absorbed = 0.0;
  for (double lam : {0.25, 0.125}) {
    absorbed = std::max(absorbed, norm(bump - bump * dilated_plateau(g, lam), spec, bupu));
  }
  rep.check_le("compact f inside the plateau", absorbed, 1e-10);
  rep.set_summary("width", width);
  set_grid_summary(rep, g);
  return {std::move(rep), {}};
}

ExperimentOutput run_embedding(const RunConfig& cfg) {
  using S = NormSpec;
  const std::vector<EmbeddingPair> pairs{
      {S::modulation(1, 1, 1), S::modulation(2, 1, 0)},
      {S::modulation(1, 1, 0.5), S::fourier_beurling(0.5)},
      {S::modulation(2, 1, 0.5), S::fourier_beurling(0.5)},
      {S::modulation(2, 1, 0), S::fourier_beurling(0), true},
      {S::fourier_beurling(0), S::modulation(2, 1, 0), true},
      {S::fourier_beurling(0.5), S::modulation(1, 1, 0.5)},
      {S::modulation(2, 2, 0), S::lebesgue(2)},
      {S::lebesgue(2), S::modulation(2, 2, 0)},
  };
  return {embedding_sweep(cfg.grid(), cfg.seed, pairs), {}};
}

ExperimentOutput run_algebra(const RunConfig& cfg) {
  using S = NormSpec;
  std::vector<NormSpec> specs{S::modulation(1, 1, 0), S::modulation(2, 1, 0),
                              S::modulation(1, 1, 0.5), S::modulation(2, 2, 1)};
  if (cfg.has("p") || cfg.has("q") || cfg.has("s")) {
    specs = {spec_from_params(cfg, S::modulation(2, 1, 0))};
  }
  return {algebra_sweep(cfg.grid(), cfg.seed, specs), {}};
}

ExperimentOutput run_counterexample_flat(const RunConfig& cfg) {
  FlatOptions opts;
  opts.phi_width = cfg.param_double("phi_width", opts.phi_width);
  opts.k_eta = cfg.param_double("k_eta", opts.k_eta);
  if (cfg.has("p") || cfg.has("m") || cfg.has("r")) {
    FlatCase c;
    c.p = cfg.param_double("p", 1.0);
    c.m = static_cast<int>(cfg.param_int("m", c.p == 1.0 ? 4 : 2));
    c.r = static_cast<int>(cfg.param_int("r", c.p == 1.0 ? 4 : 6));
    opts.cases = {c};
  }
  opts.scaling_run = cfg.param_bool("scaling", true);
  return {counterexample_flat(opts), {}};
}

ExperimentOutput run_counterexample_l2(const RunConfig& cfg) {
  const long long k0 = cfg.param_int("k0", 3);
  const auto checkpoints = cfg.param_list("checkpoints", {1e3, 1e6, 1e12});
  return {counterexample_l2(k0, checkpoints), {}};
}

}  // namespace

bool corpus_entry_is_compact(const CorpusEntry& e) { return e.name.rfind("bump", 0) == 0; }

SweepReport approximate_unit_sweep(const SampledSignal& f, const NormSpec& spec,
                                   const std::vector<double>& lambdas, double final_fraction) {
  if (lambdas.empty()) throw InputError("no dilation parameters");
  const Bupu bupu = build_bupu(f.grid());
  const double fn = norm(f, spec, bupu);
  if (fn == 0.0) throw InputError("approximate unit sweep needs f != 0");
  SweepReport rep("approx-unit", "lambda");
  rep.set_columns({"lambda", "residual", "relative"});
  std::vector<double> res;
  for (double lam : lambdas) {
    const double r = norm(f - f * dilated_plateau(f.grid(), lam), spec, bupu);
    res.push_back(r);
    rep.add_row(Json::array({lam, r, r / fn}));
  }
  double rise = 0.0;
  for (std::size_t i = 1; i < res.size(); ++i) {
    if (res[i] > 0.0) rise = std::max(rise, res[i] / res[i - 1]);
  }
  rep.check_le("residuals decreasing (5% slack)", rise, 1.05);
  rep.check_le("final residual / |f|", res.back() / fn, final_fraction);
  rep.set_summary("spec", spec.to_json());
  rep.set_summary("norm_f", fn);
  return rep;
}

SweepReport embedding_sweep(const Grid& grid, std::uint64_t seed,
                            const std::vector<EmbeddingPair>& pairs) {
  SweepReport rep("embedding-sweep", "pair");
  rep.set_columns({"from", "to", "corpus_max", "refined_max", "argmax", "relative_change"});
  const Grid grids[2] = {grid, grid.refined()};
  // norms[level][spec label][entry]
  std::vector<std::vector<std::vector<double>>> norms(2);
  std::vector<NormSpec> specs;
  for (const auto& p : pairs) {
    for (const NormSpec& s : {p.from, p.to}) {
      if (std::find(specs.begin(), specs.end(), s) == specs.end()) specs.push_back(s);
    }
  }
  std::vector<CorpusEntry> names;
  for (int level = 0; level < 2; ++level) {
    const auto corpus = standard_corpus(grids[level], seed);
    const Bupu bupu = build_bupu(grids[level]);
    if (level == 0) names = corpus;
    for (const auto& s : specs) {
      std::vector<double> v;
      for (const auto& e : corpus) v.push_back(norm(e.signal, s, bupu));
      norms[level].push_back(std::move(v));
    }
  }
  auto index_of = [&](const NormSpec& s) {
    return static_cast<std::size_t>(std::find(specs.begin(), specs.end(), s) - specs.begin());
  };
  for (const auto& p : pairs) {
    double mx[2] = {0.0, 0.0};
    std::string arg;
    for (int level = 0; level < 2; ++level) {
      const auto& from = norms[level][index_of(p.from)];
      const auto& to = norms[level][index_of(p.to)];
      for (std::size_t i = 0; i < names.size(); ++i) {
        if (p.compact_only && !corpus_entry_is_compact(names[i])) continue;
        const double r = to[i] / from[i];
        if (r > mx[level]) {
          mx[level] = r;
          if (level == 0) arg = names[i].name;
        }
      }
    }
    const std::string tag = p.from.label() + " -> " + p.to.label() + (p.compact_only ? " (compact)" : "");
    const double change = rel_diff(mx[1], mx[0]);
    rep.add_row(Json::array({p.from.label(), p.to.label() + (p.compact_only ? " (compact)" : ""), mx[0],
                             mx[1], arg, change}));
    rep.check("finite ratio " + tag, std::isfinite(mx[0]) && mx[0] > 0.0, mx[0], 0.0, "finite");
    rep.check_le("refinement change " + tag, change, 0.05);
  }
  set_grid_summary(rep, grid);
  return rep;
}

SweepReport algebra_sweep(const Grid& grid, std::uint64_t seed, const std::vector<NormSpec>& specs) {
  for (const auto& s : specs) {
    if (s.space != Space::Modulation || !in_algebra_regime(s)) {
      throw InputError("algebra sweep needs modulation specs in the algebra regime: " + s.label());
    }
  }
  SweepReport rep("algebra-sweep", "spec");
  rep.set_columns({"spec", "c_hat", "c_hat_refined", "argmax", "relative_change", "c_used"});
  Json exported = Json::object();
  const Grid grids[2] = {grid, grid.refined()};
  std::vector<std::vector<double>> c(specs.size(), std::vector<double>(2, 0.0));
  std::vector<std::string> arg(specs.size());
  double self_gap = 0.0;
  double homog = 0.0;
  for (int level = 0; level < 2; ++level) {
    const auto corpus = standard_corpus(grids[level], seed);
    const Bupu bupu = build_bupu(grids[level]);
    const std::size_t N = corpus.size();
    for (std::size_t si = 0; si < specs.size(); ++si) {
      const NormSpec& s = specs[si];
      std::vector<double> nf;
      for (const auto& e : corpus) nf.push_back(norm(e.signal, s, bupu));
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j : {i, (i + 1) % N}) {
          const double r = norm(corpus[i].signal * corpus[j].signal, s, bupu) / (nf[i] * nf[j]);
          if (r > c[si][level]) {
            c[si][level] = r;
            if (level == 0) arg[si] = corpus[i].name + " x " + corpus[j].name;
          }
          if (level == 0 && i == j) self_gap = std::min(self_gap, c[si][0] - r);
        }
      }
      if (level == 0 && si == 0) {
        const double a = algebra_ratio(corpus[0].signal, corpus[1].signal, s, bupu);
        const double b = algebra_ratio(corpus[0].signal.scaled(3.0), corpus[1].signal.scaled(0.5), s, bupu);
        homog = rel_diff(b, a);
      }
    }
  }
  for (std::size_t si = 0; si < specs.size(); ++si) {
    const double change = rel_diff(c[si][1], c[si][0]);
    const double used = std::max(1.0, c[si][0]);
    rep.add_row(Json::array({specs[si].label(), c[si][0], c[si][1], arg[si], change, used}));
    rep.check("finite c_hat " + specs[si].label(), std::isfinite(c[si][0]) && c[si][0] > 0.0,
              c[si][0], 0.0, "finite");
    rep.check_le("refinement change " + specs[si].label(), change, 0.1);
    exported[specs[si].label()] = c[si][0];
  }
  rep.check_ge("c_hat >= ratio(f, f)", self_gap, 0.0);
  rep.check_le("ratio invariant under rescaling", homog, 1e-12);
  rep.set_summary("c_hat", exported);
  rep.note("pairs (f, f) and (f, next) over the corpus; composition uses max(1, c_hat)");
  set_grid_summary(rep, grid);
  return rep;
}

const std::vector<Experiment>& experiment_registry() {
  static const std::vector<Experiment> registry{
      {"fourier", "F f(ξ) = ∫ f(x) e^{−ixξ} dx", "transform, round trip, Parseval, convolution",
       run_fourier},
      {"stft", "e^{−i x ξ} (f ∗ M_ξ φ*)(x)", "closed form, covariances, L2 identity ratio",
       run_stft},
      {"moyal", "we have Moyals Equation", "Moyal residual over the corpus", run_moyal},
      {"norm", "is finite (with usual modification", "norms of a signal or the corpus", run_norm},
      {"bupu-check", "characterization of the modulation spaces using BUPUs",
       "partition sum and block reconstruction", run_bupu_check},
      {"rudin-shapiro", "μ_j = μ_{j−1} + ν_{j−1} ∗ δ_{N_j}", "flat measures and their identity",
       run_rudin_shapiro},
      {"plateau", "ψ = ψ⁽¹⁾ ∗ ψ⁽²⁾", "plateau window invariants", run_plateau},
      {"translation-bound", "max_{|t|≤R}|e^{iϑt}−1|", "fitted constant with held-out check",
       run_translation_bound},
      {"dilation", "G^λ_{x₀}(x) = (f(x₀ + x/λ) − f(x₀)) τ(x)", "lambda sweep of the dilation norm",
       run_dilation},
      {"ditkin", "τ(x)=1 in some neighborhood", "point windows with small residual", run_ditkin},
      {"compose", "power series expansion", "F o f for the implemented F", run_compose},
      {"reciprocal", "F(z) = 1/z is analytic", "1/f on a compact set", run_reciprocal},
      {"approx-unit", "‖f − φf‖_{M_s^{p,q}} < ε", "dilated plateau approximate unit",
       run_approx_unit},
      {"embedding-sweep", "chain of continuous embeddings", "corpus max of embedding ratios",
       run_embedding},
      {"algebra-sweep", "are multiplication algebra", "empirical algebra constants", run_algebra},
      {"counterexample-flat", "f̂ = μ∗(ν̂φ)", "flat counterexample for p < 2",
       run_counterexample_flat},
      {"counterexample-l2", "f̂(ξ) = Σ χ_{I_k}(ξ)/k", "block series for p = 2",
       run_counterexample_l2},
  };
  return registry;
}

const Experiment& find_experiment(const std::string& name) {
  for (const auto& e : experiment_registry()) {
    if (e.name == name) return e;
  }
  throw InputError("unknown experiment '" + name + "'");
}

}  // namespace modspace
