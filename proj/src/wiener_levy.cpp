#include "modspace/wiener_levy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "modspace/bupu.hpp"
#include "modspace/error.hpp"
#include "modspace/smooth.hpp"

namespace modspace {

PlateauProfile::PlateauProfile(double R, int nodes) : R_(R) {
  if (!(R > 0.0) || nodes < 8) throw InputError("plateau profile needs R > 0");
  // psi2 lives on [-R, R]; midpoint nodes there.
  const double h = 2.0 * R / nodes;
  double total = 0.0;
  for (int i = 0; i < nodes; ++i) {
    const double y = -R + (i + 0.5) * h;
    const double w = plateau_bump(2.0 * y, R, 2.0 * R);
    y_.push_back(y);
    w_.push_back(w);
    total += w;
  }
  for (auto& w : w_) w /= total;
}

double PlateauProfile::operator()(double u) const {
  const double a = std::abs(u);
  if (a <= R_) return 1.0;
  if (a >= 5.0 * R_) return 0.0;
  double acc = 0.0;
  // psi is even; evaluating at |u| keeps that exact.
  for (std::size_t i = 0; i < y_.size(); ++i) {
    acc += w_[i] * plateau_bump(0.5 * (a - y_[i]), R_, 2.0 * R_);
  }
  return acc;
}

double PlateauWindow::support_radius() const { return std::max(4.0 * R, R + std::abs(t0)); }

PlateauWindow plateau_window(double t0, double R, const Grid& grid) {
  if (!(R > 0.0)) throw InputError("plateau radius must be positive");
  if (!(5.0 * R + std::abs(t0) < 0.5 * grid.half_width())) {
    throw BudgetError("plateau window needs 5R + |t0| < L/2; domain too small");
  }
  const auto g = [R](double x) { return plateau_bump(x, R, 2.0 * R); };
  SampledSignal psi1 = SampledSignal::from_function(grid, [&](double x) { return cplx(g(0.5 * x)); });
  SampledSignal raw2 =
      SampledSignal::from_function(grid, [&](double x) { return cplx(g(2.0 * (x - t0))); });
  double mass = 0.0;
  for (const auto& v : raw2.samples()) mass += v.real();
  mass *= grid.dx();
  SampledSignal psi2 = raw2.scaled(1.0 / mass);
  SampledSignal psi = convolve(psi1, psi2);
  return PlateauWindow{std::move(psi1), std::move(psi2), std::move(psi), t0, R};
}

TranslationBound translation_difference_bound(const PlateauWindow& w, double s, double theta) {
  if (!(s >= 0.0 && s < 1.0)) throw InputError("translation bound needs 0 <= s < 1");
  const SampledSignal diff =
      w.psi.mapped([theta](double x, cplx v) { return (std::polar(1.0, theta * x) - 1.0) * v; });
  const double lhs = weighted_lp_norm(fourier_forward(diff), 1.0, s);
  const double R0 = w.support_radius();
  const double arg = std::min(std::abs(theta) * R0, kPi);
  const double osc = 2.0 * std::sin(0.5 * arg);  // max_{|t|<=R0} |e^{i theta t} - 1|
  const double rhs = (theta == 0.0) ? 0.0 : std::pow(std::abs(theta), s) * std::pow(osc, 1.0 - s);
  return {lhs, rhs};
}

double localising_cutoff(double y) { return plateau_bump(y, 1.0, 2.0); }

SampledSignal localising_cutoff(const Grid& grid) {
  return SampledSignal::from_function(grid, [](double y) { return cplx(localising_cutoff(y)); });
}

namespace {

bool inside(const Grid& g, double x) { return x >= -g.half_width() && x < g.half_width(); }

Bupu bupu_for(const Grid& g) { return build_bupu(g); }

}  // namespace

double dilation_difference_norm(const SampledSignal& f, double x0, const SampledSignal& tau,
                                double lambda, const NormSpec& spec) {
  if (!(lambda > 0.0)) throw InputError("dilation parameter must be positive");
  const Grid& aux = tau.grid();
  std::vector<double> pts;
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < aux.n(); ++j) {
    if (tau[j] == cplx(0.0)) continue;
    const double x = x0 + aux.x(j) / lambda;
    if (!inside(f.grid(), x)) {
      throw BudgetError("resampling point " + format_double(x) + " leaves the signal domain");
    }
    pts.push_back(x);
    idx.push_back(j);
  }
  const cplx z0 = band_limited_eval(f, x0);
  std::vector<cplx> G(aux.n());
  if (!idx.empty()) {
    const std::vector<cplx> vals = band_limited_eval_progression(
        f, pts.front(), aux.dx() / lambda, idx.back() - idx.front() + 1);
    for (std::size_t j : idx) G[j] = (vals[j - idx.front()] - z0) * tau[j];
  }
  return norm(SampledSignal(aux, std::move(G)), spec, bupu_for(aux));
}

LocalPatch local_compose(const SampledSignal& f, double x0, const PowerSeries& F,
                         const NormSpec& spec, double c_hat, const ComposeOptions& opts) {
  spec.validate();
  if (!(c_hat > 0.0)) throw InputError("algebra constant must be positive");
  const Grid& grid = f.grid();
  const cplx z0 = band_limited_eval(f, x0);
  if (std::abs(z0 - F.center()) > 1e-10 * std::max(1.0, std::abs(z0))) {
    throw InputError("power series is not centred at f(x0)");
  }
  const SampledSignal tau = localising_cutoff(Grid(opts.aux_n, opts.aux_L));
  const double threshold = F.radius() / (opts.safety * c_hat);
  const double lambda_max = 1.0 / (4.0 * grid.dx());
  double lambda = std::max(1.0, opts.lambda_start);
  double dn = kInf;
  std::string trail;
  for (;; lambda *= 2.0) {
    if (lambda > lambda_max) {
      throw BudgetError("local composition at x0 = " + format_double(x0) +
                        ": lambda budget exhausted (" + trail + "threshold " +
                        format_double(threshold) + ")");
    }
    if (!inside(grid, x0 - 2.0 / lambda) || !inside(grid, x0 + 2.0 / lambda)) continue;
    dn = dilation_difference_norm(f, x0, tau, lambda, spec);
    trail += "lambda " + format_double(lambda) + " -> " + format_double(dn) + "; ";
    if (dn < threshold) break;
  }
  LocalPatch patch;
  patch.center = x0;
  patch.lambda = lambda;
  patch.radius = 0.5 / lambda;
  patch.dilation_norm = dn;
  const std::size_t n = grid.n();
  std::vector<cplx> tx(n);
  std::vector<cplx> G(n);
  double sup = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    tx[j] = localising_cutoff(lambda * (grid.x(j) - x0));
    G[j] = (f[j] - z0) * tx[j];
    sup = std::max(sup, std::abs(G[j]));
  }
  patch.truncation = F.truncation_for(sup, opts.series_tol);
  patch.tail_bound = F.tail_bound(sup, patch.truncation);
  const std::vector<cplx> c = F.coefficients(patch.truncation);
  std::vector<cplx> g(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx acc{};
    for (int k = patch.truncation; k >= 1; --k) acc = (acc + c[static_cast<std::size_t>(k - 1)]) * G[j];
    g[j] = F.constant() * tx[j] + acc;
  }
  patch.g = SampledSignal(grid, std::move(g));
  patch.chi = SampledSignal::from_function(
      grid, [&](double x) { return cplx(localising_cutoff(2.0 * lambda * (x - x0))); });
  return patch;
}

GlueResult glue_local(const SampledSignal& f, Interval K, const std::vector<LocalPatch>& patches) {
  if (patches.empty()) throw InputError("gluing needs at least one patch");
  const Grid& grid = f.grid();
  for (const auto& p : patches) {
    if (!(p.g.grid() == grid) || !(p.chi.grid() == grid)) {
      throw StructuralError("patch lives on a different grid");
    }
  }
  for (std::size_t j = 0; j < grid.n(); ++j) {
    const double x = grid.x(j);
    if (x < K.lo || x > K.hi) continue;
    const bool covered = std::any_of(patches.begin(), patches.end(), [x](const LocalPatch& p) {
      return std::abs(x - p.center) <= p.radius;
    });
    if (!covered) throw InputError("patches do not cover K at x = " + format_double(x));
  }
  std::vector<cplx> g(grid.n());
  std::vector<double> rest(grid.n(), 1.0);  // prod_{i<j} (1 - chi_i)
  for (const auto& p : patches) {
    for (std::size_t j = 0; j < grid.n(); ++j) {
      const double chi = p.chi[j].real();
      g[j] += chi * rest[j] * p.g[j];
      rest[j] *= 1.0 - chi;
    }
  }
  double err = 0.0;
  for (std::size_t j = 0; j < grid.n(); ++j) {
    const double x = grid.x(j);
    if (x >= K.lo && x <= K.hi) err = std::max(err, std::abs(rest[j]));
  }
  return {SampledSignal(grid, std::move(g)), err};
}

RangeCheck check_range(const AnalyticFunction& F, const SampledSignal& f, Interval K) {
  RangeCheck rc;
  double lo_re = kInf, hi_re = -kInf, lo_im = kInf, hi_im = -kInf;
  std::vector<cplx> vals;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double x = f.grid().x(j);
    if (x < K.lo || x > K.hi) continue;
    vals.push_back(f[j]);
    lo_re = std::min(lo_re, f[j].real());
    hi_re = std::max(hi_re, f[j].real());
    lo_im = std::min(lo_im, f[j].imag());
    hi_im = std::max(hi_im, f[j].imag());
  }
  if (vals.empty()) throw InputError("K contains no grid points");
  const double diam = std::hypot(hi_re - lo_re, hi_im - lo_im);
  rc.margin = 0.1 * (1.0 + diam);
  for (const auto& s : F.singularities) {
    for (const auto& z : vals) rc.min_distance = std::min(rc.min_distance, std::abs(z - s));
  }
  rc.ok = rc.min_distance > rc.margin;
  return rc;
}

Json CompositionResult::to_json() const {
  Json j;
  j["F"] = function;
  j["K"] = Json::array({K.lo, K.hi});
  j["lambda_per_patch"] = Json::array();
  for (const auto& p : patches) j["lambda_per_patch"].push_back(p.lambda);
  j["global_lambda"] = global_lambda;
  j["truncation_J"] = max_truncation;
  j["tail_bound"] = max_tail_bound;
  j["sup_error"] = sup_error;
  j["partition_error"] = partition_error;
  j["norm_value"] = norm_value;
  return j;
}

namespace {

double sup_error_on(const SampledSignal& g, const SampledSignal& f, const AnalyticFunction& F,
                    Interval K) {
  double err = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double x = f.grid().x(j);
    if (x < K.lo || x > K.hi) continue;
    err = std::max(err, std::abs(g[j] - F.eval(f[j])));
  }
  return err;
}

}  // namespace

CompositionResult compose_on_compact(const SampledSignal& f, Interval K, const AnalyticFunction& F,
                                     const NormSpec& spec, double c_hat,
                                     const ComposeOptions& opts) {
  if (!(K.lo < K.hi)) throw InputError("K must be a nonempty interval");
  const RangeCheck rc = check_range(F, f, K);
  if (!rc.ok) {
    throw InputError(F.name + " is not analytic on the sampled range of f plus margin (distance " +
                     format_double(rc.min_distance) + ", margin " + format_double(rc.margin) +
                     ")");
  }
  CompositionResult res;
  res.function = F.name;
  res.K = K;
  double c = K.lo;
  ComposeOptions local = opts;
  for (;;) {
    const cplx z0 = band_limited_eval(f, c);
    res.patches.push_back(local_compose(f, c, F.expand(z0), spec, c_hat, local));
    const LocalPatch& p = res.patches.back();
    // Neighbouring patches need similar lambda; start one doubling below.
    local.lambda_start = std::max(opts.lambda_start, 0.5 * p.lambda);
    res.max_tail_bound = std::max(res.max_tail_bound, p.tail_bound);
    res.max_truncation = std::max(res.max_truncation, p.truncation);
    if (c + p.radius >= K.hi) break;
    c += p.radius;
  }
  GlueResult glued = glue_local(f, K, res.patches);
  res.g = std::move(glued.g);
  res.partition_error = glued.partition_error;
  res.sup_error = sup_error_on(res.g, f, F, K);
  res.norm_value = norm(res.g, spec, build_bupu(f.grid()));
  return res;
}

CompositionResult reciprocal_on_compact(const SampledSignal& f, Interval K, const NormSpec& spec,
                                        double c_hat, const ComposeOptions& opts) {
  for (std::size_t j = 0; j < f.size(); ++j) {
    const double x = f.grid().x(j);
    if (x >= K.lo && x <= K.hi && f[j] == cplx(0.0)) {
      throw InputError("f vanishes on K at x = " + format_double(x));
    }
  }
  return compose_on_compact(f, K, reciprocal_function(), spec, c_hat, opts);
}

CompositionResult global_compose(const SampledSignal& f, const AnalyticFunction& F,
                                 const NormSpec& spec, double c_hat,
                                 const ComposeOptions& opts) {
  const PowerSeries P0 = F.expand(cplx(0.0));
  if (std::abs(P0.constant()) > 1e-14) throw InputError("global composition needs F(0) = 0");
  const Grid& grid = f.grid();
  const Bupu bupu = build_bupu(grid);
  const double L = grid.half_width();
  const double threshold = P0.radius() / (opts.safety * c_hat);
  // tau0 = tau(lambda x / 5) is supported in |x| <= 10 / lambda.
  double lambda = std::exp2(std::ceil(std::log2(std::max(1.0, 12.5 / L))));
  SampledSignal rest = f;
  bool found = false;
  for (; 10.0 / lambda <= 0.8 * L; lambda *= 0.5) {
    rest = f - f * dilated_plateau(grid, lambda);
    if (norm(rest, spec, bupu) < threshold) {
      found = true;
      break;
    }
  }
  if (!found) {
    throw BudgetError("tail condition for " + F.name + " unachievable on this grid");
  }
  const double sup = rest.sup_abs();
  const int J = P0.truncation_for(sup, opts.series_tol);
  const std::vector<cplx> c = P0.coefficients(J);
  std::vector<cplx> g0(grid.n());
  for (std::size_t j = 0; j < grid.n(); ++j) {
    cplx acc{};
    for (int k = J; k >= 1; --k) acc = (acc + c[static_cast<std::size_t>(k - 1)]) * rest[j];
    g0[j] = acc;
  }
  const Interval K{-10.0 / lambda, 10.0 / lambda};
  CompositionResult res = compose_on_compact(f, K, F, spec, c_hat, opts);
  std::vector<cplx> g(grid.n());
  for (std::size_t j = 0; j < grid.n(); ++j) {
    const double t0 = localising_cutoff(lambda * grid.x(j) / 5.0);
    g[j] = (1.0 - t0) * g0[j] + t0 * res.g[j];
  }
  res.g = SampledSignal(grid, std::move(g));
  res.global_lambda = lambda;
  res.max_truncation = std::max(res.max_truncation, J);
  res.max_tail_bound = std::max(res.max_tail_bound, P0.tail_bound(sup, J));
  res.sup_error = sup_error_on(res.g, f, F, Interval{-kInf, kInf});
  res.norm_value = norm(res.g, spec, bupu);
  return res;
}

SampledSignal dilated_plateau(const Grid& grid, double lambda, double x0) {
  static const PlateauProfile profile(1.0);
  return SampledSignal::from_function(
      grid, [&](double x) { return cplx(profile(lambda * (x - x0))); });
}

DitkinResult point_ditkin_window(const SampledSignal& f, double x0, const NormSpec& spec,
                                 double eps) {
  spec.validate();
  if (!(spec.s >= 0.0 && spec.s < 1.0)) throw InputError("point windows need 0 <= s < 1");
  if (!(eps > 0.0)) throw InputError("tolerance must be positive");
  const Grid& grid = f.grid();
  const Bupu bupu = build_bupu(grid);
  const cplx z0 = band_limited_eval(f, x0);
  const SampledSignal centred = f.mapped([z0](double, cplx v) { return v - z0; });
  const double lambda_max = 1.0 / (8.0 * grid.dx());
  DitkinResult res;
  for (double lambda = 1.0; lambda <= lambda_max; lambda *= 2.0) {
    if (!inside(grid, x0 - 5.0 / lambda) || !inside(grid, x0 + 5.0 / lambda)) continue;
    SampledSignal w = dilated_plateau(grid, lambda, x0);
    const double r = norm(centred * w, spec, bupu);
    res.history.emplace_back(lambda, r);
    if (r < eps) {
      res.window = std::move(w);
      res.lambda = lambda;
      res.residual = r;
      res.neighborhood = 1.0 / lambda;
      return res;
    }
  }
  throw BudgetError("point window tolerance " + format_double(eps) + " not reached at x0 = " +
                    format_double(x0) + " within the lambda budget");
}

}  // namespace modspace
