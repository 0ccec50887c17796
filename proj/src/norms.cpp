#include "modspace/norms.hpp"

#include <algorithm>
#include <cmath>

#include "modspace/error.hpp"
#include "modspace/stft.hpp"

namespace modspace {

std::string to_string(Space space) {
  switch (space) {
    case Space::Modulation:
      return "modulation";
    case Space::FourierBeurling:
      return "fourier-beurling";
    case Space::FourierSegal:
      return "fourier-segal";
    case Space::WeightedLebesgue:
      return "weighted-lebesgue";
  }
  return "unknown";
}

Space space_from_string(const std::string& name) {
  for (Space s : {Space::Modulation, Space::FourierBeurling, Space::FourierSegal,
                  Space::WeightedLebesgue}) {
    if (to_string(s) == name) return s;
  }
  throw InputError("unknown space '" + name + "'");
}

void NormSpec::validate() const {
  if (!(p >= 1.0) || !(q >= 1.0)) throw InputError("exponents must lie in [1, inf]");
  if (!(s >= 0.0) || !std::isfinite(s)) throw InputError("weight power must be finite and >= 0");
  if (space == Space::FourierSegal && std::isinf(p)) {
    throw InputError("Fourier-Segal norm needs p < inf");
  }
}

std::string NormSpec::label() const {
  const auto e = [](double v) { return std::isinf(v) ? std::string("inf") : format_double(v); };
  switch (space) {
    case Space::Modulation:
      return "M^{" + e(p) + "," + e(q) + "}_" + e(s);
    case Space::FourierBeurling:
      return "FL^1_" + e(s);
    case Space::FourierSegal:
      return "FA_" + e(p);
    case Space::WeightedLebesgue:
      return "L^" + e(p) + "_" + e(s);
  }
  return "?";
}

Json NormSpec::to_json() const {
  Json j;
  j["space"] = to_string(space);
  j["p"] = p;
  j["q"] = q;
  j["s"] = s;
  return j;
}

namespace {

double exponent_from_json(const Json& v) {
  if (v.is_string()) {
    if (v.get<std::string>() == "inf") return kInf;
    throw InputError("exponent must be a number or \"inf\"");
  }
  return v.get<double>();
}

}  // namespace

NormSpec NormSpec::from_json(const Json& j) {
  NormSpec spec;
  spec.space = space_from_string(j.at("space").get<std::string>());
  if (j.contains("p")) spec.p = exponent_from_json(j["p"]);
  if (j.contains("q")) spec.q = exponent_from_json(j["q"]);
  if (j.contains("s")) spec.s = j["s"].get<double>();
  spec.validate();
  return spec;
}

Json NormReport::to_json() const {
  Json j;
  j["space"] = to_string(spec.space);
  j["p"] = spec.p;
  j["q"] = spec.q;
  j["s"] = spec.s;
  j["value"] = value;
  j["tail_estimate"] = tail_estimate;
  j["blocks"] = Json::array();
  for (const auto& b : blocks) {
    Json e;
    e["k"] = b.k;
    e["contribution"] = b.contribution;
    j["blocks"].push_back(std::move(e));
  }
  return j;
}

namespace {

// l^q norm of a nonnegative sequence, peak-scaled.
double lq(const std::vector<double>& a, double q) {
  double peak = 0.0;
  for (double v : a) peak = std::max(peak, v);
  if (std::isinf(q) || peak == 0.0) return peak;
  double sum = 0.0;
  if (q == 1.0) {
    for (double v : a) sum += v;
    return sum;
  }
  for (double v : a) sum += std::pow(v / peak, q);
  return peak * std::pow(sum, 1.0 / q);
}

}  // namespace

NormReport modulation_norm(const SampledSignal& f, double p, double q, double s,
                           const Bupu& bupu) {
  const NormSpec spec = NormSpec::modulation(p, q, s);
  spec.validate();
  if (f.domain() != Domain::Space) throw StructuralError("norms expect spatial signals");
  const SampledSignal fhat = fourier_forward(f);
  NormReport rep;
  rep.spec = spec;
  std::vector<double> c;
  for (std::ptrdiff_t k = bupu.k_min(); k <= bupu.k_max(); ++k) {
    const SampledSignal block = frequency_block_from_spectrum(fhat, k, bupu);
    const double v = japanese_bracket(static_cast<double>(k), s) * weighted_lp_norm(block, p);
    rep.blocks.push_back({k, v});
    c.push_back(v);
  }
  rep.value = lq(c, q);
  if (!c.empty()) {
    std::vector<double> outer{c.front()};
    if (c.size() > 1) outer.push_back(c.back());
    rep.tail_estimate = lq(outer, q);
  }
  return rep;
}

double modulation_norm_stft(const SampledSignal& f, double p, double q, double s,
                            const SampledSignal& window) {
  NormSpec::modulation(p, q, s).validate();
  require_compatible(f, window, "modulation_norm_stft");
  if (f.size() > kStftMaxSize) {
    throw BudgetError("STFT norm limited to n <= " + std::to_string(kStftMaxSize));
  }
  const StftEngine engine(window);
  const SampledSignal fhat = fourier_forward(f);
  const Grid& g = f.grid();
  const std::size_t n = g.n();
  std::vector<cplx> row(n);
  std::vector<double> inner(n);
  for (std::size_t m = 0; m < n; ++m) {
    engine.row(fhat, m, row);
    const SampledSignal r(g, row, Domain::Space);
    inner[m] = weighted_lp_norm(r, p);
  }
  std::vector<cplx> outer(n);
  for (std::size_t m = 0; m < n; ++m) outer[m] = inner[m];
  return weighted_lp_norm(SampledSignal(g, std::move(outer), Domain::Frequency), q, s);
}

double fourier_beurling_norm(const SampledSignal& f, double s) {
  NormSpec::fourier_beurling(s).validate();
  return weighted_lp_norm(fourier_forward(f), 1.0, s);
}

double fourier_segal_norm(const SampledSignal& f, double p) {
  NormSpec::fourier_segal(p).validate();
  return weighted_lp_norm(f, p) + weighted_lp_norm(fourier_forward(f), 1.0);
}

double norm(const SampledSignal& f, const NormSpec& spec, const Bupu& bupu) {
  spec.validate();
  switch (spec.space) {
    case Space::Modulation:
      return modulation_norm(f, spec.p, spec.q, spec.s, bupu).value;
    case Space::FourierBeurling:
      return fourier_beurling_norm(f, spec.s);
    case Space::FourierSegal:
      return fourier_segal_norm(f, spec.p);
    case Space::WeightedLebesgue:
      return weighted_lp_norm(f, spec.p, spec.s);
  }
  throw InputError("unknown space");
}

double embedding_ratio(const SampledSignal& f, const NormSpec& from, const NormSpec& to,
                       const Bupu& bupu) {
  if (f.is_zero()) throw InputError("embedding ratio undefined for a zero signal");
  if (from == to) return 1.0;
  return norm(f, to, bupu) / norm(f, from, bupu);
}

bool in_algebra_regime(const NormSpec& spec) {
  if (spec.space != Space::Modulation) return false;
  if (spec.q == 1.0) return spec.s >= 0.0;
  const double inv_qprime = std::isinf(spec.q) ? 1.0 : 1.0 - 1.0 / spec.q;
  return spec.s > inv_qprime;
}

namespace {

void require_algebra(const NormSpec& spec) {
  spec.validate();
  if (!in_algebra_regime(spec)) {
    throw InputError(spec.label() + " is outside the algebra regime (q = 1 or s > 1/q')");
  }
}

}  // namespace

double algebra_ratio(const SampledSignal& f, const SampledSignal& g, const NormSpec& spec,
                     const Bupu& bupu) {
  require_algebra(spec);
  if (f.is_zero() || g.is_zero()) throw InputError("algebra ratio undefined for zero factors");
  return norm(f * g, spec, bupu) / (norm(f, spec, bupu) * norm(g, spec, bupu));
}

double algebra_ratio_mixed(const SampledSignal& f, const SampledSignal& g, const NormSpec& spec,
                           const Bupu& bupu) {
  require_algebra(spec);
  if (f.is_zero() || g.is_zero()) throw InputError("algebra ratio undefined for zero factors");
  NormSpec sup = spec;
  sup.p = kInf;
  return norm(f * g, spec, bupu) / (norm(f, sup, bupu) * norm(g, spec, bupu));
}

}  // namespace modspace
