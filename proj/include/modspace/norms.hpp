#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "modspace/bupu.hpp"
#include "modspace/grid.hpp"
#include "modspace/report.hpp"

namespace modspace {

enum class Space { Modulation, FourierBeurling, FourierSegal, WeightedLebesgue };

std::string to_string(Space space);
Space space_from_string(const std::string& name);

/// Which norm to take.  FourierBeurling ignores p and q; FourierSegal ignores
/// q and s; WeightedLebesgue ignores q.
struct NormSpec {
  Space space = Space::Modulation;
  double p = 2.0;
  double q = 1.0;
  double s = 0.0;

  static NormSpec modulation(double p, double q, double s = 0.0) {
    return {Space::Modulation, p, q, s};
  }
  static NormSpec fourier_beurling(double s = 0.0) { return {Space::FourierBeurling, 1.0, 1.0, s}; }
  static NormSpec fourier_segal(double p) { return {Space::FourierSegal, p, 1.0, 0.0}; }
  static NormSpec lebesgue(double p, double s = 0.0) {
    return {Space::WeightedLebesgue, p, 1.0, s};
  }

  /// Throws InputError unless p, q in [1, inf] and s >= 0 (p < inf for
  /// FourierSegal).
  void validate() const;
  std::string label() const;
  Json to_json() const;
  static NormSpec from_json(const Json& j);

  friend bool operator==(const NormSpec&, const NormSpec&) = default;
};

struct BlockContribution {
  std::ptrdiff_t k;
  double contribution;  // <k>^s |phi(D-k) f|_{L^p}
};

struct NormReport {
  NormSpec spec;
  double value = 0.0;
  std::vector<BlockContribution> blocks;  // Modulation only
  double tail_estimate = 0.0;

  Json to_json() const;
};

/// (sum_k <k>^{sq} |phi(D-k) f|_{L^p}^q)^{1/q}, max over k when q = inf.  The
/// tail estimate is the l^q mass of the two outermost blocks.
NormReport modulation_norm(const SampledSignal& f, double p, double q, double s,
                           const Bupu& bupu);

/// Mixed norm of the sampled STFT; n <= kStftMaxSize.
double modulation_norm_stft(const SampledSignal& f, double p, double q, double s,
                            const SampledSignal& window);

/// \int <xi>^s |f^(xi)| dxi
double fourier_beurling_norm(const SampledSignal& f, double s);

/// |f|_{L^p} + |f^|_{L^1}
double fourier_segal_norm(const SampledSignal& f, double p);

/// Dispatch on spec.space.  `bupu` is only read for Modulation.
double norm(const SampledSignal& f, const NormSpec& spec, const Bupu& bupu);

/// |f|_to / |f|_from; InputError for f = 0.
double embedding_ratio(const SampledSignal& f, const NormSpec& from, const NormSpec& to,
                       const Bupu& bupu);

/// q = 1 with s >= 0, or s > 1/q'.
bool in_algebra_regime(const NormSpec& spec);

/// |fg| / (|f| |g|); spec must be a Modulation spec in the algebra regime.
double algebra_ratio(const SampledSignal& f, const SampledSignal& g, const NormSpec& spec,
                     const Bupu& bupu);

/// |fg|_{M^{p,q}_s} / (|f|_{M^{inf,q}_s} |g|_{M^{p,q}_s})
double algebra_ratio_mixed(const SampledSignal& f, const SampledSignal& g, const NormSpec& spec,
                           const Bupu& bupu);

}  // namespace modspace
