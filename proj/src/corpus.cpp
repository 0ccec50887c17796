#include "modspace/corpus.hpp"

#include <cmath>
#include <random>

#include "modspace/smooth.hpp"

namespace modspace {

double uniform_from_bits(std::uint64_t bits, double a, double b) {
  // std::uniform_real_distribution is implementation-defined; this mapping is not.
  const double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
  return a + (b - a) * u;
}

SampledSignal random_smooth_signal(const Grid& grid, std::uint64_t seed, int atoms) {
  std::mt19937_64 gen(seed);
  struct Term {
    double c, w, freq;
    cplx amp;
  };
  std::vector<Term> terms;
  for (int i = 0; i < atoms; ++i) {
    Term t{};
    t.c = uniform_from_bits(gen(), -5.0, 5.0);
    t.w = uniform_from_bits(gen(), 0.5, 1.5);
    t.freq = uniform_from_bits(gen(), -4.0, 4.0);
    const double re = uniform_from_bits(gen(), -1.0, 1.0);
    const double im = uniform_from_bits(gen(), -1.0, 1.0);
    t.amp = cplx(re, im);
    terms.push_back(t);
  }
  return SampledSignal::from_function(grid, [&terms](double x) {
    cplx v{};
    for (const auto& t : terms) {
      const double d = (x - t.c) / t.w;
      v += t.amp * std::exp(-0.5 * d * d) * std::polar(1.0, t.freq * x);
    }
    return v;
  });
}

std::vector<CorpusEntry> standard_corpus(const Grid& grid, std::uint64_t seed) {
  std::vector<CorpusEntry> out;
  const auto add = [&](std::string name, auto fn) {
    out.push_back({std::move(name), SampledSignal::from_function(grid, fn)});
  };
  for (double w : {0.5, 1.0, 2.0}) {
    add("gauss-w" + std::to_string(w).substr(0, 3), [w](double x) {
      const double d = x / w;
      return cplx(std::exp(-0.5 * d * d));
    });
  }
  for (double xi : {2.0, 5.0, -8.0}) {
    add("modgauss-" + std::to_string(static_cast<int>(xi)), [xi](double x) {
      return std::exp(-0.5 * x * x) * std::polar(1.0, xi * x);
    });
  }
  for (double w : {1.0, 3.0, 6.0}) {
    add("bump-w" + std::to_string(static_cast<int>(w)),
        [w](double x) { return cplx(classic_bump(x / w)); });
  }
  add("chirp", [](double x) { return std::exp(-x * x / 50.0) * std::polar(1.0, x * x / 4.0); });
  out.push_back({"random-a", random_smooth_signal(grid, seed * 2 + 1)});
  out.push_back({"random-b", random_smooth_signal(grid, seed * 2 + 2)});
  return out;
}

}  // namespace modspace
