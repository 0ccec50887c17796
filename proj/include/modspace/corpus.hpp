#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "modspace/grid.hpp"

namespace modspace {

struct CorpusEntry {
  std::string name;
  SampledSignal signal;
};

/// Twelve test signals: Gaussians at three widths, three modulated
/// Gaussians, three compact bumps, a chirp, and two random Gaussian-atom sums
/// drawn from `seed`.  Every signal is below 1e-7 for |x| >= 29.
std::vector<CorpusEntry> standard_corpus(const Grid& grid, std::uint64_t seed = 0);

/// Random smooth decaying signal: a sum of `atoms` modulated Gaussians.
SampledSignal random_smooth_signal(const Grid& grid, std::uint64_t seed, int atoms = 6);

/// Deterministic uniform draw in [a, b) from a 64-bit generator word.
double uniform_from_bits(std::uint64_t bits, double a, double b);

}  // namespace modspace
