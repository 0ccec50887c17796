#pragma once

// Scripted reproductions.  Each experiment maps a RunConfig to a SweepReport
// whose assertions carry their tolerances.

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "modspace/bupu.hpp"
#include "modspace/corpus.hpp"
#include "modspace/norms.hpp"
#include "modspace/report.hpp"
#include "modspace/run_config.hpp"

namespace modspace {

struct ExperimentOutput {
  SweepReport report;
  /// Signals written next to the report, by file name.
  std::vector<std::pair<std::string, SampledSignal>> signals;
};

struct Experiment {
  std::string name;
  std::string anchor;  // quoted phrase the construction follows
  std::string summary;
  std::function<ExperimentOutput(const RunConfig&)> run;
};

/// Every experiment in a fixed order; "all" is not included.
const std::vector<Experiment>& experiment_registry();

/// InputError for unknown names.
const Experiment& find_experiment(const std::string& name);

/// |f - psi_lambda f|_spec for each lambda, psi_lambda(x) = psi(lambda x) with
/// the R = 1 plateau profile.  Asserts decrease with 5% slack and a final
/// residual below final_fraction |f|_spec.
SweepReport approximate_unit_sweep(const SampledSignal& f, const NormSpec& spec,
                                   const std::vector<double>& lambdas,
                                   double final_fraction = 1e-3);

struct EmbeddingPair {
  NormSpec from;
  NormSpec to;
  bool compact_only = false;  // restrict to compactly supported entries
};

/// Corpus max of |f|_to / |f|_from per pair on the corpus grid and on the
/// refined grid; asserts finiteness and agreement within 5%.
SweepReport embedding_sweep(const Grid& grid, std::uint64_t seed,
                            const std::vector<EmbeddingPair>& pairs);

/// Corpus max of |fg| / (|f| |g|) over the pairs (f, f) and (f, next) per
/// spec, on the grid and its refinement; asserts agreement within 10%.  The
/// summary holds c_hat per spec label.
SweepReport algebra_sweep(const Grid& grid, std::uint64_t seed, const std::vector<NormSpec>& specs);

/// Names of the compactly supported corpus entries.
bool corpus_entry_is_compact(const CorpusEntry& e);

}  // namespace modspace
