#pragma once

#include <ostream>

#include "modspace/experiments.hpp"
#include "modspace/run_config.hpp"

namespace modspace {

/// {schema, experiment, config, columns, rows, summary, assertions, notes,
/// warnings, signals}
Json report_document(const RunConfig& cfg, const ExperimentOutput& out);

/// Runs cfg.experiment ("all" runs the whole registry on up to cfg.jobs
/// threads) and writes report.json, report.csv and signal files under
/// cfg.out.  Returns 0 when every assertion passes, 2 otherwise.  Library
/// errors propagate.
int run_and_write(const RunConfig& cfg, std::ostream& log);

}  // namespace modspace
