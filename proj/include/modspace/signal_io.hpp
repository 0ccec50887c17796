#pragma once

#include <filesystem>

#include "modspace/grid.hpp"

namespace modspace {

/// Writes `x,re,im` rows to `csv_path` and the grid sidecar `{"n", "L",
/// "domain"}` next to it with a .json extension.  Values use 17 significant
/// digits so a read-back reproduces every sample bit for bit.
void write_signal(const std::filesystem::path& csv_path, const SampledSignal& f);

/// Inverse of write_signal.  Throws InputError on malformed files or when the
/// coordinate column disagrees with the sidecar grid.
SampledSignal read_signal(const std::filesystem::path& csv_path);

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path);

}  // namespace modspace
