#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "modspace/grid.hpp"
#include "modspace/report.hpp"

namespace modspace {

/// Everything that determines one experiment run.
struct RunConfig {
  std::string experiment;
  std::size_t n = 4096;
  double L = 40.0;
  std::uint64_t seed = 0;
  std::string out = "out";
  int jobs = 1;
  Json params = Json::object();  // experiment-specific, typed on read

  Grid grid() const { return Grid(n, L); }

  Json to_json() const;
  /// Missing keys keep their defaults; unknown keys and wrong types raise
  /// InputError.
  static RunConfig from_json(const Json& j);

  bool has(const std::string& key) const { return params.contains(key); }
  double param_double(const std::string& key, double fallback) const;
  long long param_int(const std::string& key, long long fallback) const;
  bool param_bool(const std::string& key, bool fallback) const;
  std::string param_string(const std::string& key, const std::string& fallback) const;
  std::vector<double> param_list(const std::string& key, const std::vector<double>& fallback) const;
};

/// "1e2,1e4,1e8" -> {100, 10000, 1e8}; InputError on junk.
std::vector<double> parse_number_list(const std::string& text);

}  // namespace modspace
