#include "modspace/signal_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"
#include "modspace/error.hpp"
#include "modspace/report.hpp"

namespace modspace {

std::filesystem::path sidecar_path(const std::filesystem::path& csv_path) {
  auto p = csv_path;
  p.replace_extension(".json");
  return p;
}

void write_signal(const std::filesystem::path& csv_path, const SampledSignal& f) {
  std::ofstream csv(csv_path);
  if (!csv) throw InputError("cannot open " + csv_path.string() + " for writing");
  const char* axis = f.domain() == Domain::Space ? "x" : "xi";
  csv << axis << ",re,im\n";
  for (std::size_t j = 0; j < f.size(); ++j) {
    csv << format_double(f.coordinate(j)) << ',' << format_double(f[j].real()) << ','
        << format_double(f[j].imag()) << '\n';
  }
  nlohmann::ordered_json side;
  side["n"] = f.grid().n();
  side["L"] = f.grid().half_width();
  side["domain"] = f.domain() == Domain::Space ? "space" : "frequency";
  std::ofstream js(sidecar_path(csv_path));
  js << dump_json(side) << '\n';
}

SampledSignal read_signal(const std::filesystem::path& csv_path) {
  std::ifstream js(sidecar_path(csv_path));
  if (!js) throw InputError("missing grid sidecar for " + csv_path.string());
  nlohmann::json side;
  try {
    side = nlohmann::json::parse(js);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed grid sidecar: ") + e.what());
  }
  if (!side.contains("n") || !side.contains("L")) {
    throw InputError("grid sidecar must provide n and L");
  }
  const Grid grid(side["n"].get<std::size_t>(), side["L"].get<double>());
  Domain domain = Domain::Space;
  if (side.contains("domain") && side["domain"] == "frequency") domain = Domain::Frequency;

  std::ifstream csv(csv_path);
  if (!csv) throw InputError("cannot open " + csv_path.string());
  std::string line;
  std::getline(csv, line);
  if (line != "x,re,im" && line != "xi,re,im") {
    throw InputError("signal CSV must start with the header x,re,im");
  }
  std::vector<cplx> samples;
  samples.reserve(grid.n());
  const SampledSignal probe = SampledSignal::zeros(grid, domain);
  while (std::getline(csv, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string a, b, c;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, c)) {
      throw InputError("malformed signal row: " + line);
    }
    const std::size_t j = samples.size();
    if (j >= grid.n()) throw InputError("signal CSV has more rows than the grid");
    const double coord = std::stod(a);
    if (std::abs(coord - probe.coordinate(j)) > 1e-9 * (1.0 + std::abs(coord))) {
      throw InputError("coordinate column disagrees with the grid at row " + std::to_string(j));
    }
    samples.emplace_back(std::stod(b), std::stod(c));
  }
  return SampledSignal(grid, std::move(samples), domain);
}

}  // namespace modspace
