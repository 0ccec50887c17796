#include "modspace/runner.hpp"

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <optional>
#include <thread>

#include "modspace/error.hpp"
#include "modspace/signal_io.hpp"

namespace modspace {

namespace fs = std::filesystem;

namespace {

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot write " + path.string());
  os << text;
}

bool write_outputs(const RunConfig& cfg, const ExperimentOutput& out) {
  const fs::path dir(cfg.out);
  fs::create_directories(dir);
  for (const auto& [name, signal] : out.signals) write_signal(dir / name, signal);
  write_text(dir / "report.json", dump_json(report_document(cfg, out)) + "\n");
  write_text(dir / "report.csv", out.report.to_csv());
  return out.report.all_pass();
}

std::size_t failures(const SweepReport& r) {
  std::size_t k = 0;
  for (const auto& a : r.assertions()) k += a.pass ? 0 : 1;
  return k;
}

}  // namespace

Json report_document(const RunConfig& cfg, const ExperimentOutput& out) {
  Json body = out.report.to_json();
  Json doc;
  doc["schema"] = 1;
  doc["experiment"] = out.report.name();
  doc["config"] = cfg.to_json();
  doc["axis"] = body["axis"];
  doc["columns"] = body["columns"];
  doc["rows"] = body["rows"];
  doc["summary"] = body["summary"];
  doc["assertions"] = body["assertions"];
  doc["notes"] = body["notes"];
  doc["warnings"] = body["warnings"];
  Json files = Json::array();
  for (const auto& s : out.signals) files.push_back(s.first);
  doc["signals"] = files;
  return doc;
}

int run_and_write(const RunConfig& cfg, std::ostream& log) {
  if (cfg.experiment != "all") {
    const ExperimentOutput out = find_experiment(cfg.experiment).run(cfg);
    const bool ok = write_outputs(cfg, out);
    log << cfg.experiment << ": " << out.report.assertions().size() - failures(out.report) << "/"
        << out.report.assertions().size() << " assertions pass\n";
    for (const auto& a : out.report.assertions()) {
      if (!a.pass) log << "  FAIL " << a.name << ": measured " << format_double(a.measured) << " "
                       << a.relation << " " << format_double(a.tolerance) << "\n";
    }
    return ok ? 0 : 2;
  }

  const auto& registry = experiment_registry();
  const std::size_t count = registry.size();
  std::vector<std::optional<ExperimentOutput>> results(count);
  std::vector<std::string> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      RunConfig sub = cfg;
      sub.experiment = registry[i].name;
      sub.out = (fs::path(cfg.out) / registry[i].name).string();
      try {
        results[i] = registry[i].run(sub);
        write_outputs(sub, *results[i]);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(count)));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // Combined report in registry order.
  SweepReport all("all", "experiment");
  all.set_columns({"experiment", "assertions", "failed", "error"});
  for (std::size_t i = 0; i < count; ++i) {
    const std::string& name = registry[i].name;
    if (!results[i]) {
      all.add_row(Json::array({name, 0, 1, errors[i]}));
      all.check(name + ": ran", false, 0.0, 0.0, "completed");
      log << name << ": error: " << errors[i] << "\n";
      continue;
    }
    const SweepReport& r = results[i]->report;
    all.add_row(Json::array({name, r.assertions().size(), failures(r), ""}));
    for (const auto& a : r.assertions()) {
      all.check(name + ": " + a.name, a.pass, a.measured, a.tolerance, a.relation);
    }
    log << name << ": " << r.assertions().size() - failures(r) << "/" << r.assertions().size()
        << " assertions pass\n";
  }
  const ExperimentOutput combined{std::move(all), {}};
  const bool ok = write_outputs(cfg, combined);
  return ok ? 0 : 2;
}

}  // namespace modspace
