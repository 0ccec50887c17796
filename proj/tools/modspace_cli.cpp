// modspace: run experiments and write JSON/CSV reports.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "modspace/error.hpp"
#include "modspace/experiments.hpp"
#include "modspace/runner.hpp"

using namespace modspace;

namespace {

Json read_json_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw InputError("cannot open config " + path);
  try {
    return Json::parse(is);
  } catch (const Json::exception& e) {
    throw InputError("malformed config " + path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Modulation-space numerics: experiments with JSON/CSV reports"};
  app.require_subcommand(0, 1);
  bool list = false;
  app.add_flag("--list", list, "List experiments with their anchor strings");

  CLI::App* run = app.add_subcommand("run", "Run one experiment, or all of them");
  std::string experiment;
  run->add_option("experiment", experiment, "Experiment name or 'all'");
  std::optional<std::size_t> n;
  std::optional<double> L;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<int> jobs;
  std::string config_path;
  run->add_option("--n", n, "Grid size (power of two)");
  run->add_option("--L", L, "Half-width of the spatial domain");
  run->add_option("--seed", seed, "Seed for random corpus entries");
  run->add_option("--out", out, "Output directory");
  run->add_option("--jobs", jobs, "Concurrent experiments for 'all'");
  run->add_option("--config", config_path, "JSON config; flags override it");

  // Experiment parameters; only flags that are given reach the config.
  struct Param {
    const char* flag;
    const char* key;
    const char* help;
    std::string value;
  };
  std::vector<Param> params{
      {"--m", "m", "Depth (rudin-shapiro, counterexample-flat)", {}},
      {"--r", "r", "Spatial depth (counterexample-flat)", {}},
      {"--p", "p", "Exponent p", {}},
      {"--q", "q", "Exponent q", {}},
      {"--s", "s", "Weight power s", {}},
      {"--space", "space", "modulation, fourier-beurling, fourier-segal, lebesgue", {}},
      {"--signal", "signal", "Signal CSV for 'norm'", {}},
      {"--k0", "k0", "First block index (counterexample-l2)", {}},
      {"--checkpoints", "checkpoints", "Comma-separated K values (counterexample-l2)", {}},
      {"--F", "F", "Function for 'compose': identity, square, mobius, expm1, reciprocal", {}},
      {"--c-hat", "c_hat", "Algebra constant used by composition", {}},
      {"--oversample", "oversample", "Grid oversampling for 'reciprocal'", {}},
      {"--eps", "eps", "Target residual (ditkin)", {}},
      {"--x0", "x0", "Base point (dilation)", {}},
      {"--width", "width", "Gaussian width (approx-unit)", {}},
      {"--phi-width", "phi_width", "Width of phi (counterexample-flat)", {}},
      {"--k-eta", "k_eta", "Half-width of the bulk of F^-1 phi (counterexample-flat)", {}},
  };
  for (auto& p : params) run->add_option(p.flag, p.value, p.help);
  bool dump = false;
  run->add_flag("--dump", dump, "Also write |V f| as a CSV matrix (stft)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (list) {
    for (const auto& e : experiment_registry()) {
      std::cout << e.name << "\t\"" << e.anchor << "\"\t" << e.summary << "\n";
    }
    std::cout << "all\t\"every experiment above\"\truns the registry, --jobs at a time\n";
    return 0;
  }
  if (!*run) {
    std::cerr << app.help();
    return 1;
  }

  try {
    RunConfig cfg;
    if (!config_path.empty()) cfg = RunConfig::from_json(read_json_file(config_path));
    if (!experiment.empty()) cfg.experiment = experiment;
    if (n) cfg.n = *n;
    if (L) cfg.L = *L;
    if (seed) cfg.seed = *seed;
    if (out) cfg.out = *out;
    if (jobs) cfg.jobs = *jobs;
    for (const auto& p : params) {
      if (p.value.empty()) continue;
      const auto nums = [&] {
        try {
          return parse_number_list(p.value);
        } catch (const InputError&) {
          return std::vector<double>{};
        }
      }();
      const std::string key = p.key;
      if (key == "checkpoints") {
        cfg.params[key] = parse_number_list(p.value);
      } else if (nums.size() == 1 && key != "signal" && key != "space" && key != "F") {
        cfg.params[key] = nums[0];
      } else {
        cfg.params[key] = p.value;
      }
    }
    if (dump) cfg.params["dump"] = true;
    cfg = RunConfig::from_json(cfg.to_json());  // same validation as a config file
    if (cfg.experiment.empty()) throw InputError("no experiment given");
    if (cfg.experiment != "all") (void)find_experiment(cfg.experiment);
    return run_and_write(cfg, std::cerr);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
