// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "modspace/corpus.hpp"
#include "modspace/experiments.hpp"
#include "modspace/stft.hpp"

using namespace modspace;
namespace fs = std::filesystem;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

RunConfig config(const std::string& name, std::size_t n = 4096, double L = 40.0) {
  RunConfig c;
  c.experiment = name;
  c.n = n;
  c.L = L;
  c.out = (fs::temp_directory_path() / "modspace_acceptance" / name).string();
  return c;
}

const Assertion* find(const SweepReport& r, const std::string& prefix) {
  for (const auto& a : r.assertions()) {
    if (a.name.rfind(prefix, 0) == 0) return &a;
  }
  return nullptr;
}

std::string failed_list(const SweepReport& r) {
  std::string s;
  for (const auto& a : r.assertions()) {
    if (!a.pass) s += (s.empty() ? "" : "; ") + a.name + " = " + format_double(a.measured);
  }
  return s.empty() ? "all assertions pass" : "failed: " + s;
}

std::string measured(const SweepReport& r, const std::string& prefix) {
  const Assertion* a = find(r, prefix);
  return a ? prefix + " " + format_double(a->measured) : prefix + " missing";
}

Verdict whole_report(const std::string& name, const RunConfig& cfg, double limit_s,
                     const std::vector<std::string>& shown) {
  const auto t0 = std::chrono::steady_clock::now();
  const ExperimentOutput out = find_experiment(name).run(cfg);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::string detail;
  for (const auto& s : shown) detail += measured(out.report, s) + ", ";
  char t[64];
  std::snprintf(t, sizeof t, "%.2f s", secs);
  detail += t;
  if (limit_s > 0.0) detail += " (limit " + format_double(limit_s) + " s)";
  const bool ok = out.report.all_pass() && (limit_s <= 0.0 || secs < limit_s);
  if (!out.report.all_pass()) detail += "; " + failed_list(out.report);
  return {ok, detail};
}

std::string slurp(const fs::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::map<std::string, std::string> reports_under(const fs::path& dir) {
  std::map<std::string, std::string> m;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (e.path().filename() == "report.json") m[fs::relative(e.path(), dir).string()] = slurp(e.path());
  }
  return m;
}

Verdict determinism() {
  const fs::path dir = fs::temp_directory_path() / "modspace_acceptance" / "determinism";
  fs::remove_all(dir);
  const std::string cmd =
      std::string("\"") + MODSPACE_CLI + "\" run all --seed 0 --out \"" + dir.string() + "\" 2>/dev/null";
  const int first = std::system(cmd.c_str());
  const auto a = reports_under(dir);
  const int second = std::system(cmd.c_str());
  const auto b = reports_under(dir);
  std::size_t differing = 0;
  for (const auto& [k, v] : a) {
    auto it = b.find(k);
    if (it == b.end() || it->second != v) ++differing;
  }
  const bool ran = first != -1 && second != -1 && a.count("report.json") == 1;
  std::string detail = std::to_string(a.size()) + " report.json files, " +
                       std::to_string(differing) + " differ; exit codes " +
                       std::to_string(WEXITSTATUS(first)) + ", " + std::to_string(WEXITSTATUS(second));
  return {ran && differing == 0 && a.size() == b.size(), detail};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<Verdict()> check;
  };
  const std::vector<Criterion> criteria{
      {1, "fourier core",
       [] {
         return whole_report("fourier", config("fourier"), 5.0,
                             {"round trip", "parseval", "convolution theorem"});
       }},
      {2, "moyal equation over the corpus",
       [] { return whole_report("moyal", config("moyal", 2048, 30.0), 60.0, {"corpus max residual"}); }},
      {3, "M^{2,2} = L^2 identity ratio",
       [] {
         const Grid g(4096, 40.0);
         const SampledSignal phi = gaussian_window(g);
         const double want = std::sqrt(2.0 * 3.14159265358979323846) * std::pow(3.14159265358979323846, 0.25);
         double lo = 1e300, hi = 0.0, worst = 0.0;
         for (const auto& e : standard_corpus(g, 0)) {
           const double r = stft_l2_identity_ratio(e.signal, phi);
           lo = std::min(lo, r);
           hi = std::max(hi, r);
           worst = std::max(worst, std::abs(r - want) / want);
         }
         const double spread = (hi - lo) / want;
         return Verdict{worst <= 1e-6 && spread <= 1e-6,
                        "max rel error " + format_double(worst) + ", spread " + format_double(spread) +
                            " (tolerance 1e-6 each)"};
       }},
      {4, "partition of unity and reconstruction",
       [] {
         return whole_report("bupu-check", config("bupu-check"), 0.0,
                             {"partition sum max error", "reconstruction relative error"});
       }},
      {5, "rudin-shapiro identity and flatness",
       [] {
         RunConfig c = config("rudin-shapiro");
         c.params["m"] = 12;
         return whole_report("rudin-shapiro", c, 5.0, {"identity"});
       }},
      {6, "flat counterexample",
       [] {
         return whole_report("counterexample-flat", config("counterexample-flat"), 120.0,
                             {"ratio growth p=1 ", "ratio growth p=1.5"});
       }},
      {7, "p = 2 block counterexample",
       [] {
         RunConfig c = config("counterexample-l2");
         c.params["checkpoints"] = Json::array({1e3, 1e6, 1e12});
         return whole_report("counterexample-l2", c, 10.0,
                             {"modulation increment 1000->", "modulation increment 1000000->"});
       }},
      {8, "reciprocal and global composition",
       [] {
         return whole_report("reciprocal", config("reciprocal"), 0.0,
                             {"sup |fg - 1| on K", "norm refinement change", "global z^2 sup error"});
       }},
      {9, "approximate unit",
       [] {
         return whole_report("approx-unit", config("approx-unit"), 0.0,
                             {"residuals decreasing", "final residual"});
       }},
      {10, "translation bound on held-out half",
       [] {
         const ExperimentOutput out = find_experiment("translation-bound").run(config("translation-bound"));
         const Assertion* a = find(out.report, "held-out");
         if (!a) return Verdict{false, "held-out assertion missing"};
         return Verdict{a->pass, "max held-out lhs / (C rhs) = " + format_double(a->measured) +
                                     " (must be <= 1)"};
       }},
      {11, "determinism of run all --seed 0", [] { return determinism(); }},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    Verdict v{false, ""};
    try {
      v = c.check();
    } catch (const std::exception& e) {
      v = {false, std::string("error: ") + e.what()};
    }
    if (!v.pass) ++failed;
    std::cout << "criterion " << c.id << " " << (v.pass ? "PASS" : "FAIL") << "  " << c.title
              << ": " << v.detail << std::endl;
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
