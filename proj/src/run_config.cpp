#include "modspace/run_config.hpp"

#include <cmath>
#include <sstream>

#include "modspace/error.hpp"

namespace modspace {

Json RunConfig::to_json() const {
  Json j;
  j["experiment"] = experiment;
  j["n"] = n;
  j["L"] = L;
  j["seed"] = seed;
  j["out"] = out;
  j["jobs"] = jobs;
  j["params"] = params;
  return j;
}

RunConfig RunConfig::from_json(const Json& j) {
  if (!j.is_object()) throw InputError("config must be a JSON object");
  RunConfig c;
  try {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string& k = it.key();
      const Json& v = it.value();
      if (k == "experiment") {
        c.experiment = v.get<std::string>();
      } else if (k == "n") {
        if (!v.is_number_unsigned()) throw InputError("config n must be a positive integer");
        c.n = v.get<std::size_t>();
      } else if (k == "L") {
        if (!v.is_number()) throw InputError("config L must be a number");
        c.L = v.get<double>();
      } else if (k == "seed") {
        if (!v.is_number_unsigned()) throw InputError("config seed must be a nonnegative integer");
        c.seed = v.get<std::uint64_t>();
      } else if (k == "out") {
        c.out = v.get<std::string>();
      } else if (k == "jobs") {
        if (!v.is_number_integer()) throw InputError("config jobs must be an integer");
        c.jobs = v.get<int>();
      } else if (k == "params") {
        if (!v.is_object()) throw InputError("config params must be an object");
        c.params = v;
      } else {
        throw InputError("unknown config key '" + k + "'");
      }
    }
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed config: ") + e.what());
  }
  if (c.jobs < 1) throw InputError("jobs must be at least 1");
  (void)c.grid();  // validates n and L
  return c;
}

namespace {

const Json* lookup(const Json& params, const std::string& key) {
  auto it = params.find(key);
  return it == params.end() ? nullptr : &*it;
}

[[noreturn]] void bad_type(const std::string& key, const char* want) {
  throw InputError("parameter '" + key + "' must be " + want);
}

}  // namespace

double RunConfig::param_double(const std::string& key, double fallback) const {
  const Json* v = lookup(params, key);
  if (!v) return fallback;
  if (v->is_number()) return v->get<double>();
  if (v->is_string()) {
    const auto list = parse_number_list(v->get<std::string>());
    if (list.size() == 1) return list[0];
  }
  bad_type(key, "a number");
}

long long RunConfig::param_int(const std::string& key, long long fallback) const {
  const Json* v = lookup(params, key);
  if (!v) return fallback;
  if (v->is_number_integer()) return v->get<long long>();
  if (v->is_number()) {
    const double d = v->get<double>();
    if (d == std::floor(d) && std::abs(d) < 9e15) return static_cast<long long>(d);
  }
  bad_type(key, "an integer");
}

bool RunConfig::param_bool(const std::string& key, bool fallback) const {
  const Json* v = lookup(params, key);
  if (!v) return fallback;
  if (v->is_boolean()) return v->get<bool>();
  bad_type(key, "true or false");
}

std::string RunConfig::param_string(const std::string& key, const std::string& fallback) const {
  const Json* v = lookup(params, key);
  if (!v) return fallback;
  if (v->is_string()) return v->get<std::string>();
  bad_type(key, "a string");
}

std::vector<double> RunConfig::param_list(const std::string& key,
                                          const std::vector<double>& fallback) const {
  const Json* v = lookup(params, key);
  if (!v) return fallback;
  if (v->is_string()) return parse_number_list(v->get<std::string>());
  if (v->is_array()) {
    std::vector<double> out;
    for (const auto& e : *v) {
      if (!e.is_number()) bad_type(key, "a list of numbers");
      out.push_back(e.get<double>());
    }
    return out;
  }
  if (v->is_number()) return {v->get<double>()};
  bad_type(key, "a list of numbers");
}

std::vector<double> parse_number_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      throw InputError("not a number: '" + item + "'");
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used != item.size() || !std::isfinite(v)) throw InputError("not a number: '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw InputError("empty number list");
  return out;
}

}  // namespace modspace
