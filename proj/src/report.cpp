#include "modspace/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "modspace/error.hpp"

namespace modspace {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

void write(std::ostringstream& os, const Json& v, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close_pad(static_cast<std::size_t>(2 * depth), ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << pad << Json(it.key()).dump() << ": ";
        write(os, it.value(), depth + 1);
      }
      os << '\n' << close_pad << '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      // Arrays of scalars stay on one line to keep tables readable.
      const bool flat = std::all_of(v.begin(), v.end(), [](const Json& e) {
        return !e.is_object() && !e.is_array();
      });
      if (flat) {
        os << '[';
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) os << ", ";
          write(os, v[i], depth + 1);
        }
        os << ']';
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",\n";
        os << pad;
        write(os, v[i], depth + 1);
      }
      os << '\n' << close_pad << ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      if (std::isfinite(d)) {
        os << format_double(d);
      } else {
        os << '"' << format_double(d) << '"';
      }
      return;
    }
    default:
      os << v.dump();
  }
}

// RFC 4180 quoting for fields holding separators or quotes.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string dump_json(const Json& value) {
  std::ostringstream os;
  write(os, value, 0);
  return os.str();
}

SweepReport::SweepReport(std::string name, std::string axis)
    : name_(std::move(name)), axis_(std::move(axis)) {}

void SweepReport::add_row(Json row) {
  if (!row.is_array() || (!columns_.empty() && row.size() != columns_.size())) {
    throw InputError("report row for " + name_ + " does not match its columns");
  }
  rows_.push_back(std::move(row));
}

bool SweepReport::check_le(const std::string& name, double measured, double bound) {
  return check(name, measured <= bound, measured, bound, "<=");
}

bool SweepReport::check_ge(const std::string& name, double measured, double bound) {
  return check(name, measured >= bound, measured, bound, ">=");
}

bool SweepReport::check(const std::string& name, bool pass, double measured, double tolerance,
                        std::string relation) {
  assertions_.push_back(Assertion{name, std::move(relation), tolerance, measured, pass});
  return pass;
}

bool SweepReport::all_pass() const {
  return std::all_of(assertions_.begin(), assertions_.end(),
                     [](const Assertion& a) { return a.pass; });
}

Json SweepReport::to_json() const {
  Json j;
  j["name"] = name_;
  j["axis"] = axis_;
  j["columns"] = columns_;
  j["rows"] = Json::array();
  for (const auto& r : rows_) j["rows"].push_back(r);
  j["summary"] = summary_;
  j["assertions"] = Json::array();
  for (const auto& a : assertions_) {
    Json e;
    e["name"] = a.name;
    e["relation"] = a.relation;
    e["tolerance"] = a.tolerance;
    e["measured"] = a.measured;
    e["pass"] = a.pass;
    j["assertions"].push_back(std::move(e));
  }
  j["notes"] = notes_;
  j["warnings"] = warnings_;
  return j;
}

std::string SweepReport::to_csv() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < columns_.size(); ++i) {
    if (i) os << ',';
    os << csv_field(columns_[i]);
  }
  os << '\n';
  for (const auto& r : rows_) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) os << ',';
      const Json& c = r[i];
      if (c.is_number_float()) {
        os << format_double(c.get<double>());
      } else if (c.is_string()) {
        os << csv_field(c.get<std::string>());
      } else if (c.is_null()) {
        // empty cell
      } else {
        os << csv_field(c.dump());
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace modspace
