#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace modspace {

using Json = nlohmann::ordered_json;

/// "%.17g"; non-finite values become "inf", "-inf" or "nan".
std::string format_double(double v);

/// Deterministic pretty printer: insertion-ordered keys, two-space indent and
/// doubles at 17 significant digits.
std::string dump_json(const Json& value);

/// One checked inequality or identity of an experiment.
struct Assertion {
  std::string name;
  std::string relation;  // "<=", ">=", "==" or a short description
  double tolerance = 0.0;
  double measured = 0.0;
  bool pass = false;
};

/// Tabular result of an experiment plus its verdicts.
class SweepReport {
 public:
  SweepReport(std::string name, std::string axis);

  const std::string& name() const { return name_; }
  const std::string& axis() const { return axis_; }

  void set_columns(std::vector<std::string> columns) { columns_ = std::move(columns); }
  /// `row` must be a JSON array with one entry per column.
  void add_row(Json row);

  /// measured <= bound
  bool check_le(const std::string& name, double measured, double bound);
  /// measured >= bound
  bool check_ge(const std::string& name, double measured, double bound);
  /// Generic verdict with a described relation.
  bool check(const std::string& name, bool pass, double measured, double tolerance,
             std::string relation);

  void note(std::string text) { notes_.push_back(std::move(text)); }
  void warn(std::string text) { warnings_.push_back(std::move(text)); }
  void set_summary(const std::string& key, Json value) { summary_[key] = std::move(value); }

  bool all_pass() const;
  const std::vector<Assertion>& assertions() const { return assertions_; }
  const std::vector<Json>& rows() const { return rows_; }
  const std::vector<std::string>& columns() const { return columns_; }
  const Json& summary() const { return summary_; }

  Json to_json() const;
  std::string to_csv() const;

 private:
  std::string name_;
  std::string axis_;
  std::vector<std::string> columns_;
  std::vector<Json> rows_;
  std::vector<Assertion> assertions_;
  std::vector<std::string> notes_;
  std::vector<std::string> warnings_;
  Json summary_ = Json::object();
};

}  // namespace modspace
