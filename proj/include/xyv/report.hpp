#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "xyv/graph_io.hpp"

namespace xyv {

/// "<project version>+<git describe>" baked in at build time.
std::string version_string();

struct ReportCheck {
  std::string name;
  double value = 0.0;
  /// "<=", ">=", "==", "<" or ">"
  std::string relation;
  double threshold = 0.0;
  bool passed = false;
};

class ExperimentReport {
 public:
  ExperimentReport(std::string name, std::uint64_t seed) : name_(std::move(name)), seed_(seed) {}

  OrderedJson& params() { return params_; }
  OrderedJson& metrics() { return metrics_; }
  const std::string& name() const { return name_; }

  /// Records value `relation` threshold and returns whether it holds.
  bool check(std::string name, double value, const std::string& relation, double threshold);
  const std::vector<ReportCheck>& checks() const { return checks_; }
  bool passed() const;

  OrderedJson to_json() const;
  /// One row per scalar metric and per check.
  std::string to_csv() const;

 private:
  std::string name_;
  std::uint64_t seed_;
  OrderedJson params_ = OrderedJson::object();
  OrderedJson metrics_ = OrderedJson::object();
  std::vector<ReportCheck> checks_;
};

}  // namespace xyv
