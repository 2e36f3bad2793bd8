#include "xyv/report.hpp"

#include <sstream>
#include <stdexcept>

#ifndef XYV_VERSION
#define XYV_VERSION "unknown"
#endif

namespace xyv {

std::string version_string() { return XYV_VERSION; }

bool ExperimentReport::check(std::string name, double value, const std::string& relation, double threshold) {
  bool ok = false;
  if (relation == "<=") ok = value <= threshold;
  else if (relation == ">=") ok = value >= threshold;
  else if (relation == "<") ok = value < threshold;
  else if (relation == ">") ok = value > threshold;
  else if (relation == "==") ok = value == threshold;
  else throw std::invalid_argument("unknown relation " + relation);
  checks_.push_back({std::move(name), value, relation, threshold, ok});
  return ok;
}

bool ExperimentReport::passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

OrderedJson ExperimentReport::to_json() const {
  OrderedJson j;
  j["experiment"] = name_;
  j["version"] = version_string();
  j["seed"] = seed_;
  j["params"] = params_;
  j["metrics"] = metrics_;
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : checks_) {
    OrderedJson o;
    o["name"] = c.name;
    o["value"] = c.value;
    o["relation"] = c.relation;
    o["threshold"] = c.threshold;
    o["passed"] = c.passed;
    checks.push_back(std::move(o));
  }
  j["checks"] = checks;
  j["passed"] = passed();
  return j;
}

std::string ExperimentReport::to_csv() const {
  std::ostringstream out;
  out.precision(17);
  out << "experiment,seed,kind,name,value,relation,threshold,passed\n";
  for (const auto& [k, v] : metrics_.items()) {
    if (v.is_number() || v.is_boolean()) out << name_ << ',' << seed_ << ",metric," << k << ',' << v.dump() << ",,,\n";
  }
  for (const auto& c : checks_) {
    out << name_ << ',' << seed_ << ",check," << c.name << ',' << c.value << ',' << c.relation << ','
        << c.threshold << ',' << (c.passed ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace xyv
