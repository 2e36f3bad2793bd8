#include <gtest/gtest.h>

#include "xyv/report.hpp"

using namespace xyv;

TEST(Report, ChecksAndVerdict) {
  ExperimentReport r("demo", 42);
  EXPECT_TRUE(r.check("a", 0.5, "<=", 0.5));
  EXPECT_TRUE(r.check("b", 0.5, ">=", 0.25));
  EXPECT_FALSE(r.check("c", 1.0, "<", 1.0));
  EXPECT_TRUE(r.check("d", 3.0, "==", 3.0));
  EXPECT_FALSE(r.passed());
  EXPECT_THROW(r.check("e", 1, "~", 1), std::invalid_argument);

  ExperimentReport ok("demo", 1);
  ok.check("x", 0, "<=", 1e-9);
  EXPECT_TRUE(ok.passed());
}

TEST(Report, JsonLayoutIsStable) {
  ExperimentReport r("demo", 7);
  r.params()["rows"] = 2;
  r.metrics()["min_rate"] = 0.125;
  r.check("min_rate", 0.125, ">=", 0.1);
  const auto j = r.to_json();
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  EXPECT_EQ(keys, (std::vector<std::string>{"experiment", "version", "seed", "params", "metrics", "checks", "passed"}));
  EXPECT_EQ(j["seed"], 7);
  EXPECT_EQ(j["version"], version_string());
  EXPECT_FALSE(version_string().empty());
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j.dump(), r.to_json().dump());
}

TEST(Report, CsvRows) {
  ExperimentReport r("demo", 3);
  r.metrics()["count"] = 4;
  r.metrics()["panel"] = Json::array({1, 2});
  r.check("count", 4, "==", 4);
  const std::string csv = r.to_csv();
  EXPECT_NE(csv.find("experiment,seed,kind,name,value,relation,threshold,passed\n"), std::string::npos);
  EXPECT_NE(csv.find("demo,3,metric,count,4,,,\n"), std::string::npos);
  EXPECT_NE(csv.find("demo,3,check,count,4,==,4,true\n"), std::string::npos);
  EXPECT_EQ(csv.find("panel"), std::string::npos);
}
