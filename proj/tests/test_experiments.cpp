#include <gtest/gtest.h>

#include "xyv/error.hpp"
#include "xyv/experiments.hpp"
#include "xyv/graph.hpp"
#include "xyv/pattern_io.hpp"
#include "xyv/protocol.hpp"
#include "xyv/traps.hpp"

using namespace xyv;

namespace {

Json honest_config() {
  Json c;
  c["pattern"] = pattern_to_json(patterns::identity_line(1));
  c["scheme"] = "general";
  c["N"] = 20;
  c["d"] = 5;
  c["w"] = 1;
  c["seed"] = 9;
  c["expect"] = {{"verdict", "accept"}, {"output", {1}}};
  return c;
}

}  // namespace

TEST(Experiments, GeneratorsOnSmallGraphs) {
  auto r = experiment_generators(graphs::line(2));
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.metrics()["rank"], 1);
  EXPECT_EQ(r.metrics()["generators"][0], "YY");
  auto c = experiment_generators(graphs::cycle(4));
  EXPECT_TRUE(c.passed());
  EXPECT_EQ(c.metrics()["rank"], 3);
  EXPECT_FALSE(c.metrics()["s0_applicable"].get<bool>());
}

TEST(Experiments, OptimizeExportsDistribution) {
  auto r = experiment_optimize(graphs::line(3));
  EXPECT_TRUE(r.passed());
  EXPECT_NEAR(r.metrics()["epsilon"].get<double>(), 0.5, 1e-9);
  const Json dist = Json::parse(r.metrics()["distribution"].dump());
  EXPECT_NEAR(dist["epsilon"].get<double>(), 0.5, 1e-9);
  const auto d = distribution_from_json(graphs::line(3), dist["distribution"]);
  EXPECT_NEAR(detection_rate(d, all_errors(graphs::line(3))).min, 0.5, 1e-9);
  EXPECT_THROW(experiment_optimize(graphs::line(13)), SizeCapExceeded);
}

TEST(Experiments, SameSeedSameReport) {
  const auto a = experiment_brickwork_rate(2, 5, 300, 17).to_json().dump();
  const auto b = experiment_brickwork_rate(2, 5, 300, 17).to_json().dump();
  EXPECT_EQ(a, b);
  EXPECT_NE(a, experiment_brickwork_rate(2, 5, 300, 18).to_json().dump());

  const Json c = honest_config();
  EXPECT_EQ(experiment_run(c, ".").to_json().dump(), experiment_run(c, ".").to_json().dump());
  EXPECT_EQ(experiment_crsp(6, CrspMode::Correctness, 3, 4).to_json().dump(),
            experiment_crsp(6, CrspMode::Correctness, 3, 4).to_json().dump());
}

TEST(Experiments, BrickworkPanelLayout) {
  auto r = experiment_brickwork_rate(2, 5, 200, 1);
  // 10 singles, 45 pairs minus E* when it has weight two, then the random panel.
  const std::size_t n = 10, odd = graphs::brickwork(2, 5).odd_vertices().size();
  const std::size_t pairs = n * (n - 1) / 2 - (odd == 2 ? 1 : 0);
  EXPECT_EQ(r.metrics()["panel_size"], n + pairs + 1000);
  EXPECT_EQ(r.metrics()["estar_rate"], 0.0);
  EXPECT_THROW(experiment_brickwork_rate(2, 5, 0, 1), std::invalid_argument);
}

TEST(Experiments, HarmlessContrast) {
  MeasurementPattern p = patterns::identity_line(0);
  p.angles = {Angle8(3), Angle8(5), Angle8(1)};
  auto r = experiment_harmless(p, 10, 2);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.metrics()["tv_single_odd"].get<double>(), 0.1);
}

TEST(Experiments, CrspModes) {
  auto c = experiment_crsp(2, CrspMode::Correctness, 0, 1);
  EXPECT_TRUE(c.passed());
  auto s = experiment_crsp(3, CrspMode::Security, 0, 1);
  EXPECT_TRUE(s.passed());
  EXPECT_THROW(experiment_crsp(1, CrspMode::Correctness, 1, 1), std::invalid_argument);
  EXPECT_THROW(experiment_crsp(10, CrspMode::Correctness, 1, 1), std::invalid_argument);
}

TEST(Experiments, RunHonestAndExpectations) {
  Json c = honest_config();
  auto r = experiment_run(c, ".");
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.metrics()["verdict"], "accept");
  EXPECT_EQ(r.metrics()["per_round"].size(), 20u);

  c["expect"]["verdict"] = "reject";
  EXPECT_FALSE(experiment_run(c, ".").passed());

  Json o = honest_config();
  EXPECT_EQ(experiment_run(o, ".", 123).to_json()["seed"], 123);
}

TEST(Experiments, RunAutoThreshold) {
  Json c = honest_config();
  c["N"] = 200;
  c["d"] = 21;
  c["w"] = "auto";
  auto r = experiment_run(c, ".");
  const double eps = r.params()["epsilon"].get<double>();
  EXPECT_GT(eps, 0.0);
  EXPECT_EQ(r.params()["w"].get<std::size_t>(), max_failures(r.params()["c"].get<double>(), 179, eps));
}

TEST(Experiments, RunConfigErrors) {
  auto broken = [](auto edit) {
    Json c = honest_config();
    edit(c);
    return c;
  };
  EXPECT_THROW(experiment_run(Json::array(), "."), ParseError);
  EXPECT_THROW(experiment_run(broken([](Json& c) { c.erase("N"); }), "."), ParseError);
  EXPECT_THROW(experiment_run(broken([](Json& c) { c["w"] = -1; }), "."), ParseError);
  EXPECT_THROW(experiment_run(broken([](Json& c) { c["adversary"] = "sneaky"; }), "."), ParseError);
  EXPECT_THROW(experiment_run(broken([](Json& c) { c["inputs"] = {{"2", 1}}; }), "."), ParseError);
  EXPECT_THROW(experiment_run(broken([](Json& c) { c["inputs"] = {{"0", 2}}; }), "."), ParseError);
  EXPECT_THROW(experiment_run(broken([](Json& c) { c["noise"] = {{"q", 1.5}}; }), "."), ParseError);
  EXPECT_THROW(experiment_run(broken([](Json& c) { c["pattern"] = "no_such_file.json"; }), "."), ParseError);
  EXPECT_THROW(experiment_run(broken([](Json& c) { c["seed"] = "x"; }), "."), ParseError);
}
