#include <gtest/gtest.h>

#include "xyv/error.hpp"
#include "xyv/pattern_io.hpp"
#include "xyv/stabilizer.hpp"
#include "xyv/ubqc.hpp"

using namespace xyv;

TEST(Mbqc, CorrectedAngleExamples) {
  auto p = patterns::identity_line();
  p.angles[2] = Angle8(1);
  // sx(v3) = {v2}, sz(v3) = {v1}
  std::vector<int> s{1, 1, 0};
  EXPECT_EQ(corrected_angle(p, 2, s, VertexSet{0, 1}).k(), 3);
  EXPECT_EQ(corrected_angle(p, 2, {0, 0, 0}, VertexSet{0, 1}).k(), 1);
  p.angles[2] = Angle8(0);
  EXPECT_EQ(corrected_angle(p, 2, {0, 1, 0}, VertexSet{0, 1}).k(), 0);
  EXPECT_THROW(corrected_angle(p, 2, s, VertexSet{0}), std::logic_error);
}

TEST(Mbqc, StandardFlowDependencies) {
  const auto p = patterns::identity_line();
  EXPECT_EQ(p.flow.sx[1], VertexSet{0});
  EXPECT_EQ(p.flow.sx[2], VertexSet{1});
  EXPECT_EQ(p.flow.sz[2], VertexSet{0});
  EXPECT_EQ(p.order, (std::vector<Vertex>{0, 1, 2}));
  const auto q = patterns::identity_pair();
  EXPECT_EQ(q.order, (std::vector<Vertex>{0, 3, 1, 2, 4, 5}));
}

TEST(Mbqc, InvalidFlowsRejected) {
  const auto g = graphs::line(3).with_io(VertexSet{0}, VertexSet{2});
  EXPECT_THROW(make_pattern(g, std::vector<Angle8>(3), standard_flow(g, {{0, 2}}), {}), std::invalid_argument);
  EXPECT_THROW(make_pattern(g, std::vector<Angle8>(3), standard_flow(g, {{2, 1}}), {}), std::invalid_argument);
  // A 3-cycle with two wires induces a dependency cycle.
  const OpenGraph tri(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {1, 3}}, VertexSet{0, 2}, VertexSet{1, 3});
  EXPECT_THROW(make_pattern(tri, std::vector<Angle8>(4), standard_flow(tri, {{0, 1}, {2, 3}}), {}),
               std::invalid_argument);
}

TEST(Mbqc, IdentityPatternsAreDeterministic) {
  for (int x = 0; x < 2; ++x) {
    const auto d = mbqc_distribution(patterns::identity_line(x));
    ASSERT_EQ(d.size(), 1u);
    EXPECT_NEAR(d.at(x ? "1" : "0"), 1.0, 1e-12);
  }
  for (int xa = 0; xa < 2; ++xa)
    for (int xb = 0; xb < 2; ++xb) {
      const auto d = mbqc_distribution(patterns::identity_pair(xa, xb));
      ASSERT_EQ(d.size(), 1u);
      EXPECT_NEAR(d.at(bits_to_string({xa, xb})), 1.0, 1e-12);
    }
}

TEST(Mbqc, ZOnOutputFlipsResult) {
  const auto p = patterns::identity_line(0);
  const auto d = mbqc_distribution(p, deviation_before_first(PauliOp::parse("IIZ")));
  EXPECT_NEAR(d.at("1"), 1.0, 1e-12);
}

TEST(Mbqc, HarmlessErrorHasNoEffect) {
  Rng rng(3);
  for (int i = 0; i < 30; ++i) {
    const auto p = patterns::random_pattern(1 + static_cast<std::size_t>(rng.uniform(5)), 3, rng);
    const auto clean = mbqc_distribution(p);
    const auto dev = mbqc_distribution(p, deviation_before_first(s0_operator(p.graph)));
    EXPECT_LT(total_variation(clean, dev), 1e-9);
  }
}

TEST(Mbqc, PauliAngleWiresAreDeterministic) {
  // Wires of odd length with angles in {0, pi} and the two-wire identity
  // graph: the flow corrections make every run give the same bits.
  Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    MeasurementPattern p = [&] {
      if (i % 2) return patterns::identity_pair(rng.bit(), rng.bit());
      const std::size_t n = 1 + 2 * static_cast<std::size_t>(rng.uniform(3));
      const auto g = graphs::line(n).with_io(VertexSet{0}, VertexSet{n - 1});
      std::map<Vertex, Vertex> f;
      for (Vertex v = 0; v + 1 < n; ++v) f[v] = v + 1;
      std::vector<int> bits(n, 0);
      bits[0] = rng.bit();
      return make_pattern(g, std::vector<Angle8>(n), standard_flow(g, f), bits);
    }();
    for (auto& a : p.angles) a = Angle8::pi_times(rng.bit());
    const auto d = mbqc_distribution(p);
    EXPECT_EQ(d.size(), 1u);
    Rng r1(1), r2(2);
    SampledChooser c1(r1), c2(r2);
    EXPECT_EQ(run_mbqc(p, c1), run_mbqc(p, c2));
  }
}

TEST(Mbqc, RandomPatternsHaveValidFlows) {
  Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto p = patterns::random_pattern(1 + static_cast<std::size_t>(rng.uniform(6)), 3, rng);
    for (auto [v, fv] : p.flow.f) {
      EXPECT_TRUE(p.graph.adjacent(v, fv));
      EXPECT_FALSE(p.graph.outputs().contains(v));
    }
    // Every dependency is measured first.
    VertexSet done;
    for (Vertex v : p.order) {
      EXPECT_TRUE((p.flow.sx[v] | p.flow.sz[v]).is_subset_of(done));
      done.insert(v);
    }
  }
}

TEST(PatternIo, RoundTripAndDerivedDependencies) {
  const auto p = patterns::identity_pair(1, 0);
  const auto back = pattern_from_json(pattern_to_json(p));
  EXPECT_EQ(back.order, p.order);
  EXPECT_EQ(back.input_bits, p.input_bits);
  EXPECT_EQ(back.flow.sz, p.flow.sz);
  const auto text = R"({"graph": {"vertices": ["v1", "v2", "v3"], "edges": [["v1", "v2"], ["v2", "v3"]],
                                  "inputs": ["v1"], "outputs": ["v3"]},
                        "angles": {"v1": 0, "v2": 0, "v3": 0},
                        "flow": {"v1": "v2", "v2": "v3"},
                        "input_bits": {"v1": 1}})";
  const auto q = pattern_from_json(parse_json_text(text));
  EXPECT_EQ(q.flow.sz[2], VertexSet{0});
  EXPECT_NEAR(mbqc_distribution(q).at("1"), 1.0, 1e-12);
  EXPECT_THROW(pattern_from_json(parse_json_text(R"({"graph": {"vertices": ["a"], "edges": []},
                                                    "angles": {"a": "x"}})")),
               ParseError);
}

TEST(Ubqc, ClientAngleExamples) {
  // A single measured vertex with angle phi = 2.
  MeasurementPattern p = make_pattern(OpenGraph(1, {}, {}, VertexSet{0}), {Angle8(2)}, Flow{}, {});
  UbqcRoundState st(1);
  st.theta[0] = Angle8(5);
  struct Fixed final : Chooser {
    int v;
    explicit Fixed(int v) : v(v) {}
    int born(double) override { return 0; }
    int uniform(int) override { return v; }
  };
  Fixed one(1), zero(0);
  EXPECT_EQ(ubqc_client_angle(st, p, 0, one).k(), 3);
  st.theta[0] = Angle8(0);
  p.angles[0] = Angle8(0);
  EXPECT_EQ(ubqc_client_angle(st, p, 0, zero).k(), 0);
  MeasurementPattern in = make_pattern(OpenGraph(1, {}, VertexSet{0}, VertexSet{0}), {Angle8(0)}, Flow{}, {1});
  UbqcRoundState s2(1);
  EXPECT_EQ(ubqc_client_angle(s2, in, 0, zero).k(), 4);
  const auto line = patterns::identity_line();
  UbqcRoundState s3(3);
  EXPECT_THROW(ubqc_client_angle(s3, line, 2, zero), std::logic_error);
}

TEST(Ubqc, HonestServerReproducesMbqc) {
  Rng rng(21);
  HonestServer honest;
  EnumerateOptions opts;
  for (int i = 0; i < 12; ++i) {
    const auto p = patterns::random_pattern(1 + static_cast<std::size_t>(rng.uniform(3)), 2, rng);
    EXPECT_LT(total_variation(ubqc_distribution(p, honest, opts), mbqc_distribution(p)), 1e-9);
  }
  EXPECT_NEAR(ubqc_distribution(patterns::identity_line(1), honest).at("1"), 1.0, 1e-9);
}

TEST(Ubqc, FlippingEveryBitEqualsZOnEachVertex) {
  Rng rng(22);
  FlipAllServer flip;
  for (int i = 0; i < 8; ++i) {
    const auto p = patterns::random_pattern(1 + static_cast<std::size_t>(rng.uniform(3)), 2, rng);
    const std::size_t n = p.num_vertices();
    // Z on v just before v is measured.
    DeviationHook z_each = [n](std::size_t, Vertex v) -> std::optional<PauliOp> {
      return PauliOp::single(n, v, Letter::Z);
    };
    EXPECT_LT(total_variation(ubqc_distribution(p, flip), mbqc_distribution(p, z_each)), 1e-9);
  }
}

TEST(Ubqc, SingleVertexReturnsOneBit) {
  const auto p = make_pattern(OpenGraph(1, {}, {}, VertexSet{0}), {Angle8(0)}, Flow{}, {});
  Rng rng(1);
  SampledChooser c(rng);
  HonestServer honest;
  EXPECT_EQ(run_ubqc(p, c, honest).outputs.size(), 1u);
}

TEST(Ubqc, DeltaMarginalIsUniform) {
  const auto p = patterns::identity_line(1);
  HonestServer honest;
  for (Vertex v : {Vertex{0}, Vertex{1}, Vertex{2}}) {
    auto d = exact_distribution<int>(
        [&](Chooser& c) { return run_ubqc(p, c, honest).delta[v].k(); });
    ASSERT_EQ(d.size(), 8u);
    for (auto& [k, prob] : d) EXPECT_NEAR(prob, 0.125, 1e-9);
  }
}

TEST(Ubqc, MalformedReportsRejected) {
  struct Bad final : ServerStrategy {
    int report(Vertex, int) override { return 2; }
  } bad;
  Rng rng(1);
  SampledChooser c(rng);
  EXPECT_THROW(run_ubqc(patterns::identity_line(), c, bad), ProtocolError);
}
