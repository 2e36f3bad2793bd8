#include <gtest/gtest.h>

#include "oracles.hpp"
#include "xyv/coeff_map.hpp"
#include "xyv/stabilizer.hpp"
#include "xyv/statevector.hpp"

using namespace xyv;

namespace {

oracle::Mat as_matrix(const PauliOp& p) {
  std::string s;
  for (Vertex v = 0; v < p.num_vertices(); ++v) s.push_back(to_char(p.letter(v)));
  return oracle::letters(s, p.phase_factor());
}

oracle::Mat dense_product(const OpenGraph& g, VertexSet subset) {
  const std::size_t d = std::size_t{1} << g.num_vertices();
  oracle::Mat acc = oracle::letters(std::string(g.num_vertices(), 'I'));
  for (Vertex v : subset) acc = oracle::matmul(acc, as_matrix(canonical_generator(g, v)), d);
  return acc;
}

std::vector<OpenGraph> small_graphs(std::size_t max_n) {
  std::vector<OpenGraph> out;
  for (std::size_t n = 1; n <= max_n; ++n)
    for (auto& g : graphs::all_connected(n)) out.push_back(std::move(g));
  return out;
}

}  // namespace

TEST(Stabilizer, CanonicalGenerators) {
  EXPECT_EQ(canonical_generator(graphs::line(3), 1), PauliOp::parse("ZXZ"));
  EXPECT_EQ(canonical_generator(graphs::line(2), 0), PauliOp::parse("XZ"));
  EXPECT_EQ(canonical_generator(graphs::star(3), 0), PauliOp::parse("XZZZ"));
  EXPECT_THROW(canonical_generator(graphs::line(2), 2), std::out_of_range);
}

TEST(Stabilizer, SubsetProducts) {
  EXPECT_EQ(subset_stabilizer(graphs::line(2), VertexSet{0, 1}), PauliOp::parse("YY"));
  EXPECT_EQ(subset_stabilizer(graphs::line(3), {}), PauliOp::identity(3));
  EXPECT_EQ(subset_stabilizer(graphs::line(3), VertexSet{0, 1, 2}), PauliOp::parse("-YXY"));
}

TEST(Stabilizer, SubsetProductsMatchDenseOracle) {
  for (const auto& g : small_graphs(4)) {
    for (std::uint64_t m = 0; m < (1u << g.num_vertices()); ++m) {
      const VertexSet s(m);
      ASSERT_LT(oracle::max_diff(as_matrix(subset_stabilizer(g, s)), dense_product(g, s)), 1e-12);
    }
  }
}

TEST(Stabilizer, EveryGroupElementStabilizesTheGraphState) {
  for (const auto& g : small_graphs(5)) {
    const auto sv = Statevector::graph_state(g);
    for (std::uint64_t m = 0; m < (1u << g.num_vertices()); ++m) {
      const auto e = sv.expectation(subset_stabilizer(g, VertexSet(m)));
      ASSERT_NEAR(e.real(), 1.0, 1e-12);
      ASSERT_NEAR(e.imag(), 0.0, 1e-12);
    }
  }
}

TEST(Stabilizer, S0Operator) {
  EXPECT_EQ(s0_operator(graphs::line(2)), PauliOp::parse("ZZ"));
  EXPECT_EQ(s0_operator(graphs::cycle(4)), PauliOp::identity(4));
  EXPECT_EQ(s0_operator(graphs::line(3)), PauliOp::parse("ZIZ"));
}

TEST(Stabilizer, DummylessExamples) {
  const auto two = dummyless_generators(graphs::line(2));
  ASSERT_EQ(two.generators.size(), 1u);
  EXPECT_EQ(two.generators[0], PauliOp::parse("YY"));
  EXPECT_EQ(gf2_rank(dummyless_generators(graphs::cycle(4)).generators), 3u);
  EXPECT_EQ(gf2_rank(dummyless_generators(graphs::cycle(5)).generators), 4u);
  EXPECT_TRUE(dummyless_generators(OpenGraph(1, {})).generators.empty());
}

TEST(Stabilizer, DummylessPropertiesOnRandomGraphs) {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(7));
    const auto g = graphs::random_connected(n, rng.unit() * 0.6, rng);
    const auto set = dummyless_generators(g);
    ASSERT_EQ(set.generators.size(), n - 1);
    EXPECT_TRUE(set.all_z_free());
    EXPECT_TRUE(set.pairwise_commute());
    EXPECT_EQ(gf2_rank(set.generators), n - 1);
    const PauliOp s0 = s0_operator(g);
    for (const auto& r : set.generators) EXPECT_TRUE(s0.commutes_with(r));
    if (!s0.is_identity()) {
      auto with = set.generators;
      with.push_back(s0);
      EXPECT_EQ(gf2_rank(with), n);
    }
  }
}

TEST(Stabilizer, OddChainTree) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto g = graphs::random_connected(2 + static_cast<std::size_t>(rng.uniform(9)), 0.35, rng);
    const VertexSet odd = g.odd_vertices();
    const auto chains = odd_chain_tree(g);
    if (odd.size() < 2) {
      EXPECT_TRUE(chains.empty());
      continue;
    }
    ASSERT_EQ(chains.size(), odd.size() - 1);
    VertexSet linked{chains[0].front()};
    for (const auto& c : chains) {
      EXPECT_TRUE(odd.contains(c.front()));
      EXPECT_TRUE(odd.contains(c.back()));
      for (std::size_t k = 1; k + 1 < c.size(); ++k) EXPECT_FALSE(odd.contains(c[k]));
      // Induced path: consecutive vertices adjacent, no chords.
      for (std::size_t a = 0; a < c.size(); ++a)
        for (std::size_t b = a + 1; b < c.size(); ++b) EXPECT_EQ(g.adjacent(c[a], c[b]), b == a + 1);
      EXPECT_TRUE(linked.contains(c.front()));
      linked.insert(c.back());
    }
    EXPECT_EQ(linked, odd);
  }
}

TEST(Stabilizer, ZWeightAdditiveOverGeneratorProducts) {
  for (const auto& g : small_graphs(5)) {
    const VertexSet all = g.vertices();
    for (std::uint64_t a = 0; a < (1u << g.num_vertices()); a += 3) {
      for (std::uint64_t b = 0; b < (1u << g.num_vertices()); b += 5) {
        const PauliOp pa = subset_stabilizer(g, VertexSet(a)), pb = subset_stabilizer(g, VertexSet(b));
        EXPECT_EQ(zwt(pa * pb, all) % 2, (zwt(pa, all) + zwt(pb, all)) % 2);
      }
    }
  }
}

TEST(CoeffMap, ReflectionExamples) {
  PauliCoeffMap plus(1);
  plus.add(PauliOp::parse("I"), 0.5);
  plus.add(PauliOp::parse("X"), 0.5);
  const auto fp = apply_reflection(plus, VertexSet{0});
  EXPECT_EQ(fp.coeff(PauliOp::parse("X")), std::complex<double>(0.5));

  PauliCoeffMap zero(1);
  zero.add(PauliOp::parse("I"), 0.5);
  zero.add(PauliOp::parse("Z"), 0.5);
  const auto fz = apply_reflection(zero, VertexSet{0});
  EXPECT_EQ(fz.coeff(PauliOp::parse("Z")), std::complex<double>(-0.5));
  EXPECT_EQ(fz.coeff(PauliOp::parse("I")), std::complex<double>(0.5));
}

TEST(CoeffMap, GraphStateDensity) {
  for (const auto& g : small_graphs(4)) {
    const auto rho = graph_state_density(g);
    EXPECT_EQ(rho.size(), std::size_t{1} << g.num_vertices());
    EXPECT_NEAR(rho.trace().real(), 1.0, 1e-12);
    EXPECT_LT(oracle::max_diff(rho.to_dense(), oracle::outer(oracle::graph_state(g))), 1e-12);
  }
}

TEST(CoeffMap, ReflectionEqualsConjugationByS0) {
  for (const auto& g : small_graphs(5)) {
    const auto rho = graph_state_density(g);
    const auto reflected = apply_reflection(rho, g.vertices()).to_dense();
    const auto s0 = as_matrix(s0_operator(g));
    const std::size_t d = std::size_t{1} << g.num_vertices();
    const auto conj = oracle::matmul(oracle::matmul(s0, rho.to_dense(), d), s0, d);
    ASSERT_LT(oracle::max_diff(reflected, conj), 1e-12);
  }
}

TEST(CoeffMap, TwoLineReflectionMatchesZZ) {
  const auto g = graphs::line(2);
  auto psi = oracle::graph_state(g);
  const auto zz = oracle::letters("ZZ");
  const auto conj = oracle::matmul(oracle::matmul(zz, oracle::outer(psi), 4), zz, 4);
  EXPECT_LT(oracle::max_diff(apply_reflection(graph_state_density(g), g.vertices()).to_dense(), conj), 1e-12);
}
