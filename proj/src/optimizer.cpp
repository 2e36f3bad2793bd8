#include "xyv/optimizer.hpp"

#include <algorithm>

#include "xyv/error.hpp"
#include "xyv/parallel.hpp"
#include "xyv/simplex.hpp"

namespace xyv {

std::vector<TrappifiedTest> enumerate_tests(const OpenGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > kOptimizerVertexCap) throw SizeCapExceeded("test enumeration limited to 12 vertices");
  std::vector<TrappifiedTest> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    const VertexSet traps(mask);
    if (is_valid_holeset(g, g.vertices() - traps)) out.push_back(make_test(g, traps));
  }
  return out;
}

std::vector<ErrorOp> enumerate_errors(const OpenGraph& g) {
  if (g.num_vertices() > kOptimizerVertexCap) throw SizeCapExceeded("error enumeration limited to 12 vertices");
  return all_errors(g);
}

LpInstance build_lp_instance(const OpenGraph& g) {
  LpInstance inst{g, enumerate_tests(g), enumerate_errors(g), {}};
  inst.matrix.assign(inst.tests.size(), std::vector<std::uint8_t>(inst.errors.size()));
  parallel_for(inst.tests.size(), [&](std::size_t t) {
    for (std::size_t e = 0; e < inst.errors.size(); ++e) inst.matrix[t][e] = detects(inst.tests[t], inst.errors[e]);
  });
  return inst;
}

LpSolution solve_lp(const LpInstance& inst) {
  if (inst.tests.empty() || inst.errors.empty()) throw std::invalid_argument("solve_lp: empty instance");
  const GameSolution game = solve_matrix_game(inst.matrix);
  LpSolution sol;
  sol.weights = game.row_strategy;
  sol.epsilon = game.value;
  sol.duality_gap = game.gap;
  double total = 0.0;
  for (double w : sol.weights) {
    total += w;
    sol.max_violation = std::max(sol.max_violation, -w);
  }
  sol.max_violation = std::max(sol.max_violation, total - 1.0);
  for (std::size_t e = 0; e < inst.errors.size(); ++e) {
    double cover = 0.0;
    for (std::size_t t = 0; t < inst.tests.size(); ++t) cover += inst.matrix[t][e] * sol.weights[t];
    sol.max_violation = std::max(sol.max_violation, sol.epsilon - cover);
  }
  return sol;
}

TestDistribution solution_distribution(const LpInstance& inst, const LpSolution& sol) {
  std::vector<TestComponent> comps;
  const VertexSet all = inst.graph.vertices();
  for (std::size_t t = 0; t < inst.tests.size(); ++t) {
    if (sol.weights[t] <= 0) continue;
    TestComponent c;
    c.weight = sol.weights[t];
    c.mode = TestComponent::Mode::Fixed;
    const VertexSet holes = all - inst.tests[t].traps;
    if (!holes.empty()) c.blocks.push_back(holes);
    comps.push_back(std::move(c));
  }
  return TestDistribution(inst.graph.num_vertices(), std::move(comps));
}

}  // namespace xyv
