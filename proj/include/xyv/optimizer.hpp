#pragma once

#include <vector>

#include "xyv/graph.hpp"
#include "xyv/traps.hpp"

namespace xyv {

inline constexpr std::size_t kOptimizerVertexCap = 12;

/// Every dummyless test of g except the empty trap set, in increasing trap
/// mask order. Throws SizeCapExceeded above 12 vertices.
std::vector<TrappifiedTest> enumerate_tests(const OpenGraph& g);
/// Every nonempty Z support except E*. Throws SizeCapExceeded above 12 vertices.
std::vector<ErrorOp> enumerate_errors(const OpenGraph& g);

struct LpInstance {
  OpenGraph graph;
  std::vector<TrappifiedTest> tests;
  std::vector<ErrorOp> errors;
  /// matrix[t][e] = detects(tests[t], errors[e])
  std::vector<std::vector<std::uint8_t>> matrix;
};

LpInstance build_lp_instance(const OpenGraph& g);

struct LpSolution {
  std::vector<double> weights;
  double epsilon = 0.0;
  /// Upper bound from the error-side strategy minus epsilon.
  double duality_gap = 0.0;
  /// Largest amount by which any constraint is violated.
  double max_violation = 0.0;
};

/// Maximises the minimum detection probability over the errors. Throws
/// UncoveredError when some error is detected by no test.
LpSolution solve_lp(const LpInstance& instance);

TestDistribution solution_distribution(const LpInstance& instance, const LpSolution& sol);

}  // namespace xyv
