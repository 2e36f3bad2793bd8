#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "xyv/angle.hpp"
#include "xyv/branching.hpp"
#include "xyv/graph.hpp"
#include "xyv/pauli.hpp"

namespace xyv {

/// Flow map plus the X/Z dependency sets it induces. sx[v] lists the vertices
/// whose outcomes flip the sign of v's angle, sz[v] those that add pi.
struct Flow {
  std::map<Vertex, Vertex> f;
  std::vector<VertexSet> sx;
  std::vector<VertexSet> sz;
};

/// Dependencies of the usual flow corrections: v enters S_X(f(v)) and
/// S_Z(u) for every other neighbour u of f(v).
Flow standard_flow(const OpenGraph& g, std::map<Vertex, Vertex> f);

/// Total measurement order: order pairs of g, dependencies before dependants,
/// v before f(v); ties by vertex index. Throws std::invalid_argument on a cycle.
std::vector<Vertex> measurement_order(const OpenGraph& g, const Flow& flow);

/// Classical-input, classical-output pattern. Every vertex is measured.
struct MeasurementPattern {
  OpenGraph graph;
  std::vector<Angle8> angles;
  Flow flow;
  /// One entry per vertex, zero off the inputs.
  std::vector<int> input_bits;
  std::vector<Vertex> order;

  std::size_t num_vertices() const { return graph.num_vertices(); }
  MeasurementPattern with_inputs(const std::vector<int>& bits_on_inputs) const;
};

/// Validates the flow and computes the measurement order. Throws
/// std::invalid_argument for an invalid flow or malformed input bits.
MeasurementPattern make_pattern(OpenGraph g, std::vector<Angle8> angles, Flow flow, std::vector<int> input_bits);

/// (-1)^{s_X} phi(v) + pi s_Z with s_X, s_Z the parities of `s` over the
/// dependency sets. Throws std::logic_error if a dependency is not in `measured`.
Angle8 corrected_angle(const MeasurementPattern& p, Vertex v, const std::vector<int>& s, VertexSet measured);

/// Called before each measurement with (step index, vertex); a returned
/// Pauli is applied to the unmeasured qubits right away.
using DeviationHook = std::function<std::optional<PauliOp>(std::size_t, Vertex)>;

/// Applies `p` just before the first measurement and nothing afterwards.
DeviationHook deviation_before_first(PauliOp p);

/// Output bits in increasing order of output vertex.
std::vector<int> run_mbqc(const MeasurementPattern& p, Chooser& chooser, const DeviationHook& deviation = {});

/// Exact output distribution of run_mbqc.
BitDistribution mbqc_distribution(const MeasurementPattern& p, const DeviationHook& deviation = {},
                                  const EnumerateOptions& opts = {});

/// Output bits of `s` in increasing order of output vertex.
std::vector<int> output_bits(const MeasurementPattern& p, const std::vector<int>& s);

namespace patterns {

/// Line v1-v2-v3, all angles 0, flow v1->v2->v3. The output equals x.
MeasurementPattern identity_line(int x = 0);
/// Two wires a1-a2-a3 and b1-b2-b3 joined by a2-b2. Outputs (x_a, x_b).
MeasurementPattern identity_pair(int xa = 0, int xb = 0);
/// Random pattern with a valid flow: 1..max_wires wires covering `n`
/// vertices, random cross edges, uniformly random angles and inputs.
MeasurementPattern random_pattern(std::size_t n, std::size_t max_wires, Rng& rng);

}  // namespace patterns

}  // namespace xyv
