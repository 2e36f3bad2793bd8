#pragma once

#include <vector>

#include "xyv/graph.hpp"
#include "xyv/pauli.hpp"

namespace xyv {

/// S_v = X on v, Z on each neighbour of v.
PauliOp canonical_generator(const OpenGraph& g, Vertex v);

/// Ordered product of S_v over `subset` (increasing vertex order). Since the
/// S_v commute the order does not affect the result.
PauliOp subset_stabilizer(const OpenGraph& g, VertexSet subset);

/// Z on every odd-degree vertex; the identity when every degree is even.
PauliOp s0_operator(const OpenGraph& g);

struct StabilizerSet {
  OpenGraph graph;
  std::vector<PauliOp> generators;

  bool pairwise_commute() const;
  bool all_z_free() const;
};

/// |V_odd| - 1 paths linking all odd-degree vertices into a tree. Every path
/// starts and ends at an odd-degree vertex, has only even-degree interior
/// vertices and is an induced path of g. Paths are listed vertex by vertex.
/// Empty when g has fewer than two odd-degree vertices.
std::vector<std::vector<Vertex>> odd_chain_tree(const OpenGraph& g);

/// |V| - 1 independent stabilizers of |G> whose letters are all I, X or Y.
/// They come from R_full, then R with one even-degree vertex removed, then R
/// with one tree chain removed, keeping only independent ones.
StabilizerSet dummyless_generators(const OpenGraph& g);

}  // namespace xyv
