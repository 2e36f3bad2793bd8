#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xyv/rng.hpp"
#include "xyv/vertex_set.hpp"

namespace xyv {

using Edge = std::pair<Vertex, Vertex>;

/// Connected simple graph with input and output vertex sets and an optional
/// partial order, given as "a before b" pairs.
class OpenGraph {
 public:
  OpenGraph() = default;
  /// Throws std::invalid_argument on self-loops, out-of-range endpoints,
  /// I/O outside V, more than 64 vertices, or a disconnected graph.
  OpenGraph(std::size_t n, std::vector<Edge> edges, VertexSet inputs = {}, VertexSet outputs = {},
            std::vector<Edge> order = {}, std::vector<std::string> labels = {});

  std::size_t num_vertices() const { return n_; }
  VertexSet vertices() const { return VertexSet::first(n_); }
  const std::vector<Edge>& edges() const { return edges_; }
  VertexSet neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex a, Vertex b) const { return adj_.at(a).contains(b); }
  VertexSet odd_vertices() const { return odd_; }
  VertexSet even_vertices() const { return vertices() - odd_; }
  VertexSet inputs() const { return inputs_; }
  VertexSet outputs() const { return outputs_; }
  const std::vector<Edge>& order() const { return order_; }

  const std::string& label(Vertex v) const { return labels_.at(v); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Throws std::out_of_range for unknown labels.
  Vertex index_of(const std::string& label) const;

  /// Vertices reachable from `from` using only vertices of `allowed`.
  VertexSet reachable(Vertex from, VertexSet allowed) const;
  /// Colour per vertex with colour 0/1, if the graph is bipartite.
  std::optional<std::vector<int>> two_coloring() const;
  /// Exact 2-colouring when bipartite, greedy colouring in vertex order otherwise.
  std::vector<int> proper_coloring() const;
  bool is_proper_coloring(const std::vector<int>& colors) const;

  OpenGraph with_io(VertexSet inputs, VertexSet outputs) const;

  bool operator==(const OpenGraph& o) const {
    return n_ == o.n_ && adj_ == o.adj_ && inputs_ == o.inputs_ && outputs_ == o.outputs_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  VertexSet odd_;
  VertexSet inputs_;
  VertexSet outputs_;
  std::vector<Edge> order_;
  std::vector<std::string> labels_;
};

namespace graphs {

OpenGraph line(std::size_t n);
OpenGraph cycle(std::size_t n);
/// K_{1,leaves} with the centre as vertex 0.
OpenGraph star(std::size_t leaves);
OpenGraph complete(std::size_t n);
/// Brickwork layout with vertex (i, j) at index i*cols + j. Inputs are
/// column 0, outputs the last column. Needs rows >= 2 and cols >= 5.
OpenGraph brickwork(std::size_t rows, std::size_t cols);
/// (rows, cols) if g has exactly the brickwork edge set for some layout.
std::optional<std::pair<std::size_t, std::size_t>> brickwork_shape(const OpenGraph& g);
/// Uniform random spanning tree plus each remaining edge with probability p.
OpenGraph random_connected(std::size_t n, double p, Rng& rng);
/// One representative per isomorphism class of connected graphs on exactly n
/// vertices, n <= 6.
std::vector<OpenGraph> all_connected(std::size_t n);

}  // namespace graphs

}  // namespace xyv
