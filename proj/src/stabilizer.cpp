#include "xyv/stabilizer.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace xyv {

PauliOp canonical_generator(const OpenGraph& g, Vertex v) {
  if (v >= g.num_vertices()) throw std::out_of_range("canonical_generator: vertex not in graph");
  return PauliOp(g.num_vertices(), VertexSet{v}, g.neighbors(v));
}

PauliOp subset_stabilizer(const OpenGraph& g, VertexSet subset) {
  if (!subset.is_subset_of(g.vertices())) throw std::out_of_range("subset_stabilizer: vertex not in graph");
  PauliOp acc = PauliOp::identity(g.num_vertices());
  for (Vertex v : subset) acc = acc * canonical_generator(g, v);
  return acc;
}

PauliOp s0_operator(const OpenGraph& g) { return PauliOp::z_on(g.num_vertices(), g.odd_vertices()); }

bool StabilizerSet::pairwise_commute() const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j)
      if (!generators[i].commutes_with(generators[j])) return false;
  return true;
}

bool StabilizerSet::all_z_free() const {
  return std::none_of(generators.begin(), generators.end(), [](const PauliOp& p) { return p.has_z_letter(); });
}

std::vector<std::vector<Vertex>> odd_chain_tree(const OpenGraph& g) {
  const VertexSet odd = g.odd_vertices();
  const VertexSet even = g.even_vertices();
  std::vector<std::vector<Vertex>> chains;
  if (odd.size() < 2) return chains;
  const std::size_t n = g.num_vertices();
  VertexSet tree{*odd.begin()};
  while (tree != odd) {
    // Multi-source BFS from the tree through even-degree vertices until a new
    // odd vertex is reached.
    std::vector<Vertex> parent(n, n);
    std::vector<bool> seen(n, false);
    std::deque<Vertex> queue;
    for (Vertex s : tree) {
      seen[s] = true;
      queue.push_back(s);
    }
    Vertex hit = n;
    while (!queue.empty() && hit == n) {
      Vertex v = queue.front();
      queue.pop_front();
      if (!tree.contains(v) && !even.contains(v)) continue;
      for (Vertex u : g.neighbors(v)) {
        if (seen[u]) continue;
        seen[u] = true;
        parent[u] = v;
        if (odd.contains(u)) {
          hit = u;
          break;
        }
        queue.push_back(u);
      }
    }
    if (hit == n) throw std::logic_error("odd_chain_tree: odd vertices not linked");
    std::vector<Vertex> path{hit};
    while (!tree.contains(path.back())) path.push_back(parent[path.back()]);
    std::reverse(path.begin(), path.end());
    chains.push_back(std::move(path));
    tree.insert(hit);
  }
  return chains;
}

StabilizerSet dummyless_generators(const OpenGraph& g) {
  const std::size_t n = g.num_vertices();
  const VertexSet all = g.vertices();
  std::vector<VertexSet> trap_sets{all};
  for (Vertex v : g.even_vertices()) trap_sets.push_back(all - VertexSet{v});
  for (const auto& chain : odd_chain_tree(g)) trap_sets.push_back(all - VertexSet::from(chain));

  StabilizerSet out{g, {}};
  for (VertexSet t : trap_sets) {
    if (out.generators.size() + 1 >= n) break;
    if (t.empty()) continue;
    PauliOp r = subset_stabilizer(g, t);
    out.generators.push_back(r);
    if (gf2_rank(out.generators) < out.generators.size()) out.generators.pop_back();
  }
  return out;
}

}  // namespace xyv
