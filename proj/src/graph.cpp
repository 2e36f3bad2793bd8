#include "xyv/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace xyv {

OpenGraph::OpenGraph(std::size_t n, std::vector<Edge> edges, VertexSet inputs, VertexSet outputs,
                     std::vector<Edge> order, std::vector<std::string> labels)
    : n_(n), adj_(n), inputs_(inputs), outputs_(outputs), order_(std::move(order)) {
  if (n == 0) throw std::invalid_argument("graph has no vertices");
  if (n > kMaxVertices) throw std::invalid_argument("graph has more than 64 vertices");
  std::set<Edge> seen;
  for (auto [a, b] : edges) {
    if (a >= n || b >= n) throw std::invalid_argument("edge endpoint out of range");
    if (a == b) throw std::invalid_argument("self-loop");
    if (a > b) std::swap(a, b);
    if (!seen.insert({a, b}).second) continue;
    edges_.emplace_back(a, b);
    adj_[a].insert(b);
    adj_[b].insert(a);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (adj_[v].parity()) odd_.insert(v);
  }
  const VertexSet all = vertices();
  if (!inputs_.is_subset_of(all) || !outputs_.is_subset_of(all)) {
    throw std::invalid_argument("input/output vertices outside the graph");
  }
  for (auto [a, b] : order_) {
    if (a >= n || b >= n) throw std::invalid_argument("order pair out of range");
  }
  if (reachable(0, all) != all) throw std::invalid_argument("graph is disconnected");
  if (labels.empty()) {
    labels_.reserve(n);
    for (Vertex v = 0; v < n; ++v) labels_.push_back("v" + std::to_string(v + 1));
  } else {
    if (labels.size() != n) throw std::invalid_argument("label count does not match vertex count");
    if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
      throw std::invalid_argument("duplicate vertex label");
    }
    labels_ = std::move(labels);
  }
}

Vertex OpenGraph::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw std::out_of_range("unknown vertex label '" + label + "'");
  return static_cast<Vertex>(it - labels_.begin());
}

VertexSet OpenGraph::reachable(Vertex from, VertexSet allowed) const {
  VertexSet seen{from};
  VertexSet frontier{from};
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= adj_[v];
    next = (next & allowed) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::optional<std::vector<int>> OpenGraph::two_coloring() const {
  std::vector<int> color(n_, -1);
  color[0] = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : adj_[v]) {
      if (color[u] == -1) {
        color[u] = 1 - color[v];
        stack.push_back(u);
      } else if (color[u] == color[v]) {
        return std::nullopt;
      }
    }
  }
  return color;
}

std::vector<int> OpenGraph::proper_coloring() const {
  if (auto two = two_coloring()) return *two;
  std::vector<int> color(n_, -1);
  for (Vertex v = 0; v < n_; ++v) {
    std::uint64_t used = 0;
    for (Vertex u : adj_[v]) {
      if (color[u] >= 0) used |= std::uint64_t{1} << color[u];
    }
    color[v] = std::countr_one(used);
  }
  return color;
}

bool OpenGraph::is_proper_coloring(const std::vector<int>& colors) const {
  if (colors.size() != n_) return false;
  for (auto [a, b] : edges_) {
    if (colors[a] == colors[b]) return false;
  }
  return std::all_of(colors.begin(), colors.end(), [](int c) { return c >= 0; });
}

OpenGraph OpenGraph::with_io(VertexSet inputs, VertexSet outputs) const {
  return OpenGraph(n_, edges_, inputs, outputs, order_, labels_);
}

namespace graphs {

OpenGraph line(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return OpenGraph(n, e);
}

OpenGraph cycle(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return OpenGraph(n, e);
}

OpenGraph star(std::size_t leaves) {
  std::vector<Edge> e;
  for (Vertex v = 1; v <= leaves; ++v) e.emplace_back(0, v);
  return OpenGraph(leaves + 1, e);
}

OpenGraph complete(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return OpenGraph(n, e);
}

namespace {

std::vector<Edge> brickwork_edges(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  auto id = [cols](std::size_t i, std::size_t j) { return i * cols + j; };
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j + 1 < cols; ++j) e.emplace_back(id(i, j), id(i, j + 1));
  for (std::size_t i = 0; i + 1 < rows; ++i) {
    for (std::size_t j = 0; j + 2 < cols; ++j) {
      const bool here = (j % 8 == 2 && i % 2 == 0) || (j % 8 == 6 && i % 2 == 1);
      if (!here) continue;
      e.emplace_back(id(i, j), id(i + 1, j));
      e.emplace_back(id(i, j + 2), id(i + 1, j + 2));
    }
  }
  return e;
}

}  // namespace

OpenGraph brickwork(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 5) throw std::invalid_argument("brickwork needs rows >= 2 and cols >= 5");
  if (rows * cols > kMaxVertices) throw std::invalid_argument("brickwork larger than 64 vertices");
  VertexSet in, out;
  for (std::size_t i = 0; i < rows; ++i) {
    in.insert(i * cols);
    out.insert(i * cols + cols - 1);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) labels.push_back(std::to_string(i) + "," + std::to_string(j));
  return OpenGraph(rows * cols, brickwork_edges(rows, cols), in, out, {}, labels);
}

std::optional<std::pair<std::size_t, std::size_t>> brickwork_shape(const OpenGraph& g) {
  const std::size_t n = g.num_vertices();
  for (std::size_t rows = 2; rows * 5 <= n; ++rows) {
    if (n % rows) continue;
    const std::size_t cols = n / rows;
    auto expected = brickwork_edges(rows, cols);
    if (expected.size() != g.edges().size()) continue;
    bool ok = std::all_of(expected.begin(), expected.end(),
                          [&](const Edge& e) { return g.adjacent(e.first, e.second); });
    if (ok) return std::pair{rows, cols};
  }
  return std::nullopt;
}

OpenGraph random_connected(std::size_t n, double p, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng.engine());
  std::set<Edge> edges;
  // Random recursive tree over a shuffled vertex order.
  for (std::size_t i = 1; i < n; ++i) {
    Vertex a = perm[i], b = perm[rng.uniform(static_cast<int>(i))];
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!edges.count({a, b}) && rng.bernoulli(p)) edges.insert({a, b});
  return OpenGraph(n, {edges.begin(), edges.end()});
}

std::vector<OpenGraph> all_connected(std::size_t n) {
  if (n == 0 || n > 6) throw std::invalid_argument("all_connected supports 1..6 vertices");
  std::vector<Edge> slots;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  std::vector<std::vector<Vertex>> perms;
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p); while (std::next_permutation(p.begin(), p.end()));

  auto slot_of = [n](Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    // Index of (a, b) in the row-major upper triangle.
    return a * n - a * (a + 1) / 2 + (b - a - 1);
  };
  std::set<std::uint32_t> canon_seen;
  std::vector<OpenGraph> out;
  const std::uint32_t total = std::uint32_t{1} << slots.size();
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    // Keep a labelled graph only if its mask is minimal over all relabellings.
    bool minimal = true;
    for (const auto& q : perms) {
      std::uint32_t m = 0;
      for (std::size_t s = 0; s < slots.size(); ++s)
        if (mask >> s & 1u) m |= std::uint32_t{1} << slot_of(q[slots[s].first], q[slots[s].second]);
      if (m < mask) {
        minimal = false;
        break;
      }
    }
    if (!minimal || canon_seen.count(mask)) continue;
    const std::uint32_t best = mask;
    std::vector<Edge> e;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1u) e.push_back(slots[s]);
    try {
      out.emplace_back(n, e);
      canon_seen.insert(best);
    } catch (const std::invalid_argument&) {
      // disconnected
    }
  }
  return out;
}

}  // namespace graphs

}  // namespace xyv
