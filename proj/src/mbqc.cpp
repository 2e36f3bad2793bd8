#include "xyv/mbqc.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "xyv/statevector.hpp"

namespace xyv {

Flow standard_flow(const OpenGraph& g, std::map<Vertex, Vertex> f) {
  Flow flow{std::move(f), std::vector<VertexSet>(g.num_vertices()), std::vector<VertexSet>(g.num_vertices())};
  for (auto [v, fv] : flow.f) {
    if (v >= g.num_vertices() || fv >= g.num_vertices()) throw std::invalid_argument("flow vertex out of range");
    flow.sx[fv].insert(v);
    for (Vertex u : g.neighbors(fv) - VertexSet{v}) flow.sz[u].insert(v);
  }
  return flow;
}

std::vector<Vertex> measurement_order(const OpenGraph& g, const Flow& flow) {
  const std::size_t n = g.num_vertices();
  std::vector<VertexSet> before(n);
  for (auto [a, b] : g.order()) before[b].insert(a);
  for (Vertex v = 0; v < n; ++v) {
    if (v < flow.sx.size()) before[v] |= flow.sx[v];
    if (v < flow.sz.size()) before[v] |= flow.sz[v];
  }
  for (auto [v, fv] : flow.f) before[fv].insert(v);
  for (Vertex v = 0; v < n; ++v) {
    if (before[v].contains(v)) throw std::invalid_argument("flow makes a vertex depend on itself");
  }

  std::vector<Vertex> order;
  VertexSet done;
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> ready;
  std::vector<bool> queued(n, false);
  auto push_ready = [&] {
    for (Vertex v = 0; v < n; ++v)
      if (!queued[v] && before[v].is_subset_of(done)) {
        queued[v] = true;
        ready.push(v);
      }
  };
  push_ready();
  while (!ready.empty()) {
    Vertex v = ready.top();
    ready.pop();
    order.push_back(v);
    done.insert(v);
    push_ready();
  }
  if (order.size() != n) throw std::invalid_argument("flow induces a cyclic measurement order");
  return order;
}

MeasurementPattern MeasurementPattern::with_inputs(const std::vector<int>& bits_on_inputs) const {
  const auto in = graph.inputs().to_vector();
  if (bits_on_inputs.size() != in.size()) throw std::invalid_argument("input bit count does not match |I|");
  MeasurementPattern out = *this;
  std::fill(out.input_bits.begin(), out.input_bits.end(), 0);
  for (std::size_t i = 0; i < in.size(); ++i) out.input_bits[in[i]] = bits_on_inputs[i] & 1;
  return out;
}

MeasurementPattern make_pattern(OpenGraph g, std::vector<Angle8> angles, Flow flow, std::vector<int> input_bits) {
  const std::size_t n = g.num_vertices();
  if (angles.size() != n) throw std::invalid_argument("one angle per vertex required");
  if (input_bits.empty()) input_bits.assign(n, 0);
  if (input_bits.size() != n) throw std::invalid_argument("input bits must cover every vertex");
  for (Vertex v = 0; v < n; ++v) {
    if (input_bits[v] != 0 && input_bits[v] != 1) throw std::invalid_argument("input bits must be 0 or 1");
    if (input_bits[v] && !g.inputs().contains(v)) throw std::invalid_argument("input bit set on a non-input vertex");
  }
  for (auto [v, fv] : flow.f) {
    if (g.outputs().contains(v)) throw std::invalid_argument("flow defined on an output vertex");
    if (g.inputs().contains(fv)) throw std::invalid_argument("flow maps onto an input vertex");
    if (!g.adjacent(v, fv)) throw std::invalid_argument("flow maps a vertex to a non-neighbour");
  }
  flow.sx.resize(n);
  flow.sz.resize(n);
  auto order = measurement_order(g, flow);
  return MeasurementPattern{std::move(g), std::move(angles), std::move(flow), std::move(input_bits), std::move(order)};
}

Angle8 corrected_angle(const MeasurementPattern& p, Vertex v, const std::vector<int>& s, VertexSet measured) {
  const VertexSet deps = p.flow.sx[v] | p.flow.sz[v];
  if (!deps.is_subset_of(measured)) throw std::logic_error("corrected_angle: dependency not yet measured");
  int sx = 0, sz = 0;
  for (Vertex u : p.flow.sx[v]) sx ^= s[u];
  for (Vertex u : p.flow.sz[v]) sz ^= s[u];
  return p.angles[v].signed_by(sx) + Angle8::pi_times(sz);
}

DeviationHook deviation_before_first(PauliOp p) {
  return [p = std::move(p)](std::size_t step, Vertex) -> std::optional<PauliOp> {
    if (step == 0 && !p.is_identity()) return p;
    return std::nullopt;
  };
}

std::vector<int> output_bits(const MeasurementPattern& p, const std::vector<int>& s) {
  std::vector<int> out;
  for (Vertex v : p.graph.outputs()) out.push_back(s[v]);
  return out;
}

std::vector<int> run_mbqc(const MeasurementPattern& p, Chooser& chooser, const DeviationHook& deviation) {
  Statevector sv = Statevector::graph_state(p.graph);
  std::vector<int> s(p.num_vertices(), 0);
  VertexSet measured;
  for (std::size_t step = 0; step < p.order.size(); ++step) {
    const Vertex v = p.order[step];
    if (deviation) {
      if (auto e = deviation(step, v)) {
        if (!(e->support() & measured).empty()) throw std::invalid_argument("deviation acts on a measured qubit");
        sv.apply_pauli(*e);
      }
    }
    const Angle8 delta = corrected_angle(p, v, s, measured) + Angle8::pi_times(p.input_bits[v]);
    s[v] = sv.measure_xy(v, delta, chooser);
    measured.insert(v);
  }
  return output_bits(p, s);
}

BitDistribution mbqc_distribution(const MeasurementPattern& p, const DeviationHook& deviation,
                                  const EnumerateOptions& opts) {
  return exact_distribution<std::string>(
      [&](Chooser& c) { return bits_to_string(run_mbqc(p, c, deviation)); }, opts);
}

namespace patterns {

MeasurementPattern identity_line(int x) {
  OpenGraph g(3, {{0, 1}, {1, 2}}, VertexSet{0}, VertexSet{2});
  std::vector<int> in{x & 1, 0, 0};
  return make_pattern(g, std::vector<Angle8>(3), standard_flow(g, {{0, 1}, {1, 2}}), in);
}

MeasurementPattern identity_pair(int xa, int xb) {
  // a1 a2 a3 b1 b2 b3 = 0..5
  OpenGraph g(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}}, VertexSet{0, 3}, VertexSet{2, 5}, {},
              {"a1", "a2", "a3", "b1", "b2", "b3"});
  std::vector<int> in{xa & 1, 0, 0, xb & 1, 0, 0};
  return make_pattern(g, std::vector<Angle8>(6), standard_flow(g, {{0, 1}, {1, 2}, {3, 4}, {4, 5}}), in);
}

MeasurementPattern random_pattern(std::size_t n, std::size_t max_wires, Rng& rng) {
  if (n == 0) throw std::invalid_argument("random_pattern: empty pattern");
  for (;;) {
    const std::size_t wires = 1 + static_cast<std::size_t>(rng.uniform(static_cast<int>(std::min(max_wires, n))));
    // Cut the vertex sequence 0..n-1 into `wires` nonempty consecutive runs.
    std::vector<std::size_t> cuts;
    while (cuts.size() + 1 < wires) {
      std::size_t c = 1 + static_cast<std::size_t>(rng.uniform(static_cast<int>(n - 1)));
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.insert(cuts.begin(), 0);
    cuts.push_back(n);
    std::vector<Edge> edges;
    std::map<Vertex, Vertex> f;
    VertexSet in, out;
    for (std::size_t w = 0; w + 1 < cuts.size(); ++w) {
      in.insert(cuts[w]);
      out.insert(cuts[w + 1] - 1);
      for (Vertex v = cuts[w]; v + 1 < cuts[w + 1]; ++v) {
        edges.emplace_back(v, v + 1);
        f[v] = v + 1;
      }
    }
    std::vector<Edge> extra;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        if (std::find(edges.begin(), edges.end(), Edge{a, b}) == edges.end() && rng.bernoulli(0.4))
          extra.emplace_back(a, b);
    // Add cross edges one at a time, keeping those that leave the flow valid.
    std::vector<Edge> kept = edges;
    for (const Edge& e : extra) {
      kept.push_back(e);
      bool ok = true;
      try {
        std::vector<VertexSet> adj(n);
        for (auto [a, b] : kept) {
          adj[a].insert(b);
          adj[b].insert(a);
        }
        Flow fl{f, std::vector<VertexSet>(n), std::vector<VertexSet>(n)};
        for (auto [v, fv] : f) {
          fl.sx[fv].insert(v);
          for (Vertex u : adj[fv] - VertexSet{v}) fl.sz[u].insert(v);
        }
        // The order check needs a graph; connectivity may not hold yet, so
        // build a throwaway graph over the kept edges plus a spanning path.
        std::vector<Edge> probe = kept;
        for (Vertex v = 0; v + 1 < n; ++v) probe.emplace_back(v, v + 1);
        measurement_order(OpenGraph(n, probe), fl);
      } catch (const std::invalid_argument&) {
        ok = false;
      }
      if (!ok) kept.pop_back();
    }
    try {
      OpenGraph g(n, kept, in, out);
      std::vector<Angle8> angles(n);
      for (auto& a : angles) a = Angle8(rng.uniform(8));
      std::vector<int> bits(n, 0);
      for (Vertex v : in) bits[v] = rng.bit();
      return make_pattern(g, angles, standard_flow(g, f), bits);
    } catch (const std::invalid_argument&) {
      // disconnected; draw again
    }
  }
}

}  // namespace patterns

}  // namespace xyv
