#include "xyv/traps.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "xyv/error.hpp"
#include "xyv/parallel.hpp"
#include "xyv/simplex.hpp"
#include "xyv/stabilizer.hpp"
#include "xyv/statevector.hpp"

namespace xyv {

namespace {
constexpr std::size_t kSimulatedParityCap = 16;
constexpr std::size_t kMaxBlocksEnumerated = 22;
constexpr int kWeightGrid = 1 << 30;
}  // namespace

int TrappifiedTest::tau(const std::vector<int>& s) const {
  int parity = expected_parity;
  for (Vertex v : traps) parity ^= s.at(v);
  return parity;
}

bool is_valid_holeset(const OpenGraph& g, VertexSet holes) {
  const VertexSet traps = g.vertices() - holes;
  for (Vertex v : holes) {
    if ((g.neighbors(v) & traps).parity()) return false;
  }
  return true;
}

int simulated_expected_parity(const OpenGraph& g, VertexSet traps) {
  if (g.num_vertices() > kSimulatedParityCap) throw SizeCapExceeded("simulated parity needs at most 16 vertices");
  const PauliOp letters = subset_stabilizer(g, traps).unsigned_part();
  const Amp e = Statevector::graph_state(g).expectation(letters);
  if (std::abs(std::abs(e.real()) - 1.0) > 1e-9 || std::abs(e.imag()) > 1e-9) {
    throw std::logic_error("trap letters do not have a definite value on the graph state");
  }
  return e.real() < 0 ? 1 : 0;
}

TrappifiedTest make_test(const OpenGraph& g, VertexSet traps) {
  if (!traps.is_subset_of(g.vertices())) throw std::invalid_argument("make_test: trap outside the graph");
  const VertexSet holes = g.vertices() - traps;
  if (!is_valid_holeset(g, holes)) throw std::invalid_argument("make_test: invalid hole set");
  TrappifiedTest t;
  t.traps = traps;
  t.holes = holes;
  t.stabilizer = subset_stabilizer(g, traps);
  if (t.stabilizer.has_z_letter() || !t.stabilizer.is_hermitian()) {
    throw std::logic_error("make_test: test stabilizer is not a dummyless Hermitian Pauli");
  }
  t.basis.resize(g.num_vertices(), TrapBasis::Hole);
  for (Vertex v : traps) t.basis[v] = t.stabilizer.letter(v) == Letter::Y ? TrapBasis::Y : TrapBasis::X;
  t.expected_parity = t.stabilizer.phase() / 2;
  if (g.num_vertices() <= kSimulatedParityCap && simulated_expected_parity(g, traps) != t.expected_parity) {
    throw std::logic_error("make_test: phase-derived parity disagrees with simulation");
  }
  return t;
}

bool detects(const TrappifiedTest& t, const ErrorOp& e) { return detects(t.traps, e); }

MeasurementPattern test_pattern(const MeasurementPattern& comp, const TrappifiedTest& t, Chooser& chooser) {
  const std::size_t n = comp.num_vertices();
  MeasurementPattern p;
  p.graph = comp.graph;
  p.order = comp.order;
  p.input_bits.assign(n, 0);
  p.flow.sx.assign(n, {});
  p.flow.sz.assign(n, {});
  p.angles.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    switch (t.basis[v]) {
      case TrapBasis::X: p.angles[v] = Angle8(0); break;
      case TrapBasis::Y: p.angles[v] = Angle8(2); break;
      case TrapBasis::Hole: p.angles[v] = chooser.angle(); break;
    }
  }
  return p;
}

TestDistribution::TestDistribution(std::size_t n, std::vector<TestComponent> components)
    : n_(n), components_(std::move(components)) {
  const VertexSet all = VertexSet::first(n);
  for (const auto& c : components_) {
    if (c.weight < 0) throw std::invalid_argument("negative test weight");
    VertexSet seen;
    for (VertexSet b : c.blocks) {
      if (!b.is_subset_of(all)) throw std::invalid_argument("hole block outside the graph");
      if (!(seen & b).empty()) throw std::invalid_argument("hole blocks overlap");
      seen |= b;
    }
  }
  if (total_weight() > 1.0 + 1e-9) throw std::invalid_argument("test weights sum above 1");
}

double TestDistribution::total_weight() const {
  double s = 0.0;
  for (const auto& c : components_) s += c.weight;
  return s;
}

namespace {

std::size_t pick_component(const std::vector<TestComponent>& comps, double u) {
  double acc = 0.0;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    acc += comps[i].weight;
    if (u < acc) return i;
  }
  return comps.size() - 1;
}

VertexSet holes_from_bits(const TestComponent& c, std::uint64_t bits) {
  VertexSet holes;
  if (c.mode == TestComponent::Mode::Fixed) {
    for (VertexSet b : c.blocks) holes |= b;
    return holes;
  }
  for (std::size_t i = 0; i < c.blocks.size(); ++i)
    if ((bits >> i) & 1u) holes |= c.blocks[i];
  return holes;
}

}  // namespace

VertexSet TestDistribution::sample_traps(Chooser& chooser) const {
  if (components_.empty()) throw std::logic_error("empty test distribution");
  std::size_t ci = 0;
  if (components_.size() > 1) {
    const double u = static_cast<double>(chooser.uniform(kWeightGrid)) / kWeightGrid * total_weight();
    ci = pick_component(components_, u);
  }
  const auto& c = components_[ci];
  if (c.mode == TestComponent::Mode::Fixed) return VertexSet::first(n_) - holes_from_bits(c, 0);
  VertexSet holes;
  for (VertexSet b : c.blocks)
    if (chooser.bit()) holes |= b;
  return VertexSet::first(n_) - holes;
}

std::vector<std::pair<VertexSet, double>> TestDistribution::enumerate() const {
  std::map<VertexSet, double> acc;
  for (const auto& c : components_) {
    if (c.mode == TestComponent::Mode::Fixed || c.blocks.empty()) {
      acc[VertexSet::first(n_) - holes_from_bits(c, 0)] += c.weight;
      continue;
    }
    if (c.blocks.size() > kMaxBlocksEnumerated) throw BudgetExceeded("too many hole blocks to enumerate");
    const std::uint64_t count = std::uint64_t{1} << c.blocks.size();
    const double w = c.weight / static_cast<double>(count);
    for (std::uint64_t bits = 0; bits < count; ++bits) acc[VertexSet::first(n_) - holes_from_bits(c, bits)] += w;
  }
  return {acc.begin(), acc.end()};
}

bool TestDistribution::all_valid(const OpenGraph& g) const {
  for (const auto& c : components_) {
    if (c.mode == TestComponent::Mode::Fixed || c.blocks.empty()) {
      if (!is_valid_holeset(g, holes_from_bits(c, 0))) return false;
      continue;
    }
    bool separated = true;
    for (std::size_t i = 0; i < c.blocks.size() && separated; ++i) {
      VertexSet nb;
      for (Vertex v : c.blocks[i]) nb |= g.neighbors(v);
      for (std::size_t j = 0; j < c.blocks.size(); ++j)
        if (j != i && !(nb & c.blocks[j]).empty()) separated = false;
    }
    if (separated) {
      // With no edges between blocks each hole only sees its own block.
      for (VertexSet b : c.blocks)
        if (!is_valid_holeset(g, b)) return false;
      continue;
    }
    if (c.blocks.size() > kMaxBlocksEnumerated) throw BudgetExceeded("too many hole blocks to enumerate");
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << c.blocks.size()); ++bits)
      if (!is_valid_holeset(g, holes_from_bits(c, bits))) return false;
  }
  return true;
}

DetectionReport detection_rate(const TestDistribution& d, const std::vector<ErrorOp>& errors, DetectionMode mode) {
  DetectionReport rep;
  rep.rates.assign(errors.size(), 0.0);
  if (mode.exhaustive) {
    const auto tests = d.enumerate();
    for (std::size_t i = 0; i < errors.size(); ++i)
      for (const auto& [traps, w] : tests)
        if (detects(traps, errors[i])) rep.rates[i] += w;
  } else {
    if (mode.samples == 0) throw std::invalid_argument("Monte Carlo detection needs at least one sample");
    const auto& comps = d.components();
    if (comps.empty()) throw std::logic_error("empty test distribution");
    const double total = d.total_weight();
    const VertexSet all = VertexSet::first(d.num_vertices());
    parallel_for(errors.size(), [&](std::size_t i) {
      Rng rng(derive_seed(mode.seed, i));
      std::size_t hits = 0;
      for (std::size_t k = 0; k < mode.samples; ++k) {
        const auto& c = comps[comps.size() == 1 ? 0 : pick_component(comps, rng.unit() * total)];
        VertexSet holes;
        if (c.mode == TestComponent::Mode::Fixed) {
          holes = holes_from_bits(c, 0);
        } else {
          std::uint64_t bits = 0;
          for (std::size_t b = 0; b < c.blocks.size(); ++b) {
            if (b % 64 == 0) bits = rng.next();
            if ((bits >> (b % 64)) & 1u) holes |= c.blocks[b];
          }
        }
        const VertexSet traps = all - holes;
        hits += detects(traps, errors[i]);
      }
      rep.rates[i] = static_cast<double>(hits) / static_cast<double>(mode.samples);
    });
  }
  for (std::size_t i = 0; i < errors.size(); ++i) {
    if (rep.rates[i] < rep.min || i == 0) {
      rep.min = rep.rates[i];
      rep.argmin = i;
    }
  }
  return rep;
}

std::vector<double> insensitivity_rate(const TestDistribution& d, const std::vector<ErrorOp>& errors,
                                       DetectionMode mode) {
  auto rep = detection_rate(d, errors, mode);
  for (auto& r : rep.rates) r = 1.0 - r;
  return rep.rates;
}

TestDistribution strategy_even(const OpenGraph& g, std::optional<std::vector<int>> coloring) {
  const std::vector<int> colors = coloring ? *coloring : g.proper_coloring();
  if (!g.is_proper_coloring(colors)) throw std::invalid_argument("strategy_even: colouring is not proper");
  const int chi = *std::max_element(colors.begin(), colors.end()) + 1;
  std::vector<TestComponent> comps(static_cast<std::size_t>(chi));
  for (auto& c : comps) c.weight = 1.0 / chi;
  for (Vertex v : g.even_vertices()) comps[static_cast<std::size_t>(colors[v])].blocks.push_back(VertexSet{v});
  return TestDistribution(g.num_vertices(), std::move(comps));
}

ErrorOp harmless_error(const OpenGraph& g) { return ErrorOp{g.odd_vertices()}; }

std::vector<ErrorOp> errors_within(const OpenGraph& g, VertexSet region) {
  if (region.size() > 20) throw SizeCapExceeded("error enumeration limited to 20 vertices");
  const VertexSet star = g.odd_vertices();
  std::vector<ErrorOp> out;
  const std::uint64_t r = region.bits();
  // Submasks of r in increasing order.
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = r; m; m = (m - 1) & r) masks.push_back(m);
  std::sort(masks.begin(), masks.end());
  for (std::uint64_t m : masks)
    if (VertexSet(m) != star) out.push_back(ErrorOp{VertexSet(m)});
  return out;
}

std::vector<ErrorOp> all_errors(const OpenGraph& g) { return errors_within(g, g.vertices()); }

TestDistribution strategy_odd_chains(const OpenGraph& g) {
  const VertexSet odd = g.odd_vertices();
  if (odd.size() < 2) throw std::invalid_argument("strategy_odd_chains: fewer than two odd-degree vertices");
  if (odd.size() > 16) throw SizeCapExceeded("strategy_odd_chains: more than 16 odd-degree vertices");
  const VertexSet all = g.vertices();
  std::vector<VertexSet> hole_sets{VertexSet{}};
  for (const auto& chain : odd_chain_tree(g)) {
    const VertexSet h = VertexSet::from(chain);
    if (h != all) hole_sets.push_back(h);
  }
  const auto errors = errors_within(g, odd);
  std::vector<std::vector<std::uint8_t>> m(hole_sets.size(), std::vector<std::uint8_t>(errors.size()));
  for (std::size_t t = 0; t < hole_sets.size(); ++t)
    for (std::size_t e = 0; e < errors.size(); ++e) m[t][e] = detects(all - hole_sets[t], errors[e]);
  std::vector<double> weights(hole_sets.size(), 0.0);
  if (errors.empty()) {
    weights[0] = 1.0;
  } else {
    weights = solve_matrix_game(m).row_strategy;
  }
  std::vector<TestComponent> comps;
  for (std::size_t t = 0; t < hole_sets.size(); ++t) {
    TestComponent c;
    c.weight = weights[t];
    c.mode = TestComponent::Mode::Fixed;
    if (!hole_sets[t].empty()) c.blocks.push_back(hole_sets[t]);
    comps.push_back(std::move(c));
  }
  return TestDistribution(g.num_vertices(), std::move(comps));
}

TestDistribution strategy_general(const OpenGraph& g) {
  const std::size_t k_odd = g.odd_vertices().size();
  if (k_odd < 2) return strategy_even(g);
  if (g.even_vertices().empty()) return strategy_odd_chains(g);
  const auto colors = g.proper_coloring();
  const double chi = *std::max_element(colors.begin(), colors.end()) + 1;
  const double k = static_cast<double>(k_odd - 1);
  const double a = 2 * chi / (2 * chi + k);
  std::vector<TestComponent> comps;
  const TestDistribution even = strategy_even(g, colors), odd = strategy_odd_chains(g);
  for (auto c : even.components()) {
    c.weight *= a;
    comps.push_back(std::move(c));
  }
  for (auto c : odd.components()) {
    c.weight *= 1.0 - a;
    comps.push_back(std::move(c));
  }
  return TestDistribution(g.num_vertices(), std::move(comps));
}

std::vector<ChainClass> brickwork_chain_classes(std::size_t rows, std::size_t cols) {
  const OpenGraph g = graphs::brickwork(rows, cols);
  const VertexSet odd = g.odd_vertices();
  auto id = [cols](std::size_t i, std::size_t j) { return i * cols + j; };
  std::vector<ChainClass> classes{{"vertical", {}}, {"h00", {}}, {"h01", {}}, {"h10", {}}, {"h11", {}}};
  for (auto [a, b] : g.edges()) {
    const bool vertical = a / cols != b / cols;
    if (vertical && odd.contains(a) && odd.contains(b)) classes[0].chains.push_back(VertexSet{a, b});
  }
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<std::size_t> odd_cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (odd.contains(id(i, j))) odd_cols.push_back(j);
    for (std::size_t c = 0; c + 1 < odd_cols.size(); ++c) {
      VertexSet chain;
      for (std::size_t j = odd_cols[c]; j <= odd_cols[c + 1]; ++j) chain.insert(id(i, j));
      classes[1 + 2 * (i % 2) + (c % 2)].chains.push_back(chain);
    }
  }

  // Chains of one class are disjoint, pairwise non-adjacent and valid, and
  // together the classes link every odd vertex.
  VertexSet linked{*odd.begin()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& cls : classes)
      for (VertexSet ch : cls.chains) {
        const VertexSet ends = ch & odd;
        if (!(ends & linked).empty() && !ends.is_subset_of(linked)) {
          linked |= ends;
          grew = true;
        }
      }
  }
  if (linked != odd) throw std::logic_error("brickwork chains do not link all odd vertices");
  for (const auto& cls : classes) {
    for (std::size_t x = 0; x < cls.chains.size(); ++x) {
      if (!is_valid_holeset(g, cls.chains[x])) throw std::logic_error("brickwork chain is not a valid hole set");
      VertexSet nb;
      for (Vertex v : cls.chains[x]) nb |= g.neighbors(v);
      for (std::size_t y = x + 1; y < cls.chains.size(); ++y)
        if (!((nb | cls.chains[x]) & cls.chains[y]).empty())
          throw std::logic_error("brickwork chains of one class touch");
    }
  }
  return classes;
}

TestDistribution strategy_brickwork(const OpenGraph& g) {
  const auto shape = graphs::brickwork_shape(g);
  if (!shape) throw std::invalid_argument("strategy_brickwork: not a brickwork graph");
  const auto colors = g.two_coloring();
  std::vector<TestComponent> comps(2);
  for (auto& c : comps) c.weight = 1.0 / 7.0;
  for (Vertex v : g.even_vertices()) comps[static_cast<std::size_t>((*colors)[v])].blocks.push_back(VertexSet{v});
  for (const auto& cls : brickwork_chain_classes(shape->first, shape->second)) {
    comps.push_back(TestComponent{1.0 / 7.0, cls.chains, TestComponent::Mode::AllSubsets});
  }
  return TestDistribution(g.num_vertices(), std::move(comps));
}

Json distribution_to_json(const OpenGraph& g, const TestDistribution& d) {
  Json arr = Json::array();
  for (const auto& [traps, w] : d.enumerate()) {
    arr.push_back({{"holes", vertex_set_to_json(g, g.vertices() - traps)}, {"weight", w}});
  }
  return arr;
}

TestDistribution distribution_from_json(const OpenGraph& g, const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("test distribution must be a nonempty array");
  std::vector<TestComponent> comps;
  double total = 0.0;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("holes") || !e.contains("weight") || !e["weight"].is_number()) {
      throw ParseError("distribution entries need 'holes' and a numeric 'weight'");
    }
    TestComponent c;
    c.mode = TestComponent::Mode::Fixed;
    c.weight = e["weight"].get<double>();
    if (c.weight < 0) throw ParseError("negative test weight");
    const VertexSet holes = vertex_set_from_json(g, e["holes"]);
    if (!is_valid_holeset(g, holes)) throw ParseError("invalid hole set in distribution");
    if (!holes.empty()) c.blocks.push_back(holes);
    total += c.weight;
    comps.push_back(std::move(c));
  }
  if (std::abs(total - 1.0) > 1e-6) throw ParseError("test weights must sum to 1");
  return TestDistribution(g.num_vertices(), std::move(comps));
}

}  // namespace xyv
