#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "xyv/branching.hpp"
#include "xyv/graph.hpp"
#include "xyv/graph_io.hpp"
#include "xyv/mbqc.hpp"
#include "xyv/pauli.hpp"

namespace xyv {

/// A pure-Z deviation.
struct ErrorOp {
  VertexSet support;

  PauliOp as_pauli(std::size_t n) const { return PauliOp::z_on(n, support); }
  bool operator==(const ErrorOp&) const = default;
  auto operator<=>(const ErrorOp&) const = default;
};

enum class TrapBasis { X, Y, Hole };

/// One dummyless test round: measure the traps in the basis of the test
/// stabilizer's letter there and check the parity of their outcomes.
struct TrappifiedTest {
  VertexSet traps;
  VertexSet holes;
  std::vector<TrapBasis> basis;
  /// Product of S_v over the traps.
  PauliOp stabilizer;
  /// Parity of the trap outcomes on an honest run.
  int expected_parity = 0;

  /// 1 when the test fails on decrypted outcomes s.
  int tau(const std::vector<int>& s) const;
};

/// Every hole has an even number of trap neighbours.
bool is_valid_holeset(const OpenGraph& g, VertexSet holes);

/// Throws std::invalid_argument if V \ traps is not a valid hole set.
TrappifiedTest make_test(const OpenGraph& g, VertexSet traps);

/// Expected trap parity found by evaluating the trap-letter product on the
/// simulated graph state. Needs |V| <= 16.
int simulated_expected_parity(const OpenGraph& g, VertexSet traps);

/// |error ∩ traps| is odd.
bool detects(const TrappifiedTest& t, const ErrorOp& e);
inline bool detects(VertexSet traps, const ErrorOp& e) { return (traps & e.support).parity(); }

/// Test round as a pattern on `comp`'s graph and measurement order. Trap
/// angles are 0 for X and pi/2 for Y; holes get a uniformly random angle.
MeasurementPattern test_pattern(const MeasurementPattern& comp, const TrappifiedTest& t, Chooser& chooser);

/// Holes are the union of a random subset of `blocks` (every subset equally
/// likely) or, in Fixed mode, of all blocks. Blocks are disjoint.
struct TestComponent {
  enum class Mode { AllSubsets, Fixed };
  double weight = 0.0;
  std::vector<VertexSet> blocks;
  Mode mode = Mode::AllSubsets;
};

class TestDistribution {
 public:
  TestDistribution() = default;
  TestDistribution(std::size_t n, std::vector<TestComponent> components);

  std::size_t num_vertices() const { return n_; }
  const std::vector<TestComponent>& components() const { return components_; }
  double total_weight() const;

  /// Samples a trap set.
  VertexSet sample_traps(Chooser& chooser) const;
  /// Every trap set with its probability, merged. Throws BudgetExceeded for
  /// components with more than 22 blocks.
  std::vector<std::pair<VertexSet, double>> enumerate() const;
  /// Checks every reachable hole set against g. Uses the block structure, so
  /// it is cheap even when enumerate() is not.
  bool all_valid(const OpenGraph& g) const;

 private:
  std::size_t n_ = 0;
  std::vector<TestComponent> components_;
};

struct DetectionReport {
  std::vector<double> rates;
  double min = 1.0;
  std::size_t argmin = 0;
};

struct DetectionMode {
  bool exhaustive = true;
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  static DetectionMode exact() { return {}; }
  static DetectionMode monte_carlo(std::size_t samples, std::uint64_t seed) { return {false, samples, seed}; }
};

/// Probability that a test drawn from d detects each error. Monte Carlo mode
/// seeds error i with derive_seed(seed, i), so reports are reproducible.
DetectionReport detection_rate(const TestDistribution& d, const std::vector<ErrorOp>& errors,
                               DetectionMode mode = DetectionMode::exact());
/// 1 - detection rate, per error.
std::vector<double> insensitivity_rate(const TestDistribution& d, const std::vector<ErrorOp>& errors,
                                       DetectionMode mode = DetectionMode::exact());

/// Pick a colour class uniformly, keep its even-degree vertices, make a
/// uniformly random subset of them holes. Computes a colouring when none is
/// given; throws std::invalid_argument for an improper one.
TestDistribution strategy_even(const OpenGraph& g, std::optional<std::vector<int>> coloring = std::nullopt);

/// The full test plus one test per chain of odd_chain_tree (holes = chain),
/// weighted to maximise the minimum detection over odd-only errors other
/// than E*. Needs 2 <= |V_odd| <= 16.
TestDistribution strategy_odd_chains(const OpenGraph& g);

/// Mixture of strategy_even and strategy_odd_chains weighted 2c : k, where c
/// is the colour count and k the chain count.
TestDistribution strategy_general(const OpenGraph& g);

/// Chains of one brickwork chain class.
struct ChainClass {
  std::string name;
  std::vector<VertexSet> chains;
};
/// The five chain classes: vertical odd-odd edges, then horizontal chains
/// split by (row parity, chain index parity).
std::vector<ChainClass> brickwork_chain_classes(std::size_t rows, std::size_t cols);

/// 1/7 for each colour class of the even strategy and 1/7 for each chain
/// class. Throws std::invalid_argument if g is not a brickwork graph.
TestDistribution strategy_brickwork(const OpenGraph& g);

/// Nonempty Z supports, in increasing mask order, excluding E*.
std::vector<ErrorOp> all_errors(const OpenGraph& g);
/// Errors with support inside `region` (nonempty, excluding E*).
std::vector<ErrorOp> errors_within(const OpenGraph& g, VertexSet region);
ErrorOp harmless_error(const OpenGraph& g);

/// [{holes: [labels], weight}] with one entry per reachable trap set.
Json distribution_to_json(const OpenGraph& g, const TestDistribution& d);
TestDistribution distribution_from_json(const OpenGraph& g, const Json& j);

}  // namespace xyv
