#pragma once

#include <array>
#include <complex>
#include <vector>

#include "xyv/angle.hpp"
#include "xyv/branching.hpp"
#include "xyv/graph.hpp"
#include "xyv/pauli.hpp"

namespace xyv {

using Amp = std::complex<double>;

/// Exact pure state over a set of labelled qubits. Qubit i of the amplitude
/// index (bit i) carries vertex label labels()[i]. Measured qubits are
/// removed from the state immediately.
class Statevector {
 public:
  static constexpr std::size_t kDefaultCap = 20;

  /// Zero qubits, amplitude 1.
  explicit Statevector(std::size_t cap = kDefaultCap) : cap_(cap), amps_{1.0} {}

  /// Single qubit |+_theta> carrying `label`.
  static Statevector plus(Angle8 theta, Vertex label = 0);
  /// |+>^{n} on vertices 0..n-1 followed by CZ on every edge.
  static Statevector graph_state(const OpenGraph& g);

  std::size_t num_qubits() const { return labels_.size(); }
  const std::vector<Vertex>& labels() const { return labels_; }
  const std::vector<Amp>& amplitudes() const { return amps_; }
  bool has(Vertex v) const;
  double norm() const;

  /// Tensors a fresh |+_theta> onto the state. Throws if `label` exists or
  /// the qubit cap would be exceeded.
  void add_plus(Vertex label, Angle8 theta);
  void add_qubit(Vertex label, Amp a0, Amp a1);

  /// Renames qubit `from` to `to`; `to` must not be present.
  void relabel(Vertex from, Vertex to);

  void cz(Vertex a, Vertex b);
  void cnot(Vertex control, Vertex target);
  void x(Vertex v);
  void z(Vertex v);
  /// diag(1, e^{i theta}).
  void zrot(Vertex v, Angle8 theta);
  void apply_1q(Vertex v, const std::array<Amp, 4>& m);
  /// CZ for every edge of g; every vertex of g must be present.
  void entangle_graph(const OpenGraph& g);
  /// Applies p on the qubits labelled by its support. The phase of p is a
  /// global phase and is dropped.
  void apply_pauli(const PauliOp& p);

  /// Probability of outcome 0 for a measurement in the {|+_delta>, |-_delta>} basis.
  double prob_xy(Vertex v, Angle8 delta) const;
  int measure_xy(Vertex v, Angle8 delta, Chooser& chooser);
  int measure_z(Vertex v, Chooser& chooser);

  /// <psi|p|psi>, including the phase of p. Every vertex in the support of p
  /// must be present.
  Amp expectation(const PauliOp& p) const;

  /// |<other|this>|^2; the labels must match in the same order.
  double fidelity(const Statevector& other) const;

 private:
  std::size_t pos(Vertex v) const;
  int collapse(std::size_t q, const std::array<Amp, 2>& bra0, const std::array<Amp, 2>& bra1, Chooser& chooser);

  std::size_t cap_;
  std::vector<Vertex> labels_;
  std::vector<Amp> amps_;
};

}  // namespace xyv
