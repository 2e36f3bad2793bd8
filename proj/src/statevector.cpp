#include "xyv/statevector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace xyv {

namespace {
constexpr double kInvSqrt2 = std::numbers::sqrt2 / 2.0;
}

Statevector Statevector::plus(Angle8 theta, Vertex label) {
  Statevector s;
  s.add_plus(label, theta);
  return s;
}

Statevector Statevector::graph_state(const OpenGraph& g) {
  Statevector s;
  for (Vertex v = 0; v < g.num_vertices(); ++v) s.add_plus(v, Angle8(0));
  s.entangle_graph(g);
  return s;
}

bool Statevector::has(Vertex v) const { return std::find(labels_.begin(), labels_.end(), v) != labels_.end(); }

std::size_t Statevector::pos(Vertex v) const {
  auto it = std::find(labels_.begin(), labels_.end(), v);
  if (it == labels_.end()) throw std::invalid_argument("qubit " + std::to_string(v) + " not present");
  return static_cast<std::size_t>(it - labels_.begin());
}

double Statevector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void Statevector::add_qubit(Vertex label, Amp a0, Amp a1) {
  if (has(label)) throw std::invalid_argument("qubit " + std::to_string(label) + " already present");
  if (labels_.size() + 1 > cap_) throw std::length_error("statevector qubit cap exceeded");
  const std::size_t dim = amps_.size();
  amps_.resize(2 * dim);
  for (std::size_t i = 0; i < dim; ++i) {
    amps_[dim + i] = amps_[i] * a1;
    amps_[i] *= a0;
  }
  labels_.push_back(label);
}

void Statevector::add_plus(Vertex label, Angle8 theta) { add_qubit(label, kInvSqrt2, kInvSqrt2 * theta.phase()); }

void Statevector::relabel(Vertex from, Vertex to) {
  if (from == to) return;
  if (has(to)) throw std::invalid_argument("qubit " + std::to_string(to) + " already present");
  labels_[pos(from)] = to;
}

void Statevector::cz(Vertex a, Vertex b) {
  const std::size_t ma = std::size_t{1} << pos(a), mb = std::size_t{1} << pos(b);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & ma) && (i & mb)) amps_[i] = -amps_[i];
}

void Statevector::cnot(Vertex control, Vertex target) {
  const std::size_t mc = std::size_t{1} << pos(control), mt = std::size_t{1} << pos(target);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & mc) && !(i & mt)) std::swap(amps_[i], amps_[i | mt]);
}

void Statevector::x(Vertex v) {
  const std::size_t m = std::size_t{1} << pos(v);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
}

void Statevector::z(Vertex v) {
  const std::size_t m = std::size_t{1} << pos(v);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & m) amps_[i] = -amps_[i];
}

void Statevector::zrot(Vertex v, Angle8 theta) {
  const std::size_t m = std::size_t{1} << pos(v);
  const Amp ph = theta.phase();
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (i & m) amps_[i] *= ph;
}

void Statevector::apply_1q(Vertex v, const std::array<Amp, 4>& u) {
  const std::size_t m = std::size_t{1} << pos(v);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & m) continue;
    const Amp a0 = amps_[i], a1 = amps_[i | m];
    amps_[i] = u[0] * a0 + u[1] * a1;
    amps_[i | m] = u[2] * a0 + u[3] * a1;
  }
}

void Statevector::entangle_graph(const OpenGraph& g) {
  for (auto [a, b] : g.edges()) cz(a, b);
}

void Statevector::apply_pauli(const PauliOp& p) {
  for (Vertex v : p.support()) {
    switch (p.letter(v)) {
      case Letter::X: x(v); break;
      case Letter::Z: z(v); break;
      case Letter::Y: z(v); x(v); break;  // XZ = -iY
      case Letter::I: break;
    }
  }
}

double Statevector::prob_xy(Vertex v, Angle8 delta) const {
  const std::size_t m = std::size_t{1} << pos(v);
  const Amp conj_phase = std::conj(delta.phase());
  double p0 = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & m) continue;
    p0 += std::norm(amps_[i] + conj_phase * amps_[i | m]) / 2.0;
  }
  return p0;
}

int Statevector::collapse(std::size_t q, const std::array<Amp, 2>& bra0, const std::array<Amp, 2>& bra1,
                          Chooser& chooser) {
  const std::size_t m = std::size_t{1} << q;
  const std::size_t half = amps_.size() / 2;
  std::vector<Amp> out0(half), out1(half);
  double p0 = 0.0;
  for (std::size_t r = 0; r < half; ++r) {
    // Insert a zero bit at position q.
    const std::size_t lo = r & (m - 1);
    const std::size_t i = ((r - lo) << 1) | lo;
    const Amp a0 = amps_[i], a1 = amps_[i | m];
    out0[r] = bra0[0] * a0 + bra0[1] * a1;
    out1[r] = bra1[0] * a0 + bra1[1] * a1;
    p0 += std::norm(out0[r]);
  }
  const double total = p0 + [&] {
    double s = 0.0;
    for (const auto& a : out1) s += std::norm(a);
    return s;
  }();
  p0 /= total;
  const int outcome = chooser.born(p0);
  auto& kept = outcome ? out1 : out0;
  const double scale = 1.0 / std::sqrt(outcome ? 1.0 - p0 : p0) / std::sqrt(total);
  for (auto& a : kept) a *= scale;
  amps_ = std::move(kept);
  labels_.erase(labels_.begin() + static_cast<std::ptrdiff_t>(q));
  return outcome;
}

int Statevector::measure_xy(Vertex v, Angle8 delta, Chooser& chooser) {
  const Amp c = std::conj(delta.phase()) * kInvSqrt2;
  return collapse(pos(v), {kInvSqrt2, c}, {kInvSqrt2, -c}, chooser);
}

int Statevector::measure_z(Vertex v, Chooser& chooser) { return collapse(pos(v), {1.0, 0.0}, {0.0, 1.0}, chooser); }

Amp Statevector::expectation(const PauliOp& p) const {
  std::size_t xm = 0, zm = 0;
  for (Vertex v : p.x_bits()) xm |= std::size_t{1} << pos(v);
  for (Vertex v : p.z_bits()) zm |= std::size_t{1} << pos(v);
  Amp sum = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    // X^x Z^z |i> = (-1)^{|i & z|} |i ^ x>
    const double sign = (std::popcount(i & zm) & 1) ? -1.0 : 1.0;
    sum += std::conj(amps_[i ^ xm]) * sign * amps_[i];
  }
  // Letter product = i^{#Y} X^x Z^z.
  const int ny = static_cast<int>((p.x_bits() & p.z_bits()).size());
  return sum * PauliOp(0, {}, {}, p.phase() + ny).phase_factor();
}

double Statevector::fidelity(const Statevector& other) const {
  if (labels_ != other.labels_) throw std::invalid_argument("fidelity: qubit labels differ");
  Amp ip = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) ip += std::conj(other.amps_[i]) * amps_[i];
  return std::norm(ip);
}

}  // namespace xyv
