#include "xyv/pauli.hpp"

#include <array>
#include <bit>
#include <stdexcept>

namespace xyv {

char to_char(Letter l) {
  constexpr std::array<char, 4> chars{'I', 'X', 'Y', 'Z'};
  return chars[static_cast<std::size_t>(l)];
}

PauliOp::PauliOp(std::size_t n) : n_(n) {
  if (n > kMaxVertices) throw std::invalid_argument("PauliOp: more than 64 vertices");
}

PauliOp::PauliOp(std::size_t n, VertexSet x, VertexSet z, int phase)
    : n_(n), phase_(static_cast<std::uint8_t>(((phase % 4) + 4) % 4)), x_(x), z_(z) {
  if (n > kMaxVertices) throw std::invalid_argument("PauliOp: more than 64 vertices");
  if (!(x | z).is_subset_of(VertexSet::first(n))) {
    throw std::invalid_argument("PauliOp: support outside vertex range");
  }
}

PauliOp PauliOp::single(std::size_t n, Vertex v, Letter l) {
  if (v >= n) throw std::out_of_range("PauliOp::single: vertex out of range");
  VertexSet x, z;
  if (l == Letter::X || l == Letter::Y) x.insert(v);
  if (l == Letter::Z || l == Letter::Y) z.insert(v);
  return PauliOp(n, x, z);
}

PauliOp PauliOp::z_on(std::size_t n, VertexSet support) { return PauliOp(n, {}, support); }
PauliOp PauliOp::x_on(std::size_t n, VertexSet support) { return PauliOp(n, support, {}); }

PauliOp PauliOp::parse(std::string_view s) {
  int phase = 0;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    if (s.front() == '-') phase += 2;
    s.remove_prefix(1);
  }
  if (!s.empty() && s.front() == 'i') {
    phase += 1;
    s.remove_prefix(1);
  }
  VertexSet x, z;
  for (std::size_t v = 0; v < s.size(); ++v) {
    switch (s[v]) {
      case 'I': case '_': break;
      case 'X': x.insert(v); break;
      case 'Y': x.insert(v); z.insert(v); break;
      case 'Z': z.insert(v); break;
      default: throw std::invalid_argument("PauliOp::parse: bad letter");
    }
  }
  return PauliOp(s.size(), x, z, phase);
}

Letter PauliOp::letter(Vertex v) const {
  const bool x = x_.contains(v);
  const bool z = z_.contains(v);
  if (x) return z ? Letter::Y : Letter::X;
  return z ? Letter::Z : Letter::I;
}

bool PauliOp::commutes_with(const PauliOp& o) const {
  return !((x_ & o.z_) ^ (z_ & o.x_)).parity();
}

std::complex<double> PauliOp::phase_factor() const {
  constexpr std::array<std::complex<double>, 4> f{{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}};
  return f[phase_];
}

std::string PauliOp::to_string() const {
  std::string out;
  switch (phase_) {
    case 1: out = "+i"; break;
    case 2: out = "-"; break;
    case 3: out = "-i"; break;
    default: break;
  }
  for (Vertex v = 0; v < n_; ++v) out.push_back(to_char(letter(v)));
  return out;
}

PauliOp pauli_mul(const PauliOp& a, const PauliOp& b) {
  if (a.num_vertices() != b.num_vertices()) {
    throw std::invalid_argument("pauli_mul: operands act on different vertex sets");
  }
  const VertexSet ax = a.x_bits() - a.z_bits(), ay = a.x_bits() & a.z_bits(), az = a.z_bits() - a.x_bits();
  const VertexSet bx = b.x_bits() - b.z_bits(), by = b.x_bits() & b.z_bits(), bz = b.z_bits() - b.x_bits();
  // XY = iZ, YZ = iX, ZX = iY; the reversed products pick up -i.
  const std::size_t plus = ((ax & by) | (ay & bz) | (az & bx)).size();
  const std::size_t minus = ((ay & bx) | (az & by) | (ax & bz)).size();
  const int phase = a.phase() + b.phase() + static_cast<int>(plus) - static_cast<int>(minus);
  return PauliOp(a.num_vertices(), a.x_bits() ^ b.x_bits(), a.z_bits() ^ b.z_bits(), phase);
}

std::size_t zwt(const PauliOp& p, VertexSet region) { return (p.z_letters() & region).size(); }

std::size_t gf2_rank(const std::vector<PauliOp>& ops) {
  // Rows packed as 128-bit (x,z) words.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> rows;
  rows.reserve(ops.size());
  for (const auto& p : ops) rows.emplace_back(p.x_bits().bits(), p.z_bits().bits());
  std::size_t rank = 0;
  for (int col = 0; col < 128 && rank < rows.size(); ++col) {
    auto bit = [col](const auto& r) {
      return col < 64 ? (r.first >> col) & 1u : (r.second >> (col - 64)) & 1u;
    };
    std::size_t pivot = rank;
    while (pivot < rows.size() && !bit(rows[pivot])) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && bit(rows[r])) {
        rows[r].first ^= rows[rank].first;
        rows[r].second ^= rows[rank].second;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::complex<double>> dense_matrix(const PauliOp& p) {
  const std::size_t n = p.num_vertices();
  if (n > 12) throw std::invalid_argument("dense_matrix: too many qubits");
  const std::size_t dim = std::size_t{1} << n;
  std::vector<std::complex<double>> m(dim * dim);
  const std::uint64_t xmask = p.x_bits().bits();
  const std::uint64_t zmask = p.z_bits().bits();
  const std::uint64_t ymask = xmask & zmask;
  const int ny = std::popcount(ymask);
  // Y = i XZ per qubit, so the letter product equals i^{#Y} X^x Z^z.
  const std::complex<double> base = p.phase_factor() * PauliOp(0, {}, {}, ny).phase_factor();
  for (std::size_t col = 0; col < dim; ++col) {
    const std::size_t row = col ^ xmask;
    const double sign = (std::popcount(col & zmask) & 1) ? -1.0 : 1.0;
    m[row * dim + col] = base * sign;
  }
  return m;
}

}  // namespace xyv
