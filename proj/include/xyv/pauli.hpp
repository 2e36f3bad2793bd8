#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "xyv/vertex_set.hpp"

namespace xyv {

enum class Letter : std::uint8_t { I, X, Y, Z };

char to_char(Letter l);

/// Phase-tracked Pauli operator i^phase * P_0 (x) P_1 (x) ... (x) P_{n-1}.
///
/// The letter on vertex v is read from (x[v], z[v]):
/// (0,0)=I, (1,0)=X, (1,1)=Y, (0,1)=Z. Note that Y is stored as a letter, not
/// as the product XZ, so the Hermitian Paulis are exactly those with an even
/// phase exponent.
class PauliOp {
 public:
  PauliOp() = default;
  explicit PauliOp(std::size_t n);
  PauliOp(std::size_t n, VertexSet x, VertexSet z, int phase = 0);

  static PauliOp identity(std::size_t n) { return PauliOp(n); }
  static PauliOp single(std::size_t n, Vertex v, Letter l);
  /// Z on every vertex of `support`.
  static PauliOp z_on(std::size_t n, VertexSet support);
  static PauliOp x_on(std::size_t n, VertexSet support);
  /// Parses strings like "XZI", "-YY", "+iZ", "-iXZ". Character i is vertex i.
  static PauliOp parse(std::string_view s);

  std::size_t num_vertices() const { return n_; }
  int phase() const { return phase_; }
  VertexSet x_bits() const { return x_; }
  VertexSet z_bits() const { return z_; }
  VertexSet support() const { return x_ | z_; }
  Letter letter(Vertex v) const;

  /// The same letters with phase exponent 0.
  PauliOp unsigned_part() const { return PauliOp(n_, x_, z_, 0); }
  PauliOp with_phase(int phase) const { return PauliOp(n_, x_, z_, phase); }
  bool is_identity() const { return x_.empty() && z_.empty(); }
  bool is_hermitian() const { return phase_ % 2 == 0; }
  /// Vertices carrying the letter Z (not Y).
  VertexSet z_letters() const { return z_ - x_; }
  bool has_z_letter() const { return !z_letters().empty(); }
  bool commutes_with(const PauliOp& other) const;
  std::complex<double> phase_factor() const;

  /// Letters in vertex order with a sign prefix when the phase is not 0.
  std::string to_string() const;

  bool operator==(const PauliOp&) const = default;

 private:
  std::size_t n_ = 0;
  std::uint8_t phase_ = 0;
  VertexSet x_;
  VertexSet z_;
};

/// a * b with the phase exponent tracked exactly. Throws std::invalid_argument
/// when the operands act on different vertex counts.
PauliOp pauli_mul(const PauliOp& a, const PauliOp& b);
inline PauliOp operator*(const PauliOp& a, const PauliOp& b) { return pauli_mul(a, b); }

/// Number of vertices of `region` on which p carries the letter Z.
std::size_t zwt(const PauliOp& p, VertexSet region);

/// Rank over GF(2) of the (x|z) rows of `ops`, ignoring phases.
std::size_t gf2_rank(const std::vector<PauliOp>& ops);

/// Dense 2^n x 2^n row-major matrix of p. Basis index bit v is vertex v.
std::vector<std::complex<double>> dense_matrix(const PauliOp& p);

}  // namespace xyv
