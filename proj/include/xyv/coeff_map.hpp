#pragma once

#include <complex>
#include <map>
#include <utility>
#include <vector>

#include "xyv/graph.hpp"
#include "xyv/pauli.hpp"

namespace xyv {

/// Sparse operator sum_P alpha_P P over phase-free Pauli strings P.
class PauliCoeffMap {
 public:
  explicit PauliCoeffMap(std::size_t n) : n_(n) {}

  std::size_t num_vertices() const { return n_; }
  /// Adds c * p. The phase of p is folded into the coefficient.
  void add(const PauliOp& p, std::complex<double> c);
  std::complex<double> coeff(const PauliOp& p) const;
  std::size_t size() const { return terms_.size(); }
  std::complex<double> trace() const;
  /// The map with every term multiplied by (-1)^{zwt_region(P)}.
  PauliCoeffMap reflected(VertexSet region) const;
  /// q * this * q^dagger.
  PauliCoeffMap conjugated(const PauliOp& q) const;
  /// Dense 2^n x 2^n matrix, row-major, basis bit v = vertex v.
  std::vector<std::complex<double>> to_dense() const;

  template <class F>
  void for_each(F&& f) const {
    for (const auto& [key, c] : terms_) f(PauliOp(n_, VertexSet(key.first), VertexSet(key.second)), c);
  }

 private:
  std::size_t n_;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::complex<double>> terms_;
};

/// F_A: multiplies the coefficient of P by (-1)^{zwt_A(P)}.
PauliCoeffMap apply_reflection(const PauliCoeffMap& rho, VertexSet region);

/// |G><G| = 2^{-n} sum over all stabilizer-group elements. n <= 12.
PauliCoeffMap graph_state_density(const OpenGraph& g);

}  // namespace xyv
