#pragma once

// Independent reference implementations used only by tests.

#include <complex>
#include <vector>

#include "xyv/graph.hpp"
#include "xyv/pauli.hpp"

namespace oracle {

using C = std::complex<double>;
using Mat = std::vector<C>;

inline Mat single(char letter) {
  switch (letter) {
    case 'X': return {0, 1, 1, 0};
    case 'Y': return {0, C(0, -1), C(0, 1), 0};
    case 'Z': return {1, 0, 0, -1};
    default: return {1, 0, 0, 1};
  }
}

/// Kronecker product where `a` acts on the higher-index qubits.
inline Mat kron(const Mat& hi, std::size_t dh, const Mat& lo, std::size_t dl) {
  Mat out(dh * dl * dh * dl);
  const std::size_t d = dh * dl;
  for (std::size_t r1 = 0; r1 < dh; ++r1)
    for (std::size_t c1 = 0; c1 < dh; ++c1)
      for (std::size_t r2 = 0; r2 < dl; ++r2)
        for (std::size_t c2 = 0; c2 < dl; ++c2)
          out[(r1 * dl + r2) * d + (c1 * dl + c2)] = hi[r1 * dh + c1] * lo[r2 * dl + c2];
  return out;
}

/// Matrix of a letter string; character i acts on qubit i (bit i of the index).
inline Mat letters(const std::string& s, C phase = 1.0) {
  Mat m{1};
  std::size_t dim = 1;
  for (char ch : s) {
    m = kron(single(ch), 2, m, dim);
    dim *= 2;
  }
  for (auto& x : m) x *= phase;
  return m;
}

inline Mat matmul(const Mat& a, const Mat& b, std::size_t d) {
  Mat out(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t j = 0; j < d; ++j) out[i * d + j] += a[i * d + k] * b[k * d + j];
  return out;
}

inline double max_diff(const Mat& a, const Mat& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

/// Graph state vector built gate by gate from its definition.
inline std::vector<C> graph_state(const xyv::OpenGraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<C> psi(std::size_t{1} << n, std::pow(2.0, -0.5 * static_cast<double>(n)));
  for (std::size_t i = 0; i < psi.size(); ++i)
    for (auto [a, b] : g.edges())
      if ((i >> a & 1) && (i >> b & 1)) psi[i] = -psi[i];
  return psi;
}

inline Mat outer(const std::vector<C>& psi) {
  const std::size_t d = psi.size();
  Mat m(d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m[i * d + j] = psi[i] * std::conj(psi[j]);
  return m;
}

}  // namespace oracle
