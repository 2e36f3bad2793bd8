#include "xyv/coeff_map.hpp"

#include <cmath>
#include <stdexcept>

#include "xyv/stabilizer.hpp"

namespace xyv {

void PauliCoeffMap::add(const PauliOp& p, std::complex<double> c) {
  if (p.num_vertices() != n_) throw std::invalid_argument("PauliCoeffMap: vertex count mismatch");
  auto key = std::pair{p.x_bits().bits(), p.z_bits().bits()};
  auto& slot = terms_[key];
  slot += c * p.phase_factor();
  if (std::abs(slot) == 0.0) terms_.erase(key);
}

std::complex<double> PauliCoeffMap::coeff(const PauliOp& p) const {
  auto it = terms_.find({p.x_bits().bits(), p.z_bits().bits()});
  return it == terms_.end() ? 0.0 : it->second / p.phase_factor();
}

std::complex<double> PauliCoeffMap::trace() const {
  return std::ldexp(1.0, static_cast<int>(n_)) * coeff(PauliOp::identity(n_));
}

PauliCoeffMap PauliCoeffMap::reflected(VertexSet region) const {
  PauliCoeffMap out(n_);
  for_each([&](const PauliOp& p, std::complex<double> c) { out.add(p, zwt(p, region) % 2 ? -c : c); });
  return out;
}

PauliCoeffMap PauliCoeffMap::conjugated(const PauliOp& q) const {
  PauliOp qh = q.unsigned_part();
  PauliCoeffMap out(n_);
  // q P q^dagger = P when they commute and -P otherwise; the phase of q cancels.
  for_each([&](const PauliOp& p, std::complex<double> c) { out.add(p, qh.commutes_with(p) ? c : -c); });
  return out;
}

std::vector<std::complex<double>> PauliCoeffMap::to_dense() const {
  const std::size_t dim = std::size_t{1} << n_;
  std::vector<std::complex<double>> m(dim * dim);
  for_each([&](const PauliOp& p, std::complex<double> c) {
    auto pm = dense_matrix(p);
    for (std::size_t i = 0; i < m.size(); ++i) m[i] += c * pm[i];
  });
  return m;
}

PauliCoeffMap apply_reflection(const PauliCoeffMap& rho, VertexSet region) { return rho.reflected(region); }

PauliCoeffMap graph_state_density(const OpenGraph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 12) throw std::invalid_argument("graph_state_density: more than 12 vertices");
  PauliCoeffMap rho(n);
  const double w = std::ldexp(1.0, -static_cast<int>(n));
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    rho.add(subset_stabilizer(g, VertexSet(mask)), w);
  }
  return rho;
}

}  // namespace xyv
