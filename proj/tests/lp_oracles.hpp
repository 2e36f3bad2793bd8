#pragma once

// Reference solvers for the test-distribution LP, used only by tests.

#include <Eigen/Dense>
#include <algorithm>
#include <vector>

#include "xyv/optimizer.hpp"

namespace oracle {

// Primal-dual path following on min c.x, Ax = b, x >= 0. Written against the
// max-min form directly: variables (p, eps, slack), rows M^T p - eps - slack
// = 0 and sum p = 1.
inline double ipm_value(const std::vector<std::vector<std::uint8_t>>& m) {
  const Eigen::Index nt = static_cast<Eigen::Index>(m.size());
  const Eigen::Index ne = static_cast<Eigen::Index>(m[0].size());
  const Eigen::Index nv = nt + 1 + ne, nr = ne + 1;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(nr, nv);
  for (Eigen::Index e = 0; e < ne; ++e) {
    for (Eigen::Index t = 0; t < nt; ++t) a(e, t) = m[t][e];
    a(e, nt) = -1.0;
    a(e, nt + 1 + e) = -1.0;
  }
  a.row(ne).head(nt).setOnes();
  Eigen::VectorXd b = Eigen::VectorXd::Zero(nr);
  b(ne) = 1.0;
  Eigen::VectorXd c = Eigen::VectorXd::Zero(nv);
  c(nt) = -1.0;

  Eigen::VectorXd x = Eigen::VectorXd::Ones(nv), z = Eigen::VectorXd::Ones(nv), y = Eigen::VectorXd::Zero(nr);
  for (int it = 0; it < 200; ++it) {
    const Eigen::VectorXd rp = b - a * x;
    const Eigen::VectorXd rd = c - a.transpose() * y - z;
    const double mu = x.dot(z) / static_cast<double>(nv);
    if (rp.norm() < 1e-11 && rd.norm() < 1e-11 && mu < 1e-12) break;
    const Eigen::VectorXd rc = Eigen::VectorXd::Constant(nv, 0.1 * mu) - x.cwiseProduct(z);
    const Eigen::VectorXd d = x.cwiseQuotient(z);
    const Eigen::MatrixXd normal = a * d.asDiagonal() * a.transpose();
    const Eigen::VectorXd rhs = rp - a * (rc - x.cwiseProduct(rd)).cwiseQuotient(z);
    const Eigen::VectorXd dy = normal.ldlt().solve(rhs);
    const Eigen::VectorXd dz = rd - a.transpose() * dy;
    const Eigen::VectorXd dx = (rc - x.cwiseProduct(dz)).cwiseQuotient(z);
    double step = 1.0;
    for (Eigen::Index i = 0; i < nv; ++i) {
      if (dx(i) < 0) step = std::min(step, -0.99 * x(i) / dx(i));
      if (dz(i) < 0) step = std::min(step, -0.99 * z(i) / dz(i));
    }
    x += step * dx;
    y += step * dy;
    z += step * dz;
  }
  return x(nt);
}

// Min coverage of p over the errors.
inline double coverage(const xyv::LpInstance& inst, const std::vector<double>& p) {
  double best = 1e300;
  for (std::size_t e = 0; e < inst.errors.size(); ++e) {
    double s = 0;
    for (std::size_t t = 0; t < inst.tests.size(); ++t) s += inst.matrix[t][e] * p[t];
    best = std::min(best, s);
  }
  return best;
}

// Brute force over the probability simplex on a grid of the given step.
inline double grid_value(const xyv::LpInstance& inst, int steps) {
  const std::size_t k = inst.tests.size();
  double best = 0;
  std::vector<double> p(k);
  if (k == 1) return coverage(inst, {1.0});
  if (k == 2) {
    for (int i = 0; i <= steps; ++i) {
      p = {double(i) / steps, double(steps - i) / steps};
      best = std::max(best, coverage(inst, p));
    }
    return best;
  }
  for (int i = 0; i <= steps; ++i)
    for (int j = 0; i + j <= steps; ++j) {
      p = {double(i) / steps, double(j) / steps, double(steps - i - j) / steps};
      best = std::max(best, coverage(inst, p));
    }
  return best;
}

}  // namespace oracle
