#include "xyv/crsp.hpp"

#include <stdexcept>

namespace xyv {

Angle8 crsp_theta_prime(const std::vector<Angle8>& angles, const std::vector<int>& t) {
  if (angles.size() < 2) throw std::invalid_argument("CRSP needs at least two clients");
  if (t.size() + 1 != angles.size()) throw std::logic_error("CRSP: missing measurement report");
  Angle8 acc = angles.back();
  for (std::size_t j = 0; j < t.size(); ++j) acc += angles[j].signed_by(t[j]);
  return acc;
}

Angle8 CrspSession::theta_prime() const { return crsp_theta_prime(client_angles, t); }

Angle8 correction_angle(Angle8 theta, Angle8 theta_prime, int b) { return theta.signed_by(b) - theta_prime; }

std::pair<int, Angle8> orchestrator_correction(Angle8 theta, const CrspSession& session, Chooser& chooser) {
  if (session.client_angles.size() != session.n || session.t.size() + 1 != session.n) {
    throw std::invalid_argument("orchestrator_correction: missing client report");
  }
  const int b = chooser.bit();
  return {b, correction_angle(theta, session.theta_prime(), b)};
}

std::pair<int, Statevector> single_merge_step(Statevector control, Angle8 theta_hat, Chooser& chooser) {
  if (control.num_qubits() != 1) throw std::invalid_argument("single_merge_step: control must be one qubit");
  const Vertex c = control.labels()[0];
  const Vertex target = c + 1;
  control.add_plus(target, theta_hat);
  control.cnot(c, target);
  const int t = control.measure_z(target, chooser);
  return {t, std::move(control)};
}

CrspRun crsp_honest_run(std::size_t n, Angle8 theta, Chooser& chooser) {
  if (n < 2) throw std::invalid_argument("CRSP needs at least two clients");
  CrspRun run{Statevector(), CrspSession{}, Transcript{}};
  CrspSession& s = run.session;
  s.n = n;
  s.target = theta;
  s.client_angles.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    s.client_angles[j] = chooser.angle();
    run.state.add_plus(j, s.client_angles[j]);
    run.transcript.add("client" + std::to_string(j), "send", "qubit", {{"angle", s.client_angles[j].k()}});
    run.transcript.add("client" + std::to_string(j), "send", "bits", {{"to", "orchestrator"}, {"angle", s.client_angles[j].k()}});
  }
  const Vertex keep = n - 1;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    run.state.cnot(keep, j);
    s.t.push_back(run.state.measure_z(j, chooser));
  }
  run.transcript.add("server", "send", "bits", {{"to", "orchestrator"}, {"t", s.t}});
  auto [b, corr] = orchestrator_correction(theta, s, chooser);
  s.b = b;
  s.correction = corr;
  run.transcript.add("orchestrator", "send", "correction", {{"b", b}, {"angle", corr.k()}});
  run.state.zrot(keep, corr);
  if (b) run.state.x(keep);
  return run;
}

CrspSecurityResult crsp_security_experiment(std::size_t n, std::size_t h, Angle8 theta,
                                            const std::vector<Angle8>& adversary_angles, const TStrategy& strategy) {
  if (n < 2) throw std::invalid_argument("CRSP needs at least two clients");
  if (h >= n) throw std::invalid_argument("honest client index out of range");
  if (adversary_angles.size() != n) throw std::invalid_argument("one adversary angle per client required");

  auto reports = [&](Angle8 received, Chooser& c) {
    auto t = strategy(received, c);
    if (t.size() + 1 != n) throw std::invalid_argument("t strategy returned the wrong number of bits");
    return t;
  };
  auto theta_prime_with = [&](Angle8 honest_angle, const std::vector<int>& t) {
    auto angles = adversary_angles;
    angles[h] = honest_angle;
    return crsp_theta_prime(angles, t);
  };
  auto t_h = [&](const std::vector<int>& t) { return h + 1 == n ? 0 : t[h]; };

  CrspSecurityResult res;
  res.real = exact_distribution<CrspView>([&](Chooser& c) {
    const Angle8 theta_h = c.angle();
    const int b = c.bit();
    const auto t = reports(theta_h, c);
    const Angle8 corr = correction_angle(theta, theta_prime_with(theta_h, t), b);
    return CrspView{theta.k(), theta_h.k(), t_h(t), b, corr.k()};
  });
  // Simulator: turns the resource's |+_theta> into the honest client's qubit
  // with its own theta_h and b_h, and answers with correction -theta'.
  res.ideal = exact_distribution<CrspView>([&](Chooser& c) {
    const Angle8 theta_h = c.angle();
    const int b_h = c.bit();
    const Angle8 received = theta.signed_by(b_h) + theta_h;
    const auto t = reports(received, c);
    const Angle8 corr = -theta_prime_with(theta_h, t);
    return CrspView{theta.k(), received.k(), t_h(t), t_h(t) ^ b_h, corr.k()};
  });
  res.tv = total_variation(res.real, res.ideal);
  return res;
}

TStrategy deterministic_t_strategy(std::size_t n, std::uint64_t index) {
  if (8 * (n - 1) > 64) throw std::invalid_argument("deterministic strategy table too large");
  return [n, index](Angle8 received, Chooser&) {
    std::vector<int> t(n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j) t[j] = static_cast<int>((index >> (8 * j + received.k())) & 1u);
    return t;
  };
}

TStrategy random_t_strategy(std::size_t n) {
  return [n](Angle8, Chooser& c) {
    std::vector<int> t(n - 1);
    for (auto& b : t) b = c.bit();
    return t;
  };
}

}  // namespace xyv
