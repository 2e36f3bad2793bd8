#include "xyv/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "xyv/error.hpp"

namespace xyv {

void ProtocolParams::validate() const {
  if (d == 0 || d > N) throw std::invalid_argument("need 1 <= d <= N");
  if (d % 2 == 0) throw std::invalid_argument("d must be odd");
  if (!(c > 0.0 && c < 0.5)) throw std::invalid_argument("c must lie in (0, 1/2)");
}

std::size_t max_failures(double c, std::size_t s, double epsilon) {
  if (!(c > 0.0 && c < 0.5)) throw std::invalid_argument("max_failures: c must lie in (0, 1/2)");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw std::invalid_argument("max_failures: epsilon must lie in (0, 1]");
  const double bound = (2 * c - 1) / (2 * c - 2) * static_cast<double>(s) * (1 - epsilon);
  if (bound <= 0.0) return 0;
  const double below = std::ceil(bound) - 1.0;
  return static_cast<std::size_t>(std::max(0.0, below));
}

std::vector<int> majority_vote(const std::vector<std::vector<int>>& outputs) {
  if (outputs.empty()) return {};
  std::vector<int> ones(outputs[0].size(), 0);
  for (const auto& o : outputs)
    for (std::size_t i = 0; i < o.size(); ++i) ones[i] += o[i];
  std::vector<int> out(ones.size());
  for (std::size_t i = 0; i < ones.size(); ++i) out[i] = 2 * ones[i] > static_cast<int>(outputs.size()) ? 1 : 0;
  return out;
}

RunOutcome run_trappified_protocol(const ProtocolParams& params, const MeasurementPattern& pattern,
                                   const TestDistribution& scheme, ServerStrategy& server,
                                   std::optional<NoiseModel> noise, QubitSource* source) {
  params.validate();
  if (scheme.num_vertices() != pattern.num_vertices()) {
    throw std::invalid_argument("scheme and pattern do not share a graph");
  }
  Rng schedule_rng(derive_seed(params.seed, ~std::uint64_t{0}));
  std::vector<std::size_t> idx(params.N);
  std::iota(idx.begin(), idx.end(), 0);
  std::shuffle(idx.begin(), idx.end(), schedule_rng.engine());
  std::vector<bool> computation(params.N, false);
  for (std::size_t i = 0; i < params.d; ++i) computation[idx[i]] = true;

  std::optional<NoisyServer> noisy;
  if (noise) noisy.emplace(server, pattern.num_vertices(), noise->q);
  ServerStrategy& srv = noisy ? static_cast<ServerStrategy&>(*noisy) : server;

  std::map<VertexSet, TrappifiedTest> tests;
  RunOutcome out;
  std::vector<std::vector<int>> results;
  for (std::size_t i = 0; i < params.N; ++i) {
    Rng rng(derive_seed(params.seed, i));
    SampledChooser chooser(rng);
    RoundRecord rec;
    rec.index = i;
    rec.test = !computation[i];
    UbqcResult res;
    const TrappifiedTest* test = nullptr;
    if (rec.test) {
      rec.traps = scheme.sample_traps(chooser);
      auto it = tests.find(rec.traps);
      if (it == tests.end()) it = tests.emplace(rec.traps, make_test(pattern.graph, rec.traps)).first;
      test = &it->second;
      res = run_ubqc(test_pattern(pattern, *test, chooser), chooser, srv, i, source);
    } else {
      res = run_ubqc(pattern, chooser, srv, i, source);
    }
    if (noisy) rec.afflicted = noisy->afflicted();
    if (res.aborted) {
      out.aborted = true;
      out.accepted = false;
      out.output.clear();
      out.rounds.push_back(rec);
      return out;
    }
    if (rec.test) {
      rec.tau = test->tau(res.s);
      out.failed_tests += static_cast<std::size_t>(rec.tau);
    } else {
      rec.outputs = res.outputs;
      results.push_back(res.outputs);
    }
    out.rounds.push_back(std::move(rec));
  }
  out.accepted = verdict_accepts(out.failed_tests, params.w);
  if (out.accepted) out.output = majority_vote(results);
  return out;
}

Angle8 CrspQubitSource::prepare(Statevector& sv, Vertex v, Chooser& chooser) {
  const std::size_t n = clients_.size();
  if (n < 2) throw std::invalid_argument("CRSP needs at least two clients");
  // Client qubits get labels past every graph vertex.
  const Vertex base = 1000 + 16 * v;
  std::vector<Angle8> angles(n);
  for (std::size_t j = 0; j < n; ++j) {
    angles[j] = clients_[j].fixed_angle ? *clients_[j].fixed_angle : chooser.angle();
    sv.add_plus(base + j, angles[j]);
  }
  const Vertex keep = base + n - 1;
  std::vector<int> t;
  for (std::size_t j = 0; j + 1 < n; ++j) {
    sv.cnot(keep, base + j);
    t.push_back(sv.measure_z(base + j, chooser));
  }
  ++sessions_;
  const Angle8 theta_prime = crsp_theta_prime(angles, t);
  Angle8 key = theta_prime;
  if (opts_.apply_correction) {
    key = chooser.angle();
    const int b = chooser.bit();
    sv.zrot(keep, correction_angle(key, theta_prime, b));
    if (b) sv.x(keep);
  }
  sv.relabel(keep, v);
  return key;
}

QsmpcOutcome run_qsmpc(const ProtocolParams& params, const MeasurementPattern& pattern,
                       const TestDistribution& scheme, const std::vector<QsmpcClient>& clients,
                       ServerStrategy& server, QsmpcOptions opts, std::optional<NoiseModel> noise) {
  if (clients.size() < 2) throw std::invalid_argument("QSMPC needs at least two clients");
  const auto inputs = pattern.graph.inputs();
  VertexSet covered;
  std::vector<int> bits(pattern.num_vertices(), 0);
  for (const auto& c : clients) {
    if (c.inputs.size() != c.bits.size()) throw std::invalid_argument("input share has mismatched length");
    for (std::size_t i = 0; i < c.inputs.size(); ++i) {
      const Vertex v = c.inputs[i];
      if (!inputs.contains(v)) throw std::invalid_argument("input share names a non-input vertex");
      if (covered.contains(v)) throw std::invalid_argument("input vertex shared by two clients");
      if (c.bits[i] != 0 && c.bits[i] != 1) throw std::invalid_argument("input bits must be 0 or 1");
      covered.insert(v);
      bits[v] = c.bits[i];
    }
  }
  if (covered != inputs) throw std::invalid_argument("input shares do not cover every input vertex");
  MeasurementPattern joined = pattern;
  joined.input_bits = bits;

  CrspQubitSource source(clients, opts);
  QsmpcOutcome out;
  out.run = run_trappified_protocol(params, joined, scheme, server, noise, &source);
  out.per_client.assign(clients.size(), out.run);
  out.crsp_sessions = source.sessions();
  return out;
}

bool correction_removal_equivalence(Angle8 theta, Angle8 theta_prime, int b, Angle8 phi_prime, int r) {
  constexpr Vertex q = 0, env = 1;
  const Amp e0 = std::cos(0.3), e1 = std::polar(std::sin(0.3), 0.7);
  auto fresh = [&](Angle8 prep) {
    Statevector s;
    s.add_plus(q, Angle8(0));
    s.zrot(q, prep);
    return s;
  };
  // With correction.
  Statevector lhs = fresh(theta_prime);
  lhs.zrot(q, correction_angle(theta, theta_prime, b));
  if (b) lhs.x(q);
  lhs.add_qubit(env, e0, e1);
  lhs.cz(q, env);
  lhs.zrot(q, -(phi_prime + theta + Angle8::pi_times(r)));
  // Without it.
  const Angle8 theta_hat = theta_prime.signed_by(b);
  Statevector rhs = fresh(theta_hat);
  rhs.add_qubit(env, e0, e1);
  rhs.cz(q, env);
  rhs.zrot(q, -(phi_prime + theta_hat + Angle8::pi_times(r)));
  return lhs.fidelity(rhs) >= 1.0 - 1e-12;
}

double deviation_effect(const MeasurementPattern& pattern, const PauliOp& e, const EnumerateOptions& opts) {
  const auto clean = mbqc_distribution(pattern, {}, opts);
  const auto dev = mbqc_distribution(pattern, deviation_before_first(e), opts);
  return total_variation(clean, dev);
}

}  // namespace xyv
