#include "xyv/ubqc.hpp"

#include <stdexcept>

#include "xyv/error.hpp"

namespace xyv {

Angle8 ubqc_client_angle(UbqcRoundState& state, const MeasurementPattern& p, Vertex v, Chooser& chooser) {
  if (state.cursor >= p.order.size() || p.order[state.cursor] != v) {
    throw std::logic_error("ubqc_client_angle: vertex requested out of order");
  }
  const Angle8 phi = corrected_angle(p, v, state.s, state.measured);
  state.r[v] = chooser.bit();
  return phi + state.theta[v] + Angle8::pi_times(state.r[v]) + Angle8::pi_times(p.input_bits[v]);
}

std::optional<PauliOp> FixedZServer::deviation(Vertex, Angle8) {
  if (!pending_) return std::nullopt;
  pending_ = false;
  return error_;
}

void NoisyServer::begin_round(std::size_t round, Chooser& chooser) {
  inner_.begin_round(round, chooser);
  pending_noise_.reset();
  afflicted_ = false;
  // Integer comparison against a 2^20 grid keeps this enumerable as a coin.
  constexpr int kGrid = 1 << 20;
  if (chooser.uniform(kGrid) < static_cast<int>(q_ * kGrid)) {
    std::uint64_t mask = 0;
    if (n_ <= 30) {
      mask = 1 + static_cast<std::uint64_t>(chooser.uniform(static_cast<int>((std::uint64_t{1} << n_) - 1)));
    } else {
      while (mask == 0)
        for (std::size_t v = 0; v < n_; ++v) mask |= static_cast<std::uint64_t>(chooser.bit()) << v;
    }
    pending_noise_ = PauliOp::z_on(n_, VertexSet(mask));
    afflicted_ = true;
  }
}

std::optional<PauliOp> NoisyServer::deviation(Vertex v, Angle8 delta) {
  auto inner = inner_.deviation(v, delta);
  if (!pending_noise_) return inner;
  PauliOp noise = *pending_noise_;
  pending_noise_.reset();
  return inner ? pauli_mul(*inner, noise) : noise;
}

UbqcResult run_ubqc(const MeasurementPattern& p, Chooser& chooser, ServerStrategy& server, std::size_t round,
                    QubitSource* source) {
  UbqcResult out;
  if (server.abort(round)) {
    out.aborted = true;
    return out;
  }
  server.begin_round(round, chooser);
  DirectQubitSource direct;
  QubitSource& src = source ? *source : direct;
  const std::size_t n = p.num_vertices();
  UbqcRoundState state(n);
  Statevector sv;
  for (Vertex v = 0; v < n; ++v) state.theta[v] = src.prepare(sv, v, chooser);
  sv.entangle_graph(p.graph);

  out.delta.assign(n, Angle8());
  for (Vertex v : p.order) {
    const Angle8 delta = ubqc_client_angle(state, p, v, chooser);
    out.delta[v] = delta;
    if (auto e = server.deviation(v, delta)) {
      if (!(e->support() & state.measured).empty()) throw ProtocolError("deviation acts on a measured qubit");
      sv.apply_pauli(*e);
    }
    const int measured = sv.measure_xy(v, delta, chooser);
    const int b = server.report(v, measured);
    if (b != 0 && b != 1) throw ProtocolError("server reported a non-binary outcome");
    state.b[v] = b;
    state.s[v] = b ^ state.r[v];
    state.measured.insert(v);
    ++state.cursor;
  }
  out.s = state.s;
  out.outputs = output_bits(p, state.s);
  return out;
}

BitDistribution ubqc_distribution(const MeasurementPattern& p, ServerStrategy& server, const EnumerateOptions& opts) {
  return exact_distribution<std::string>(
      [&](Chooser& c) { return bits_to_string(run_ubqc(p, c, server).outputs); }, opts);
}

}  // namespace xyv
