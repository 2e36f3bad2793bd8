#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "xyv/mbqc.hpp"
#include "xyv/statevector.hpp"

namespace xyv {

/// Client secrets for one UBQC round.
struct UbqcRoundState {
  std::vector<Angle8> theta;
  std::vector<int> r;
  /// Bits as reported by the server.
  std::vector<int> b;
  /// Decrypted outcomes b ^ r.
  std::vector<int> s;
  VertexSet measured;
  std::size_t cursor = 0;

  explicit UbqcRoundState(std::size_t n) : theta(n), r(n, 0), b(n, 0), s(n, 0) {}
};

/// phi'(v) + theta(v) + r(v) pi + x(v) pi with r(v) freshly drawn. Throws
/// std::logic_error if v is not next in the measurement order.
Angle8 ubqc_client_angle(UbqcRoundState& state, const MeasurementPattern& p, Vertex v, Chooser& chooser);

/// The server as seen by the protocol. It only learns the round index, the
/// vertex being measured and the angle sent for it.
class ServerStrategy {
 public:
  virtual ~ServerStrategy() = default;
  virtual void begin_round(std::size_t /*round*/, Chooser& /*chooser*/) {}
  /// True to stop the protocol before this round starts.
  virtual bool abort(std::size_t /*round*/) { return false; }
  /// Pauli applied to the unmeasured qubits just before measuring v.
  virtual std::optional<PauliOp> deviation(Vertex /*v*/, Angle8 /*delta*/) { return std::nullopt; }
  /// Bit returned to the client for the measurement of v. Anything other
  /// than 0 or 1 is a protocol violation.
  virtual int report(Vertex /*v*/, int measured) { return measured; }
};

class HonestServer final : public ServerStrategy {};

/// Reports the complement of every outcome.
class FlipAllServer final : public ServerStrategy {
 public:
  int report(Vertex, int measured) override { return measured ^ 1; }
};

/// Applies Z on a fixed support before the first measurement of every round.
class FixedZServer final : public ServerStrategy {
 public:
  FixedZServer(std::size_t n, VertexSet support) : error_(PauliOp::z_on(n, support)) {}
  void begin_round(std::size_t, Chooser&) override { pending_ = true; }
  std::optional<PauliOp> deviation(Vertex, Angle8) override;

 private:
  PauliOp error_;
  bool pending_ = false;
};

/// Honest until `round`, then aborts.
class AbortingServer final : public ServerStrategy {
 public:
  explicit AbortingServer(std::size_t round) : round_(round) {}
  bool abort(std::size_t round) override { return round >= round_; }

 private:
  std::size_t round_;
};

/// Wraps another server; each round is afflicted with probability q by Z on
/// a uniformly random nonempty support.
class NoisyServer final : public ServerStrategy {
 public:
  NoisyServer(ServerStrategy& inner, std::size_t n, double q) : inner_(inner), n_(n), q_(q) {}
  void begin_round(std::size_t round, Chooser& chooser) override;
  bool abort(std::size_t round) override { return inner_.abort(round); }
  std::optional<PauliOp> deviation(Vertex v, Angle8 delta) override;
  int report(Vertex v, int measured) override { return inner_.report(v, measured); }
  bool afflicted() const { return pending_noise_.has_value() || afflicted_; }

 private:
  ServerStrategy& inner_;
  std::size_t n_;
  double q_;
  std::optional<PauliOp> pending_noise_;
  bool afflicted_ = false;
};

/// Puts qubit v into the server's state and returns the angle the client
/// side uses as theta(v) when computing delta.
class QubitSource {
 public:
  virtual ~QubitSource() = default;
  virtual Angle8 prepare(Statevector& server_state, Vertex v, Chooser& chooser) = 0;
};

/// The client prepares |+_theta> itself with theta uniform.
class DirectQubitSource final : public QubitSource {
 public:
  Angle8 prepare(Statevector& sv, Vertex v, Chooser& chooser) override {
    const Angle8 theta = chooser.angle();
    sv.add_plus(v, theta);
    return theta;
  }
};

struct UbqcResult {
  bool aborted = false;
  /// Decrypted outcome per vertex.
  std::vector<int> s;
  /// Angles sent, per vertex.
  std::vector<Angle8> delta;
  std::vector<int> outputs;
};

/// One UBQC round of pattern p against `server`.
UbqcResult run_ubqc(const MeasurementPattern& p, Chooser& chooser, ServerStrategy& server, std::size_t round = 0,
                    QubitSource* source = nullptr);

BitDistribution ubqc_distribution(const MeasurementPattern& p, ServerStrategy& server,
                                  const EnumerateOptions& opts = {});

}  // namespace xyv
