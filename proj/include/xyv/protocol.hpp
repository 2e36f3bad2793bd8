#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xyv/crsp.hpp"
#include "xyv/mbqc.hpp"
#include "xyv/traps.hpp"
#include "xyv/ubqc.hpp"

namespace xyv {

struct ProtocolParams {
  std::size_t N = 0;
  std::size_t d = 0;
  std::size_t w = 0;
  double c = 1.0 / 3.0;
  std::uint64_t seed = 0;

  std::size_t s() const { return N - d; }
  /// Throws std::invalid_argument unless 1 <= d <= N, d odd, 0 < c < 1/2.
  void validate() const;
};

/// Largest integer strictly below (2c-1)/(2c-2) s (1-eps), at least 0.
/// Throws std::invalid_argument unless 0 < c < 1/2 and 0 < eps <= 1.
std::size_t max_failures(double c, std::size_t s, double epsilon);

/// What the server is allowed to know about a run.
struct PublicInfo {
  std::string computation_class;
  OpenGraph graph;
  std::string scheme;
  std::vector<Vertex> order;
};

struct NoiseModel {
  /// Probability that a round is afflicted by Z on a uniformly random
  /// nonempty support.
  double q = 0.0;
};

struct RoundRecord {
  std::size_t index = 0;
  bool test = false;
  bool afflicted = false;
  /// 1 if the test failed, 0 if it passed, -1 for computation rounds.
  int tau = -1;
  VertexSet traps;
  std::vector<int> outputs;
};

struct RunOutcome {
  bool accepted = false;
  bool aborted = false;
  std::vector<int> output;
  std::size_t failed_tests = 0;
  std::vector<RoundRecord> rounds;
};

/// Accept iff failed < w.
inline bool verdict_accepts(std::size_t failed, std::size_t w) { return failed < w; }

/// Per-bit majority over the computation rounds.
std::vector<int> majority_vote(const std::vector<std::vector<int>>& outputs);

/// d computation rounds placed uniformly at random among N; the rest are
/// tests drawn from `scheme`. Rounds run in order against `server`.
RunOutcome run_trappified_protocol(const ProtocolParams& params, const MeasurementPattern& pattern,
                                   const TestDistribution& scheme, ServerStrategy& server,
                                   std::optional<NoiseModel> noise = std::nullopt, QubitSource* source = nullptr);

struct QsmpcClient {
  /// Input vertices owned by this client and their bits, in the same order.
  std::vector<Vertex> inputs;
  std::vector<int> bits;
  /// When set, the client always prepares this angle (and reports it).
  std::optional<Angle8> fixed_angle;
};

struct QsmpcOptions {
  /// Send and apply the orchestrator's correction; when false the UBQC key
  /// is theta' directly.
  bool apply_correction = false;
};

struct QsmpcOutcome {
  RunOutcome run;
  /// The verdict and output every client receives.
  std::vector<RunOutcome> per_client;
  std::size_t crsp_sessions = 0;
};

/// Every qubit comes from a CRSP session among all clients. The orchestrator
/// joins the clients' input shares and hands every client the same result.
/// Throws std::invalid_argument for malformed shares.
QsmpcOutcome run_qsmpc(const ProtocolParams& params, const MeasurementPattern& pattern,
                       const TestDistribution& scheme, const std::vector<QsmpcClient>& clients,
                       ServerStrategy& server, QsmpcOptions opts = {}, std::optional<NoiseModel> noise = std::nullopt);

/// Qubits produced by honest-server CRSP sessions among `clients`.
class CrspQubitSource final : public QubitSource {
 public:
  CrspQubitSource(const std::vector<QsmpcClient>& clients, QsmpcOptions opts) : clients_(clients), opts_(opts) {}
  Angle8 prepare(Statevector& sv, Vertex v, Chooser& chooser) override;
  std::size_t sessions() const { return sessions_; }

 private:
  const std::vector<QsmpcClient>& clients_;
  QsmpcOptions opts_;
  std::size_t sessions_ = 0;
};

/// Checks by simulation, with a generic environment qubit coupled by CZ,
/// that applying the CRSP correction and measuring at phi'+theta+r pi gives
/// the same state as skipping it and measuring with theta_hat = (-1)^b theta'.
bool correction_removal_equivalence(Angle8 theta, Angle8 theta_prime, int b, Angle8 phi_prime, int r);

/// Exact total-variation distance between the output distribution of
/// `pattern` with `e` applied before the first measurement and without it.
double deviation_effect(const MeasurementPattern& pattern, const PauliOp& e, const EnumerateOptions& opts = {});

}  // namespace xyv
