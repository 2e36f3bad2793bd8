#pragma once

#include <functional>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "xyv/angle.hpp"
#include "xyv/branching.hpp"
#include "xyv/statevector.hpp"
#include "xyv/transcript.hpp"

namespace xyv {

/// Clients are numbered 0..n-1; client n-1 owns the qubit that survives.
struct CrspSession {
  std::size_t n = 0;
  std::vector<Angle8> client_angles;
  Angle8 target;
  /// Reported bits for clients 0..n-2.
  std::vector<int> t;
  int b = 0;
  Angle8 correction;

  /// theta_{n-1} + sum_j (-1)^{t_j} theta_j. Throws std::logic_error when
  /// reports are missing.
  Angle8 theta_prime() const;
};

/// theta_n + sum_j (-1)^{t_j} theta_j for explicit inputs.
Angle8 crsp_theta_prime(const std::vector<Angle8>& client_angles, const std::vector<int>& t);

/// (-1)^b theta - theta'.
Angle8 correction_angle(Angle8 theta, Angle8 theta_prime, int b);

/// b drawn uniformly, correction (-1)^b theta - theta'. Throws
/// std::invalid_argument when some client report is missing.
std::pair<int, Angle8> orchestrator_correction(Angle8 theta, const CrspSession& session, Chooser& chooser);

/// CNOT from `control` (a one-qubit state) onto a fresh |+_theta_hat>,
/// then measures the target in the computational basis.
std::pair<int, Statevector> single_merge_step(Statevector control, Angle8 theta_hat, Chooser& chooser);

struct CrspRun {
  Statevector state;
  CrspSession session;
  Transcript transcript;
};

/// Honest run with n clients towards target theta. Client angles and b are
/// drawn from `chooser`. The returned state is the server's final qubit,
/// labelled n-1. Throws std::invalid_argument for n < 2.
CrspRun crsp_honest_run(std::size_t n, Angle8 theta, Chooser& chooser);

/// The five values visible to a distinguisher, as Angle8 k values and bits:
/// target, received honest qubit, t_h, correction bit, correction angle.
using CrspView = std::tuple<int, int, int, int, int>;
using CrspViewDistribution = std::map<CrspView, double>;

/// Reports t_0..t_{n-2} given the angle of the honest client's qubit. May
/// use the chooser for randomised strategies.
using TStrategy = std::function<std::vector<int>(Angle8 received, Chooser&)>;

struct CrspSecurityResult {
  CrspViewDistribution real;
  CrspViewDistribution ideal;
  double tv = 0.0;
};

/// Exact real and ideal view distributions for honest client h and target
/// theta. Angles of the corrupted clients are `adversary_angles` (entry h is
/// ignored).
CrspSecurityResult crsp_security_experiment(std::size_t n, std::size_t h, Angle8 theta,
                                            const std::vector<Angle8>& adversary_angles, const TStrategy& strategy);

/// Deterministic strategy number `index` out of 2^{8(n-1)}: bit j of the
/// report for received angle k is bit (8j + k) of index.
TStrategy deterministic_t_strategy(std::size_t n, std::uint64_t index);
/// Uniformly random reports.
TStrategy random_t_strategy(std::size_t n);

}  // namespace xyv
