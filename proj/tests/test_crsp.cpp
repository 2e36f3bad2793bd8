#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "xyv/crsp.hpp"

using namespace xyv;

namespace {

using C = std::complex<double>;

// |<+_theta|psi>|^2 for a one-qubit state, from the raw amplitudes.
double overlap_plus(const Statevector& s, Angle8 theta) {
  EXPECT_EQ(s.num_qubits(), 1u);
  const auto& a = s.amplitudes();
  const double ang = theta.k() * M_PI / 4;
  const C inner = (a[0] + std::exp(C(0, -ang)) * a[1]) / std::sqrt(2.0);
  const double norm = std::norm(a[0]) + std::norm(a[1]);
  return std::norm(inner) / norm;
}

double overlap_zero(const Statevector& s) {
  const auto& a = s.amplitudes();
  return std::norm(a[0]) / (std::norm(a[0]) + std::norm(a[1]));
}

std::vector<Angle8> all_angles() {
  std::vector<Angle8> out;
  for (int k = 0; k < 8; ++k) out.emplace_back(k);
  return out;
}

}  // namespace

TEST(Crsp, ThetaPrimeExample) {
  EXPECT_EQ(crsp_theta_prime({Angle8(1), Angle8(6), Angle8(3)}, {0, 1}), Angle8(6));
  EXPECT_EQ(crsp_theta_prime({Angle8(0), Angle8(0)}, {1}), Angle8(0));
  EXPECT_THROW(crsp_theta_prime({Angle8(1), Angle8(2)}, {}), std::logic_error);
}

TEST(Crsp, CorrectionExamples) {
  EXPECT_EQ(correction_angle(Angle8(5), Angle8(5), 0), Angle8(0));
  EXPECT_EQ(correction_angle(Angle8(2), Angle8(6), 1), Angle8(0));
  EXPECT_EQ(correction_angle(Angle8(0), Angle8(3), 0), Angle8(5));
  EXPECT_EQ(correction_angle(Angle8(0), Angle8(0), 0), Angle8(0));
}

TEST(Crsp, OrchestratorNeedsAllReports) {
  CrspSession s;
  s.n = 3;
  s.client_angles = {Angle8(1), Angle8(2), Angle8(3)};
  s.t = {0};
  Rng rng(1);
  SampledChooser ch(rng);
  EXPECT_THROW(orchestrator_correction(Angle8(0), s, ch), std::invalid_argument);
  s.t = {0, 1};
  const auto dist = exact_distribution<std::pair<int, int>>([&](Chooser& c) {
    auto [b, corr] = orchestrator_correction(Angle8(2), s, c);
    return std::pair{b, corr.k()};
  });
  ASSERT_EQ(dist.size(), 2u);
  // theta' = 3 + 1 - 2 = 2.
  EXPECT_NEAR(dist.at({0, 0}), 0.5, 1e-12);
  EXPECT_NEAR(dist.at({1, 4}), 0.5, 1e-12);
}

TEST(Crsp, SingleMergeStep) {
  const auto from_plus = exact_distribution<int>([](Chooser& c) {
    auto [t, st] = single_merge_step(Statevector::plus(Angle8(0)), Angle8(2), c);
    const Angle8 expect = Angle8(2).signed_by(t);
    EXPECT_NEAR(overlap_plus(st, expect), 1.0, 1e-12);
    return t;
  });
  EXPECT_NEAR(from_plus.at(0), 0.5, 1e-12);
  EXPECT_NEAR(from_plus.at(1), 0.5, 1e-12);

  for (Angle8 start : all_angles()) {
    enumerate_branches(
        [&](Chooser& c) {
          auto [t, st] = single_merge_step(Statevector::plus(start), Angle8(0), c);
          EXPECT_NEAR(overlap_plus(st, start), 1.0, 1e-12);
        },
        [](double) {});
  }
  for (Angle8 th : all_angles()) {
    Statevector zero;
    zero.add_qubit(0, 1.0, 0.0);
    enumerate_branches(
        [&](Chooser& c) {
          auto [t, st] = single_merge_step(zero, th, c);
          EXPECT_NEAR(overlap_zero(st), 1.0, 1e-12);
        },
        [](double) {});
  }
}

// Merging client qubits one at a time reproduces the closed form for theta'.
TEST(Crsp, MergeStepsComposeToThetaPrime) {
  for (std::size_t n : {2u, 3u, 4u}) {
    enumerate_branches(
        [&](Chooser& c) {
          std::vector<Angle8> angles(n);
          for (auto& a : angles) a = c.angle();
          Statevector st = Statevector::plus(angles.back());
          std::vector<int> t;
          for (std::size_t j = 0; j + 1 < n; ++j) {
            auto [tj, next] = single_merge_step(std::move(st), angles[j], c);
            st = std::move(next);
            t.push_back(tj);
          }
          EXPECT_NEAR(overlap_plus(st, crsp_theta_prime(angles, t)), 1.0, 1e-12);
        },
        [](double) {});
  }
}

TEST(Crsp, HonestRunPreparesTarget) {
  for (std::size_t n : {2u, 3u}) {
    for (Angle8 theta : all_angles()) {
      double total = 0;
      enumerate_branches(
          [&](Chooser& c) {
            const auto run = crsp_honest_run(n, theta, c);
            EXPECT_GE(overlap_plus(run.state, theta), 1.0 - 1e-9);
            EXPECT_EQ(run.session.correction, correction_angle(theta, run.session.theta_prime(), run.session.b));
          },
          [&](double p) { total += p; });
      EXPECT_NEAR(total, 1.0, 1e-9);
    }
  }
}

// Client angles are sampled for the larger sizes; every measurement branch
// is still enumerated.
TEST(Crsp, HonestRunPreparesTargetLargerN) {
  for (std::size_t n : {4u, 5u}) {
    for (Angle8 theta : all_angles()) {
      for (std::uint64_t seed = 0; seed < 8; ++seed) {
        EnumerateOptions opts;
        opts.coins = CoinMode::Sample;
        opts.seed = derive_seed(seed, n * 8 + theta.k());
        enumerate_branches(
            [&](Chooser& c) { EXPECT_GE(overlap_plus(crsp_honest_run(n, theta, c).state, theta), 1.0 - 1e-9); },
            [](double) {}, opts);
      }
    }
  }
}

TEST(Crsp, HonestRunRejectsSingleClient) {
  Rng rng(1);
  SampledChooser ch(rng);
  EXPECT_THROW(crsp_honest_run(1, Angle8(0), ch), std::invalid_argument);
}

TEST(Crsp, TranscriptRecordsEveryMessage) {
  Rng rng(4);
  SampledChooser ch(rng);
  const auto run = crsp_honest_run(3, Angle8(3), ch);
  const auto j = run.transcript.to_json();
  ASSERT_TRUE(j.is_array());
  EXPECT_EQ(j.back()["party"], "orchestrator");
  EXPECT_EQ(j.back()["kind"], "correction");
  for (const auto& rec : j) {
    EXPECT_TRUE(rec.contains("direction"));
    EXPECT_TRUE(rec.contains("payload"));
  }
}

TEST(Crsp, SecurityTwoClientsEveryStrategy) {
  const std::vector<Angle8> adv{Angle8(3), Angle8(5)};
  for (std::size_t h : {0u, 1u})
    for (Angle8 theta : all_angles())
      for (std::uint64_t idx = 0; idx < 256; ++idx) {
        const auto r = crsp_security_experiment(2, h, theta, adv, deterministic_t_strategy(2, idx));
        ASSERT_LE(r.tv, 1e-9) << "h=" << h << " theta=" << theta.k() << " strategy=" << idx;
      }
}

TEST(Crsp, SecurityThreeClientsEveryStrategy) {
  const std::vector<Angle8> adv{Angle8(1), Angle8(6), Angle8(3)};
  for (std::size_t h : {0u, 1u, 2u}) {
    const Angle8 theta(static_cast<int>(2 * h + 1));
    for (std::uint64_t idx = 0; idx < (1u << 16); ++idx) {
      const auto r = crsp_security_experiment(3, h, theta, adv, deterministic_t_strategy(3, idx));
      ASSERT_LE(r.tv, 1e-9) << "h=" << h << " strategy=" << idx;
    }
  }
}

TEST(Crsp, SecurityRandomStrategy) {
  for (std::size_t n : {2u, 3u, 4u})
    for (std::size_t h = 0; h < n; ++h) {
      std::vector<Angle8> adv(n, Angle8(7));
      EXPECT_LE(crsp_security_experiment(n, h, Angle8(6), adv, random_t_strategy(n)).tv, 1e-9);
    }
}

TEST(Crsp, CorrectionMarginalsAreUniform) {
  const auto r = crsp_security_experiment(3, 1, Angle8(2), {Angle8(0), Angle8(0), Angle8(4)},
                                          deterministic_t_strategy(3, 0xA5C3));
  for (const auto* dist : {&r.real, &r.ideal}) {
    std::map<int, double> corr, bit;
    double total = 0;
    for (const auto& [view, p] : *dist) {
      corr[std::get<4>(view)] += p;
      bit[std::get<3>(view)] += p;
      total += p;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
    ASSERT_EQ(corr.size(), 8u);
    for (auto [k, p] : corr) EXPECT_NEAR(p, 1.0 / 8, 1e-12);
    ASSERT_EQ(bit.size(), 2u);
    for (auto [k, p] : bit) EXPECT_NEAR(p, 0.5, 1e-12);
  }
}

TEST(Crsp, SecurityExperimentValidatesArguments) {
  const auto s = deterministic_t_strategy(2, 0);
  EXPECT_THROW(crsp_security_experiment(1, 0, Angle8(0), {Angle8(0)}, s), std::invalid_argument);
  EXPECT_THROW(crsp_security_experiment(2, 2, Angle8(0), {Angle8(0), Angle8(0)}, s), std::invalid_argument);
  EXPECT_THROW(crsp_security_experiment(3, 0, Angle8(0), {Angle8(0), Angle8(0), Angle8(0)}, s), std::invalid_argument);
}
