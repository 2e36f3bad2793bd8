#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "xyv/angle.hpp"
#include "xyv/rng.hpp"

namespace xyv {

/// Source of every random decision in a simulated run. Programs written
/// against this interface can either be sampled or enumerated exactly.
class Chooser {
 public:
  virtual ~Chooser() = default;
  /// Measurement outcome: 0 with probability p0, 1 otherwise.
  virtual int born(double p0) = 0;
  /// Uniform value in [0, k).
  virtual int uniform(int k) = 0;
  int bit() { return uniform(2); }
  Angle8 angle() { return Angle8(uniform(8)); }
};

/// Born probabilities this close to 0 or 1 are treated as deterministic.
inline constexpr double kBornEpsilon = 1e-12;

class SampledChooser final : public Chooser {
 public:
  explicit SampledChooser(Rng& rng) : rng_(rng) {}
  int born(double p0) override;
  int uniform(int k) override { return rng_.uniform(k); }

 private:
  Rng& rng_;
};

enum class CoinMode {
  /// Every uniform() call becomes a branch point.
  Enumerate,
  /// uniform() calls are sampled from the seed; only Born outcomes branch.
  Sample,
};

struct EnumerateOptions {
  CoinMode coins = CoinMode::Enumerate;
  std::uint64_t seed = 0;
  std::size_t max_leaves = std::size_t{1} << 22;
  /// Limit on nondeterministic Born outcomes along one branch.
  std::size_t max_born_points = 12;
};

/// Runs `program` once per branch of its choice tree. `on_leaf` receives the
/// probability of the branch that just finished. Throws BudgetExceeded when
/// either limit of `opts` is exceeded.
void enumerate_branches(const std::function<void(Chooser&)>& program, const std::function<void(double)>& on_leaf,
                        const EnumerateOptions& opts = {});

/// Exact distribution of the value returned by `program`.
template <class R, class F>
std::map<R, double> exact_distribution(F&& program, const EnumerateOptions& opts = {}) {
  std::map<R, double> out;
  R last{};
  enumerate_branches([&](Chooser& c) { last = program(c); }, [&](double p) { out[last] += p; }, opts);
  return out;
}

using BitDistribution = std::map<std::string, double>;

/// "0110" style key, element i is character i.
std::string bits_to_string(const std::vector<int>& bits);

template <class K>
double total_variation(const std::map<K, double>& a, const std::map<K, double>& b) {
  double sum = 0.0;
  for (const auto& [k, p] : a) {
    auto it = b.find(k);
    sum += std::abs(p - (it == b.end() ? 0.0 : it->second));
  }
  for (const auto& [k, p] : b) {
    if (!a.count(k)) sum += std::abs(p);
  }
  return sum / 2.0;
}

}  // namespace xyv
