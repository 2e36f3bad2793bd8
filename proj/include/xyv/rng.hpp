#pragma once

#include <cstdint>
#include <random>

namespace xyv {

/// Derives an independent 64-bit seed for sub-run `index` of a run seeded with
/// `master`. Used wherever work is split into independently seeded streams.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

/// Seeded pseudo-random stream. Every probabilistic operation takes one of
/// these (directly or through a Chooser) so that runs are reproducible.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [0, k).
  int uniform(int k);
  int bit() { return static_cast<int>(engine_() >> 63); }
  /// Uniform double in [0, 1).
  double unit();
  bool bernoulli(double p) { return unit() < p; }
  /// Child stream for sub-run `index`.
  Rng split(std::uint64_t index) { return Rng(derive_seed(engine_(), index)); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace xyv
