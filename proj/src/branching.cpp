#include "xyv/branching.hpp"

#include <stdexcept>

#include "xyv/error.hpp"

namespace xyv {

int SampledChooser::born(double p0) {
  if (p0 <= kBornEpsilon) return 1;
  if (p0 >= 1.0 - kBornEpsilon) return 0;
  return rng_.unit() < p0 ? 0 : 1;
}

namespace {

struct Choice {
  int value;
  double prob;
};

/// Replays a fixed prefix of choices, then takes value 0 at each new choice
/// point and queues the remaining values as new prefixes.
class ReplayChooser final : public Chooser {
 public:
  ReplayChooser(std::vector<int> prefix, std::vector<std::vector<int>>& pending, const EnumerateOptions& opts,
                Rng& coin_rng)
      : prefix_(std::move(prefix)), pending_(pending), opts_(opts), coin_rng_(coin_rng) {}

  int born(double p0) override {
    if (p0 <= kBornEpsilon) return 1;
    if (p0 >= 1.0 - kBornEpsilon) return 0;
    if (++born_points_ > opts_.max_born_points) throw BudgetExceeded("too many Born branch points on one branch");
    const int v = take(2);
    prob_ *= v == 0 ? p0 : 1.0 - p0;
    return v;
  }

  int uniform(int k) override {
    if (k <= 0) throw std::invalid_argument("uniform: k must be positive");
    if (k == 1) return 0;
    if (opts_.coins == CoinMode::Sample) {
      // Sampled coins are recorded as forced choices so replays agree.
      if (cursor_ < prefix_.size()) return prefix_[cursor_++];
      const int v = coin_rng_.uniform(k);
      prefix_.push_back(v);
      ++cursor_;
      return v;
    }
    const int v = take(k);
    prob_ /= k;
    return v;
  }

  double prob() const { return prob_; }

 private:
  int take(int arity) {
    if (cursor_ < prefix_.size()) return prefix_[cursor_++];
    for (int alt = arity - 1; alt >= 1; --alt) {
      auto p = prefix_;
      p.push_back(alt);
      pending_.push_back(std::move(p));
    }
    prefix_.push_back(0);
    ++cursor_;
    return 0;
  }

  std::vector<int> prefix_;
  std::size_t cursor_ = 0;
  std::vector<std::vector<int>>& pending_;
  const EnumerateOptions& opts_;
  Rng& coin_rng_;
  double prob_ = 1.0;
  std::size_t born_points_ = 0;
};

}  // namespace

void enumerate_branches(const std::function<void(Chooser&)>& program, const std::function<void(double)>& on_leaf,
                        const EnumerateOptions& opts) {
  Rng coin_rng(opts.seed);
  std::vector<std::vector<int>> pending{{}};
  std::size_t leaves = 0;
  while (!pending.empty()) {
    auto prefix = std::move(pending.back());
    pending.pop_back();
    if (++leaves > opts.max_leaves) throw BudgetExceeded("branch enumeration exceeded its leaf budget");
    ReplayChooser chooser(std::move(prefix), pending, opts, coin_rng);
    program(chooser);
    on_leaf(chooser.prob());
  }
}

std::string bits_to_string(const std::vector<int>& bits) {
  std::string s;
  s.reserve(bits.size());
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

}  // namespace xyv
