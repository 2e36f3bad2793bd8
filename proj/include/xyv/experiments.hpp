#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>

#include "xyv/mbqc.hpp"
#include "xyv/report.hpp"

namespace xyv {

/// Dummyless generators of g with their Z-freeness, commutation and rank
/// checks, plus the rank and commutation checks for S_0.
ExperimentReport experiment_generators(const OpenGraph& g);

/// Optimal test distribution of g. The distribution, with its epsilon, is
/// stored under metrics()["distribution"].
ExperimentReport experiment_optimize(const OpenGraph& g);

/// Monte Carlo detection of the brickwork strategy over all weight-1 and
/// weight-2 errors plus 1000 random supports; E* is reported on its own.
ExperimentReport experiment_brickwork_rate(std::size_t rows, std::size_t cols, std::size_t samples,
                                           std::uint64_t seed);

/// Exact effect of E* on the pattern's output distribution and on `trials`
/// copies of it with uniformly redrawn angles. A single odd-vertex Z is
/// reported for contrast.
ExperimentReport experiment_harmless(const MeasurementPattern& p, std::size_t trials, std::uint64_t seed);

enum class CrspMode { Correctness, Security };

/// Correctness: fidelity to |+_theta> over every branch. Security: real vs
/// ideal view distance for every target and deterministic report strategy (n <= 3) or
/// `samples` sampled ones.
ExperimentReport experiment_crsp(std::size_t n, CrspMode mode, std::size_t samples, std::uint64_t seed);

/// Runs the protocol described by a run configuration. Relative paths in the
/// configuration resolve against `base_dir`. `seed_override` replaces the
/// configured seed. Throws ParseError for malformed configurations.
ExperimentReport experiment_run(const Json& config, const std::filesystem::path& base_dir,
                                std::optional<std::uint64_t> seed_override = std::nullopt);

}  // namespace xyv
