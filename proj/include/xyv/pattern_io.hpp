#pragma once

#include <filesystem>

#include "xyv/graph_io.hpp"
#include "xyv/mbqc.hpp"

namespace xyv {

/// {graph, angles: {v: k}, flow: {v: f(v)}, sx?, sz?, input_bits?}. When sx
/// and sz are both absent they are derived from the flow.
MeasurementPattern pattern_from_json(const Json& j);
Json pattern_to_json(const MeasurementPattern& p);
MeasurementPattern load_pattern(const std::filesystem::path& path);

}  // namespace xyv
