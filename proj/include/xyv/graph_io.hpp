#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "xyv/graph.hpp"

namespace xyv {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with the line number.
Json parse_json_text(std::string_view text);
/// Reads and parses a JSON file. Missing files raise ParseError too.
Json load_json_file(const std::filesystem::path& path);

/// {vertices: [labels], edges: [[a,b]...], inputs, outputs, order?}
OpenGraph graph_from_json(const Json& j);
Json graph_to_json(const OpenGraph& g);
OpenGraph load_graph(const std::filesystem::path& path);

/// Resolves a vertex reference (label string or label-like number).
Vertex vertex_ref(const OpenGraph& g, const Json& ref);
VertexSet vertex_set_from_json(const OpenGraph& g, const Json& arr);
Json vertex_set_to_json(const OpenGraph& g, VertexSet s);

}  // namespace xyv
