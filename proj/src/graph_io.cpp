#include "xyv/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "xyv/error.hpp"

namespace xyv {

namespace {

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(byte), '\n'));
}

std::string label_of(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError("vertex label must be a string or integer");
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

}  // namespace

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), line_of(text, e.byte ? e.byte - 1 : 0));
  }
}

Json load_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Vertex vertex_ref(const OpenGraph& g, const Json& ref) {
  try {
    return g.index_of(label_of(ref));
  } catch (const std::out_of_range& e) {
    throw ParseError(e.what());
  }
}

VertexSet vertex_set_from_json(const OpenGraph& g, const Json& arr) {
  if (!arr.is_array()) throw ParseError("expected an array of vertices");
  VertexSet s;
  for (const auto& r : arr) s.insert(vertex_ref(g, r));
  return s;
}

Json vertex_set_to_json(const OpenGraph& g, VertexSet s) {
  Json arr = Json::array();
  for (Vertex v : s) arr.push_back(g.label(v));
  return arr;
}

OpenGraph graph_from_json(const Json& j) {
  const Json& vs = require(j, "vertices");
  if (!vs.is_array() || vs.empty()) throw ParseError("'vertices' must be a nonempty array");
  std::vector<std::string> labels;
  for (const auto& v : vs) labels.push_back(label_of(v));
  if (labels.size() > kMaxVertices) throw ParseError("more than 64 vertices");
  // A label-only graph used to resolve references before the real one exists.
  auto index = [&labels](const Json& ref) -> Vertex {
    const std::string l = label_of(ref);
    auto it = std::find(labels.begin(), labels.end(), l);
    if (it == labels.end()) throw ParseError("unknown vertex '" + l + "'");
    return static_cast<Vertex>(it - labels.begin());
  };
  auto pairs = [&](const Json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string("'") + what + "' must be an array");
    std::vector<Edge> out;
    for (const auto& p : arr) {
      if (!p.is_array() || p.size() != 2) throw ParseError(std::string("'") + what + "' entries must be pairs");
      out.emplace_back(index(p[0]), index(p[1]));
    }
    return out;
  };
  auto set = [&](const char* key) {
    VertexSet s;
    auto it = j.find(key);
    if (it == j.end()) return s;
    if (!it->is_array()) throw ParseError(std::string("'") + key + "' must be an array");
    for (const auto& r : *it) s.insert(index(r));
    return s;
  };
  std::vector<Edge> edges = pairs(require(j, "edges"), "edges");
  std::vector<Edge> order;
  if (auto it = j.find("order"); it != j.end()) order = pairs(*it, "order");
  const VertexSet inputs = set("inputs"), outputs = set("outputs");
  try {
    const std::size_t n = labels.size();
    return OpenGraph(n, std::move(edges), inputs, outputs, std::move(order), std::move(labels));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid graph: ") + e.what());
  }
}

Json graph_to_json(const OpenGraph& g) {
  Json j;
  j["vertices"] = g.labels();
  Json edges = Json::array();
  for (auto [a, b] : g.edges()) edges.push_back({g.label(a), g.label(b)});
  j["edges"] = edges;
  j["inputs"] = vertex_set_to_json(g, g.inputs());
  j["outputs"] = vertex_set_to_json(g, g.outputs());
  if (!g.order().empty()) {
    Json order = Json::array();
    for (auto [a, b] : g.order()) order.push_back({g.label(a), g.label(b)});
    j["order"] = order;
  }
  return j;
}

OpenGraph load_graph(const std::filesystem::path& path) { return graph_from_json(load_json_file(path)); }

}  // namespace xyv
