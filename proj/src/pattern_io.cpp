#include "xyv/pattern_io.hpp"

#include "xyv/error.hpp"

namespace xyv {

namespace {

const Json& object_field(const Json& j, const char* key, const Json& fallback) {
  auto it = j.find(key);
  if (it == j.end()) return fallback;
  if (!it->is_object()) throw ParseError(std::string("'") + key + "' must be an object keyed by vertex");
  return *it;
}

int int_value(const Json& v, const char* what) {
  if (!v.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  return v.get<int>();
}

}  // namespace

MeasurementPattern pattern_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("pattern must be a JSON object");
  auto git = j.find("graph");
  if (git == j.end()) throw ParseError("missing field 'graph'");
  OpenGraph g = graph_from_json(*git);
  const std::size_t n = g.num_vertices();
  static const Json empty = Json::object();

  std::vector<Angle8> angles(n);
  for (const auto& [key, val] : object_field(j, "angles", empty).items()) {
    angles[vertex_ref(g, key)] = Angle8(int_value(val, "angle"));
  }
  std::map<Vertex, Vertex> f;
  for (const auto& [key, val] : object_field(j, "flow", empty).items()) f[vertex_ref(g, key)] = vertex_ref(g, val);

  Flow flow;
  const bool explicit_deps = j.contains("sx") || j.contains("sz");
  if (explicit_deps) {
    flow.f = f;
    flow.sx.assign(n, {});
    flow.sz.assign(n, {});
    for (const auto& [key, val] : object_field(j, "sx", empty).items())
      flow.sx[vertex_ref(g, key)] = vertex_set_from_json(g, val);
    for (const auto& [key, val] : object_field(j, "sz", empty).items())
      flow.sz[vertex_ref(g, key)] = vertex_set_from_json(g, val);
  } else {
    try {
      flow = standard_flow(g, f);
    } catch (const std::invalid_argument& e) {
      throw ParseError(std::string("invalid flow: ") + e.what());
    }
  }

  std::vector<int> bits(n, 0);
  for (const auto& [key, val] : object_field(j, "input_bits", empty).items()) {
    bits[vertex_ref(g, key)] = int_value(val, "input bit");
  }
  try {
    return make_pattern(std::move(g), std::move(angles), std::move(flow), std::move(bits));
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid pattern: ") + e.what());
  }
}

Json pattern_to_json(const MeasurementPattern& p) {
  const OpenGraph& g = p.graph;
  Json j;
  j["graph"] = graph_to_json(g);
  Json angles = Json::object(), flow = Json::object(), sx = Json::object(), sz = Json::object(),
       bits = Json::object();
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    angles[g.label(v)] = p.angles[v].k();
    if (!p.flow.sx[v].empty()) sx[g.label(v)] = vertex_set_to_json(g, p.flow.sx[v]);
    if (!p.flow.sz[v].empty()) sz[g.label(v)] = vertex_set_to_json(g, p.flow.sz[v]);
  }
  for (Vertex v : g.inputs()) bits[g.label(v)] = p.input_bits[v];
  for (auto [v, fv] : p.flow.f) flow[g.label(v)] = g.label(fv);
  j["angles"] = angles;
  j["flow"] = flow;
  j["sx"] = sx;
  j["sz"] = sz;
  j["input_bits"] = bits;
  return j;
}

MeasurementPattern load_pattern(const std::filesystem::path& path) { return pattern_from_json(load_json_file(path)); }

}  // namespace xyv
