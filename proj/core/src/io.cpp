#include "zzlab/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace zzlab {

using nlohmann::json;

std::string to_rotgraph_json(const RotationGraph& g) {
  json j;
  j["format"] = "rotgraph-v1";
  j["degree"] = g.degree();
  j["vertices"] = g.vertex_names();
  json rot = json::array();
  for (const auto& [a, b] : g.dart_pairs())
    rot.push_back(json::array({a.vertex, a.port, b.vertex, b.port}));
  j["rot"] = rot;
  return j.dump(2) + "\n";
}

RotationGraph from_rotgraph_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    fail(Errc::FormatError, std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || j.value("format", "") != "rotgraph-v1")
    fail(Errc::FormatError, "missing \"format\": \"rotgraph-v1\"");
  if (!j.contains("degree") || !j["degree"].is_number_integer())
    fail(Errc::FormatError, "missing integer \"degree\"");
  if (!j.contains("vertices") || !j["vertices"].is_array())
    fail(Errc::FormatError, "missing \"vertices\" array");
  if (!j.contains("rot") || !j["rot"].is_array())
    fail(Errc::FormatError, "missing \"rot\" array");

  std::vector<std::string> names;
  for (const auto& v : j["vertices"]) {
    if (!v.is_string()) fail(Errc::FormatError, "vertex names must be strings");
    names.push_back(v.get<std::string>());
  }

  std::vector<DartPair> pairs;
  for (const auto& e : j["rot"]) {
    if (!e.is_array() || e.size() != 4 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
        !e[2].is_number_integer() || !e[3].is_number_integer())
      fail(Errc::FormatError, "rot entries must be 4-tuples [v,h,w,k]");
    pairs.push_back({{e[0].get<int>(), e[1].get<int>()}, {e[2].get<int>(), e[3].get<int>()}});
  }
  return RotationGraph::build(j["degree"].get<int>(), std::move(names), pairs);
}

void write_rotgraph(std::ostream& out, const RotationGraph& g) { out << to_rotgraph_json(g); }

RotationGraph read_rotgraph(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_rotgraph_json(ss.str());
}

static std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string to_dot(const RotationGraph& g) {
  std::ostringstream out;
  out << "graph rotgraph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) out << "  " << dot_quote(g.vertex_name(v)) << ";\n";
  for (const auto& [a, b] : g.dart_pairs())
    out << "  " << dot_quote(g.vertex_name(a.vertex)) << " -- " << dot_quote(g.vertex_name(b.vertex))
        << " [label=\"" << a.port << ":" << b.port << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace zzlab
