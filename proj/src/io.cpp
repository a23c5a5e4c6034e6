#include "covres/io.hpp"

#include <json.hpp>
#include <sstream>

#include "covres/errors.hpp"

namespace covres {

using json = nlohmann::ordered_json;

namespace {

long long get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw Error(ErrorCode::ParseError, where + " must be an integer");
  return j.get<long long>();
}

}  // namespace

Document parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "document must be a JSON object");

  Document out;
  if (!doc.contains("vertices") || !doc["vertices"].is_array())
    throw Error(ErrorCode::ParseError, "document needs a \"vertices\" array");
  for (const auto& v : doc["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string())
      throw Error(ErrorCode::ParseError, "every vertex needs a string \"id\"");
    VertexId id(v["id"].get<std::string>());
    VertexData data;
    if (v.contains("kind")) {
      std::string kind = v["kind"].is_string() ? v["kind"].get<std::string>() : "";
      if (kind == "node")
        data.kind = VertexKind::Node;
      else if (kind == "arrow")
        data.kind = VertexKind::Arrowhead;
      else
        throw Error(ErrorCode::ParseError, "vertex " + id.id + " has unknown kind");
    }
    if (v.contains("genus")) data.genus = get_int(v["genus"], "genus of " + id.id);
    if (v.contains("euler")) data.euler = get_int(v["euler"], "euler of " + id.id);
    if (v.contains("mult")) data.mult = get_int(v["mult"], "mult of " + id.id);
    if (out.graph.has_vertex(id)) throw Error(ErrorCode::ParseError, "duplicate vertex id " + id.id);
    out.graph.add_vertex(id, data);
  }
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw Error(ErrorCode::ParseError, "\"edges\" must be an array");
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
        throw Error(ErrorCode::ParseError, "every edge must be a pair of vertex ids");
      VertexId a(e[0].get<std::string>()), b(e[1].get<std::string>());
      for (const VertexId* v : {&a, &b})
        if (!out.graph.has_vertex(*v))
          throw Error(ErrorCode::ParseError, "edge references unknown vertex " + v->id);
      out.graph.add_edge(a, b);
    }
  }
  ValidationReport report = validate_graph(out.graph);
  if (!report.ok())
    throw Error(ErrorCode::ParseError,
                report.findings[0].code + ": " + report.findings[0].detail);

  if (doc.contains("covering")) {
    const json& cov = doc["covering"];
    if (!cov.is_object() || !cov.contains("n") || !cov["n"].is_object())
      throw Error(ErrorCode::ParseError, "\"covering\" needs an \"n\" object");
    CoveringPresentation p;
    p.base = out.graph;
    for (const auto& [key, val] : cov["n"].items()) {
      VertexId id(key);
      if (!out.graph.has_vertex(id))
        throw Error(ErrorCode::ParseError, "covering fibre size for unknown vertex " + key);
      long long n = get_int(val, "covering n of " + key);
      if (n < 1) throw Error(ErrorCode::ParseError, "covering fibre size at " + key + " must be >= 1");
      p.data.n[id] = n;
    }
    for (const auto& [v, dat] : out.graph.vertices) {
      (void)dat;
      if (!p.data.n.count(v))
        throw Error(ErrorCode::ParseError, "covering block misses a fibre size for vertex " + v.id);
    }
    p.data.d.assign(out.graph.edges.size(), 1);
    p.offsets.assign(out.graph.edges.size(), {0, 0});
    auto edge_index = [&](const std::string& key, const char* what) -> size_t {
      size_t idx = 0;
      try {
        idx = std::stoul(key);
      } catch (...) {
        throw Error(ErrorCode::ParseError, std::string(what) + " key \"" + key + "\" is not an edge index");
      }
      if (idx >= out.graph.edges.size())
        throw Error(ErrorCode::ParseError, std::string(what) + " key \"" + key + "\" is out of range");
      return idx;
    };
    if (cov.contains("d")) {
      if (!cov["d"].is_object()) throw Error(ErrorCode::ParseError, "covering \"d\" must be an object");
      for (const auto& [key, val] : cov["d"].items()) {
        long long d = get_int(val, "covering d[" + key + "]");
        if (d < 1) throw Error(ErrorCode::ParseError, "covering density on edge " + key + " must be >= 1");
        p.data.d[edge_index(key, "covering d")] = d;
      }
    }
    if (cov.contains("offsets")) {
      if (!cov["offsets"].is_object()) throw Error(ErrorCode::ParseError, "covering \"offsets\" must be an object");
      for (const auto& [key, val] : cov["offsets"].items()) {
        if (!val.is_array() || val.size() != 2)
          throw Error(ErrorCode::ParseError, "covering offsets on edge " + key + " must be a pair");
        size_t e = edge_index(key, "covering offsets");
        long long s1 = get_int(val[0], "offset s1 on edge " + key);
        long long s2 = get_int(val[1], "offset s2 on edge " + key);
        const auto& [a, b] = out.graph.edges[e];
        long long na = p.data.n.at(a), nb = p.data.n.at(b);
        if (s1 < 0 || s1 >= na || s2 < 0 || s2 >= nb) {
          out.warnings.push_back("offsets on edge " + key + " reduced into range");
          s1 = mod_pos(s1, na);
          s2 = mod_pos(s2, nb);
        }
        p.offsets[e] = {s1, s2};
      }
    }
    out.covering = std::move(p);
  }
  return out;
}

std::string serialize_document(const DecoratedGraph& g,
                               const std::optional<CoveringPresentation>& covering) {
  json doc = json::object();
  doc["vertices"] = json::array();
  for (const auto& [v, data] : g.vertices) {
    json jv = json::object();
    jv["id"] = v.id;
    jv["kind"] = data.kind == VertexKind::Node ? "node" : "arrow";
    if (data.genus != 0) jv["genus"] = data.genus;
    if (data.euler) jv["euler"] = *data.euler;
    if (data.mult) jv["mult"] = *data.mult;
    doc["vertices"].push_back(jv);
  }
  doc["edges"] = json::array();
  for (const auto& [a, b] : g.edges) doc["edges"].push_back(json::array({a.id, b.id}));
  if (covering) {
    json cov = json::object();
    cov["n"] = json::object();
    for (const auto& [v, n] : covering->data.n) cov["n"][v.id] = n;
    cov["d"] = json::object();
    for (size_t e = 0; e < covering->data.d.size(); ++e) cov["d"][std::to_string(e)] = covering->data.d[e];
    cov["offsets"] = json::object();
    for (size_t e = 0; e < covering->offsets.size(); ++e)
      cov["offsets"][std::to_string(e)] = json::array({covering->offsets[e].first, covering->offsets[e].second});
    doc["covering"] = cov;
  }
  return doc.dump(2) + "\n";
}

std::string to_dot(const DecoratedGraph& g) {
  std::ostringstream out;
  out << "graph cover {\n  node [shape=circle];\n";
  for (const auto& [v, data] : g.vertices) {
    if (data.kind == VertexKind::Arrowhead) {
      out << "  \"" << v.id << "\" [shape=none, label=\"";
      if (data.mult) out << "(" << *data.mult << ")";
      out << "\"];\n";
      continue;
    }
    out << "  \"" << v.id << "\" [label=\"";
    if (data.euler) out << "e=" << *data.euler;
    if (data.genus != 0) out << " [" << data.genus << "]";
    if (data.mult) out << " (" << *data.mult << ")";
    out << "\"];\n";
  }
  for (const auto& [a, b] : g.edges) {
    bool arrow = g.vertices.at(a).kind == VertexKind::Arrowhead ||
                 g.vertices.at(b).kind == VertexKind::Arrowhead;
    const VertexId& tail = g.vertices.at(b).kind == VertexKind::Arrowhead ? a : b;
    const VertexId& head = g.vertices.at(b).kind == VertexKind::Arrowhead ? b : a;
    if (arrow)
      out << "  \"" << tail.id << "\" -- \"" << head.id << "\" [dir=forward, arrowhead=normal];\n";
    else
      out << "  \"" << a.id << "\" -- \"" << b.id << "\";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace covres
