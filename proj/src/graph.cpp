#include "covres/graph.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "covres/errors.hpp"

namespace covres {

bool DecoratedGraph::is_node(const VertexId& v) const {
  return vertices.at(v).kind == VertexKind::Node;
}

bool DecoratedGraph::is_arrowhead(const VertexId& v) const {
  return vertices.at(v).kind == VertexKind::Arrowhead;
}

void DecoratedGraph::add_vertex(const VertexId& v, VertexData data) {
  auto [it, inserted] = vertices.emplace(v, std::move(data));
  (void)it;
  if (!inserted) throw std::logic_error("duplicate vertex id: " + v.id);
}

void DecoratedGraph::add_edge(const VertexId& a, const VertexId& b) {
  edges.emplace_back(a, b);
}

long long DecoratedGraph::degree(const VertexId& v) const {
  long long d = 0;
  for (const auto& [a, b] : edges) {
    if (a == v) ++d;
    if (b == v) ++d;
  }
  return d;
}

std::vector<size_t> DecoratedGraph::edges_at(const VertexId& v) const {
  std::vector<size_t> out;
  for (size_t e = 0; e < edges.size(); ++e)
    if (edges[e].first == v || edges[e].second == v) out.push_back(e);
  return out;
}

std::vector<VertexId> DecoratedGraph::node_ids() const {
  std::vector<VertexId> out;
  for (const auto& [v, data] : vertices)
    if (data.kind == VertexKind::Node) out.push_back(v);
  return out;
}

std::vector<VertexId> DecoratedGraph::arrowhead_ids() const {
  std::vector<VertexId> out;
  for (const auto& [v, data] : vertices)
    if (data.kind == VertexKind::Arrowhead) out.push_back(v);
  return out;
}

long long DecoratedGraph::euler_of(const VertexId& v) const {
  const auto& data = vertices.at(v);
  if (!data.euler) throw Error(ErrorCode::MissingDecoration, "vertex " + v.id + " has no euler number");
  return *data.euler;
}

long long DecoratedGraph::mult_of(const VertexId& v) const {
  const auto& data = vertices.at(v);
  if (!data.mult) throw Error(ErrorCode::MissingDecoration, "vertex " + v.id + " has no multiplicity");
  return *data.mult;
}

ValidationReport validate_graph(const DecoratedGraph& g) {
  ValidationReport report;
  auto add = [&](const std::string& code, const std::string& detail) {
    report.findings.push_back({code, detail});
  };

  for (size_t e = 0; e < g.edges.size(); ++e) {
    const auto& [a, b] = g.edges[e];
    for (const VertexId* v : {&a, &b})
      if (!g.has_vertex(*v)) add("UnknownEndpoint", "edge " + std::to_string(e) + " references missing vertex " + v->id);
    if (a == b) add("LoopEdge", "edge " + std::to_string(e) + " is a loop at " + a.id);
  }

  for (const auto& [v, data] : g.vertices) {
    if (data.kind == VertexKind::Arrowhead) {
      if (g.degree(v) != 1) add("ArrowheadDegree", "arrowhead " + v.id + " has degree " + std::to_string(g.degree(v)));
      if (data.genus != 0 || data.euler) add("ArrowheadDecoration", "arrowhead " + v.id + " carries genus or euler");
    }
    if (data.genus < 0) add("NegativeGenus", "vertex " + v.id + " has genus " + std::to_string(data.genus));
    if (data.mult && *data.mult < 1) add("NonpositiveMult", "vertex " + v.id + " has multiplicity " + std::to_string(*data.mult));
  }
  return report;
}

namespace {

// Disjoint-set over vertex ids.
struct Dsu {
  std::map<VertexId, VertexId> parent;

  void make(const VertexId& v) { parent.emplace(v, v); }

  VertexId find(const VertexId& v) {
    VertexId r = v;
    while (!(parent.at(r) == r)) r = parent.at(r);
    VertexId c = v;
    while (!(parent.at(c) == r)) {
      VertexId next = parent.at(c);
      parent[c] = r;
      c = next;
    }
    return r;
  }

  void unite(const VertexId& a, const VertexId& b) { parent[find(a)] = find(b); }
};

}  // namespace

GraphStats stats(const DecoratedGraph& g) {
  GraphStats s;
  Dsu dsu;
  for (const auto& [v, data] : g.vertices) {
    dsu.make(v);
    if (data.kind == VertexKind::Node)
      s.total_genus += data.genus;
    else
      ++s.num_arrows;
  }
  for (const auto& [a, b] : g.edges)
    if (g.has_vertex(a) && g.has_vertex(b)) dsu.unite(a, b);
  std::map<VertexId, int> roots;
  for (const auto& [v, data] : g.vertices) {
    (void)data;
    roots.emplace(dsu.find(v), 0);
  }
  s.num_components = static_cast<long long>(roots.size());
  s.cycle_rank = static_cast<long long>(g.edges.size()) - static_cast<long long>(g.vertices.size()) + s.num_components;
  return s;
}

bool check_compatibility(const DecoratedGraph& g) {
  for (const auto& [w, data] : g.vertices) {
    if (data.kind != VertexKind::Node) continue;
    long long sum = g.euler_of(w) * g.mult_of(w);
    for (size_t e : g.edges_at(w)) {
      const auto& [a, b] = g.edges[e];
      const VertexId& other = (a == w) ? b : a;
      sum += g.mult_of(other);
    }
    if (sum != 0) return false;
  }
  return true;
}

DecoratedGraph strip_embedding(const DecoratedGraph& g) {
  DecoratedGraph out;
  for (const auto& [v, data] : g.vertices) {
    if (data.kind == VertexKind::Arrowhead) continue;
    VertexData d = data;
    d.mult.reset();
    out.add_vertex(v, d);
  }
  for (const auto& [a, b] : g.edges)
    if (out.has_vertex(a) && out.has_vertex(b)) out.add_edge(a, b);
  return out;
}

namespace {

// Shared precondition analysis for blow_down; throws when `throwing`.
bool blow_down_check(const DecoratedGraph& g, const VertexId& v, bool throwing) {
  auto fail = [&](ErrorCode code, const std::string& msg) -> bool {
    if (throwing) throw Error(code, msg);
    return false;
  };
  if (!g.has_vertex(v)) return fail(ErrorCode::NotBlowDownable, "no vertex " + v.id);
  const auto& data = g.vertices.at(v);
  if (data.kind != VertexKind::Node) return fail(ErrorCode::NotBlowDownable, v.id + " is not a node");
  if (data.genus != 0) return fail(ErrorCode::NotBlowDownable, v.id + " has positive genus");
  if (!data.euler) return fail(ErrorCode::MissingDecoration, v.id + " has no euler number");
  if (*data.euler != -1) return fail(ErrorCode::NotBlowDownable, v.id + " has euler " + std::to_string(*data.euler));
  auto incident = g.edges_at(v);
  if (incident.size() > 2) return fail(ErrorCode::NotBlowDownable, v.id + " has degree " + std::to_string(incident.size()));
  std::vector<VertexId> nbrs;
  for (size_t e : incident) {
    const auto& [a, b] = g.edges[e];
    if (a == b) return fail(ErrorCode::NotBlowDownable, v.id + " has a loop");
    nbrs.push_back(a == v ? b : a);
  }
  for (const auto& u : nbrs) {
    if (g.vertices.at(u).kind != VertexKind::Node)
      return fail(ErrorCode::NotBlowDownable, v.id + " touches arrowhead " + u.id);
    if (!g.vertices.at(u).euler) return fail(ErrorCode::MissingDecoration, u.id + " has no euler number");
  }
  if (nbrs.size() == 2 && nbrs[0] == nbrs[1])
    return fail(ErrorCode::BlowDownWouldCreateLoop, v.id + " is adjacent twice to " + nbrs[0].id);
  return true;
}

}  // namespace

bool blow_down_eligible(const DecoratedGraph& g, const VertexId& v) {
  return blow_down_check(g, v, false);
}

DecoratedGraph blow_down(const DecoratedGraph& g, const VertexId& v) {
  blow_down_check(g, v, true);
  std::vector<VertexId> nbrs;
  for (size_t e : g.edges_at(v)) {
    const auto& [a, b] = g.edges[e];
    nbrs.push_back(a == v ? b : a);
  }
  DecoratedGraph out;
  for (const auto& [u, data] : g.vertices) {
    if (u == v) continue;
    VertexData d = data;
    for (const auto& n : nbrs)
      if (n == u) d.euler = *d.euler + 1;
    out.add_vertex(u, d);
  }
  for (const auto& [a, b] : g.edges)
    if (!(a == v) && !(b == v)) out.add_edge(a, b);
  if (nbrs.size() == 2) out.add_edge(std::min(nbrs[0], nbrs[1]), std::max(nbrs[0], nbrs[1]));
  return out;
}

DecoratedGraph minimize(const DecoratedGraph& g) {
  DecoratedGraph cur = g;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [v, data] : cur.vertices) {
      (void)data;
      if (blow_down_eligible(cur, v)) {
        cur = blow_down(cur, v);
        changed = true;
        break;  // vertex set changed; restart the scan
      }
    }
  }
  return cur;
}

}  // namespace covres
