// In-code builders for the recurring example germs, mirroring the JSON files
// in tests/fixtures/.  Kept independent of the io module so graph-level tests
// do not depend on parsing.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "covres/covering.hpp"
#include "covres/graph.hpp"

namespace fixtures {

using covres::CoveringData;
using covres::CoveringPresentation;
using covres::DecoratedGraph;
using covres::VertexData;
using covres::VertexId;
using covres::VertexKind;

inline VertexData node(std::optional<long long> euler, std::optional<long long> mult,
                       long long genus = 0) {
  VertexData d;
  d.kind = VertexKind::Node;
  d.genus = genus;
  d.euler = euler;
  d.mult = mult;
  return d;
}

inline VertexData arrow(std::optional<long long> mult) {
  VertexData d;
  d.kind = VertexKind::Arrowhead;
  d.mult = mult;
  return d;
}

inline void add(DecoratedGraph& g, const std::string& id, VertexData d) {
  g.add_vertex(VertexId(id), d);
}

inline void join(DecoratedGraph& g, const std::string& a, const std::string& b) {
  g.add_edge(VertexId(a), VertexId(b));
}

// Trivial covering with the given fibre sizes (vertices in id order get the
// listed values) and all densities 1 unless overridden.
inline CoveringPresentation with_data(const DecoratedGraph& base,
                                      const std::map<std::string, long long>& n,
                                      const std::map<size_t, long long>& d = {}) {
  CoveringData data;
  for (const auto& [id, vd] : base.vertices) {
    (void)vd;
    data.n[id] = n.at(id.id);
  }
  data.d.assign(base.edges.size(), 1);
  for (const auto& [e, val] : d) data.d[e] = val;
  CoveringPresentation p;
  p.base = base;
  p.data = data;
  p.offsets.assign(base.edges.size(), {0, 0});
  return p;
}

// Six-node star germ: two unit leaves and a unit leaf chain around a pair of
// multiplicity-2 centres, plus one arrowed (-3) branch.  |det| = 4.
inline DecoratedGraph ns1() {
  DecoratedGraph g;
  add(g, "v1", node(-2, 1));
  add(g, "v2", node(-2, 1));
  add(g, "v3", node(-2, 2));
  add(g, "v4", node(-2, 2));
  add(g, "v5", node(-2, 1));
  add(g, "v6", node(-3, 1));
  add(g, "ar", arrow(1));
  join(g, "v1", "v3");
  join(g, "v2", "v3");
  join(g, "v3", "v4");
  join(g, "v4", "v5");
  join(g, "v4", "v6");
  join(g, "v6", "ar");
  return g;
}

// Genus-3 vertex joined to an arrowed rational vertex; two covering data
// choices that realize non-isomorphic covers.
inline DecoratedGraph gamma_a() {
  DecoratedGraph g;
  add(g, "w1", node(-2, 2, 3));
  add(g, "w2", node(-1, 4));
  add(g, "a1", arrow(1));
  add(g, "a2", arrow(1));
  join(g, "w1", "w2");  // edge 0
  join(g, "w2", "a1");
  join(g, "w2", "a2");
  return g;
}

inline CoveringPresentation gamma_a_f1() {
  return with_data(gamma_a(), {{"w1", 2}, {"w2", 1}, {"a1", 1}, {"a2", 1}});
}

inline CoveringPresentation gamma_a_f2() {
  return with_data(gamma_a(), {{"w1", 1}, {"w2", 1}, {"a1", 1}, {"a2", 1}}, {{0, 2}});
}

// Rational germ with a triangle: the double cover splits into two triangles
// (trivial class) or one hexagon (twisted class); the class group is Z_2.
inline DecoratedGraph gamma_b() {
  DecoratedGraph g;
  add(g, "w0", node(-1, 8));
  add(g, "w1", node(-2, 6));
  add(g, "w2", node(-4, 2));
  add(g, "w3", node(-4, 2));
  add(g, "a1", arrow(1));
  add(g, "a2", arrow(1));
  join(g, "w0", "w1");  // edge 0
  join(g, "w1", "w2");  // edge 1
  join(g, "w1", "w3");  // edge 2
  join(g, "w2", "w3");  // edge 3
  join(g, "w0", "a1");
  join(g, "w0", "a2");
  return g;
}

inline std::map<std::string, long long> gamma_b_n() {
  return {{"w0", 1}, {"w1", 2}, {"w2", 2}, {"w3", 2}, {"a1", 1}, {"a2", 1}};
}

inline CoveringPresentation gamma_b_f1() { return with_data(gamma_b(), gamma_b_n()); }

inline CoveringPresentation gamma_b_f2() {
  CoveringPresentation p = gamma_b_f1();
  p.offsets[3] = {1, 0};
  return p;
}

// Single genus-3 vertex with one multiplicity-2 arrow; the two covering data
// choices differ in the number of components (2 vs 1).
inline DecoratedGraph gamma_c() {
  DecoratedGraph g;
  add(g, "w", node(-1, 2, 3));
  add(g, "a", arrow(2));
  join(g, "w", "a");
  return g;
}

inline CoveringPresentation gamma_c_f1() {
  return with_data(gamma_c(), {{"w", 2}, {"a", 2}});
}

inline CoveringPresentation gamma_c_f2() {
  return with_data(gamma_c(), {{"w", 1}, {"a", 2}});
}

// Arrowed (-3)-(-1)-(-2) chain with multiplicities (2,6,3): the plane cusp.
inline DecoratedGraph cusp() {
  DecoratedGraph g;
  add(g, "v1", node(-3, 2));
  add(g, "v2", node(-1, 6));
  add(g, "v3", node(-2, 3));
  add(g, "ar", arrow(1));
  join(g, "v1", "v2");
  join(g, "v2", "v3");
  join(g, "v2", "ar");
  return g;
}

// The E8 tree: all self-intersections -2, arms of length 1, 2 and 4.
inline DecoratedGraph e8() {
  DecoratedGraph g;
  for (const char* id : {"c", "p1", "q1", "q2", "r1", "r2", "r3", "r4"})
    add(g, id, node(-2, std::nullopt));
  join(g, "c", "p1");
  join(g, "c", "q1");
  join(g, "q1", "q2");
  join(g, "c", "r1");
  join(g, "r1", "r2");
  join(g, "r2", "r3");
  join(g, "r3", "r4");
  return g;
}

// Genus-3 variant of the cusp chain with a density-2 covering edge: a cover
// whose monodromy has a size-2 block at order 2 while the base form is
// unimodular.
inline DecoratedGraph ex918_base() {
  DecoratedGraph g;
  add(g, "v1", node(-3, 2, 3));
  add(g, "v2", node(-1, 6));
  add(g, "v3", node(-2, 3));
  add(g, "ar", arrow(1));
  join(g, "v1", "v2");  // edge 0
  join(g, "v2", "v3");
  join(g, "v2", "ar");
  return g;
}

inline CoveringPresentation ex918_pres() {
  return with_data(ex918_base(), {{"v1", 1}, {"v2", 1}, {"v3", 3}, {"ar", 1}}, {{0, 2}});
}

}  // namespace fixtures
