#pragma once

#include <map>
#include <utility>
#include <vector>

#include "covres/graph.hpp"
#include "covres/lattice.hpp"

namespace covres {

// Covering data over a base graph: a fibre size n_v >= 1 per vertex and a
// density d_e >= 1 per edge.  The fibre over edge e with endpoints v1, v2 has
// n_e = d_e * lcm(n_v1, n_v2) elements.
struct CoveringData {
  std::map<VertexId, long long> n;
  std::vector<long long> d;  // by edge index

  bool operator==(const CoveringData&) const = default;
};

// A presentation of a cyclic covering graph: for each base edge, offsets
// (s1, s2) with s_i taken mod the endpoint fibre size.  The realized edge
// (e, k) joins (v1, k + s1 mod n_v1) to (v2, k + s2 mod n_v2); the deck
// transformation adds one to every fibre index.  All-zero offsets give the
// trivial covering (the one admitting a section).
struct CoveringPresentation {
  DecoratedGraph base;
  CoveringData data;
  std::vector<std::pair<long long, long long>> offsets;  // by edge index

  long long edge_fiber(size_t e) const;  // n_e
};

// Throws InconsistentCoveringData unless data/offsets exactly fit the base.
void check_presentation(const CoveringPresentation& p);

// The realized covering of a single edge with fibre sizes n1, n2 and density
// d: n1 + n2 vertices and d * lcm(n1, n2) edges.
DecoratedGraph standard_block(long long n1, long long n2, long long d);

CoveringPresentation trivial_covering(DecoratedGraph base, CoveringData data);

struct Realization {
  DecoratedGraph cover;
  // cover vertex id -> (base vertex, fibre index); cover edges are emitted
  // grouped by base edge index, fibre index ascending.
  std::map<VertexId, std::pair<VertexId, long long>> vertex_fiber;
  std::vector<std::pair<size_t, long long>> edge_fiber;
};

Realization realize(const CoveringPresentation& p);

VertexId lift_id(const VertexId& base, long long fiber_index);

// Twist one end of one edge: endpoint 1 or 2, offset += amount (mod n_v).
CoveringPresentation act(CoveringPresentation p, size_t edge, int endpoint, long long amount);

// Equivalence of two presentations over the same base and data: the offset
// difference must lie in the lattice spanned by whole-edge rotations,
// whole-vertex rotations and the fibre moduli (decided exactly via SNF).
bool equivalent(const CoveringPresentation& p1, const CoveringPresentation& p2);

// Deterministic class representative: offsets are zeroed along a spanning
// forest by vertex rotations, each remaining edge's first offset is zeroed
// by an edge rotation, and the residue is reduced modulo the Hermite form of
// the move lattice.  Two presentations are equivalent iff their canonical
// offsets agree.
std::vector<long long> canonical_offsets(const CoveringPresentation& p);

struct CoveringClassGroup {
  AbelianGroup group;
  // class of the unit twist at endpoint 1 of each edge, in coordinates of
  // the torsion decomposition of `group`
  std::map<size_t, std::vector<Int>> generator_images;
};

// The group of covering-graph classes over (base, data): cokernel of the
// rotation map into the product of end-twist groups.  Independent of d.
CoveringClassGroup classification_group(const DecoratedGraph& base, const CoveringData& data);

// Quotient presentation by the index-N subgroup of the deck group: fibre
// sizes gcd(n_v, N), densities gcd(d_e, N / gcd(N, lcm(n_v1, n_v2))),
// offsets reduced.  Realizing it gives exactly the orbit graph of the
// realized covering under N times the deck shift.
CoveringPresentation mod_n(const CoveringPresentation& p, long long N);

// The covering data of the universal abelian covering in the rational
// homology sphere case (connected base, all genus zero, no cycles):
// n_v = gcd of the closed-star multiplicities, n_e = gcd of the endpoint
// multiplicities, zero offsets.  Throws QHSRequired otherwise.
CoveringPresentation universal_covering(const DecoratedGraph& base);

// Findings when a presentation's data is not the universal covering data of
// the base (edge/vertex fibre mismatches, fibres not dividing
// multiplicities, base parallel edges).  Positive-genus vertices only need
// n_v to divide the closed-star gcd.
ValidationReport validate_universal(const DecoratedGraph& base, const CoveringPresentation& p);

GraphStats cover_stats(const CoveringPresentation& p);

}  // namespace covres
