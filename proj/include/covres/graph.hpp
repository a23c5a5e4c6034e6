#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "covres/numeric.hpp"

namespace covres {

// Vertex identifiers are opaque strings with a natural total order, so every
// map iteration (and hence all output) is deterministic.
struct VertexId {
  std::string id;

  VertexId() = default;
  explicit VertexId(std::string s) : id(std::move(s)) {}
  explicit VertexId(long long n) : id(std::to_string(n)) {}

  bool operator==(const VertexId&) const = default;
  bool operator<(const VertexId& o) const { return natural_less(id, o.id); }
};

enum class VertexKind { Node, Arrowhead };

// Decorations: genus and Euler number live on nodes; multiplicities live on
// both nodes and arrowheads.  A missing genus means 0.
struct VertexData {
  VertexKind kind = VertexKind::Node;
  long long genus = 0;
  std::optional<long long> euler;
  std::optional<long long> mult;

  bool operator==(const VertexData&) const = default;
};

// A decorated multigraph.  Parallel edges are first class: an edge is
// addressed by its index in `edges`, and an unordered pair may occur several
// times.  Loops are rejected by validation.
struct DecoratedGraph {
  std::map<VertexId, VertexData> vertices;
  std::vector<std::pair<VertexId, VertexId>> edges;

  bool operator==(const DecoratedGraph&) const = default;

  bool has_vertex(const VertexId& v) const { return vertices.count(v) > 0; }
  bool is_node(const VertexId& v) const;
  bool is_arrowhead(const VertexId& v) const;

  void add_vertex(const VertexId& v, VertexData data);  // throws on duplicate id
  void add_edge(const VertexId& a, const VertexId& b);

  // Degree counts incident edge endpoints, so parallel edges (and both ends
  // of a loop) contribute with multiplicity.
  long long degree(const VertexId& v) const;
  std::vector<size_t> edges_at(const VertexId& v) const;
  std::vector<VertexId> node_ids() const;
  std::vector<VertexId> arrowhead_ids() const;

  long long genus_of(const VertexId& v) const { return vertices.at(v).genus; }
  long long euler_of(const VertexId& v) const;  // throws MissingDecoration
  long long mult_of(const VertexId& v) const;   // throws MissingDecoration
};

struct Finding {
  std::string code;
  std::string detail;
  bool operator==(const Finding&) const = default;
};

struct ValidationReport {
  std::vector<Finding> findings;
  bool ok() const { return findings.empty(); }
};

// Structural well-formedness: edges reference existing vertices, no loops,
// arrowheads have degree exactly one and carry no genus/euler, genus >= 0,
// mult >= 1 where present.  Pure; never throws.
ValidationReport validate_graph(const DecoratedGraph& g);

struct GraphStats {
  long long num_components = 0;
  long long cycle_rank = 0;  // #edges - #vertices + #components
  long long total_genus = 0;
  long long num_arrows = 0;

  bool operator==(const GraphStats&) const = default;
};

GraphStats stats(const DecoratedGraph& g);

// The multiplicity/Euler-number balance at every node:
//   euler(w) * mult(w) + sum of mult over edge-neighbours of w  ==  0,
// parallel edges counted with multiplicity.  Throws MissingDecoration if a
// needed decoration is absent.
bool check_compatibility(const DecoratedGraph& g);

// Forget the embedding data: drop arrowheads with their edges and all
// multiplicities; keep genus and Euler numbers.
DecoratedGraph strip_embedding(const DecoratedGraph& g);

// Contract a genus-0 node with euler -1 and at most two incident edge ends.
// Neighbours get euler +1; if the degree was two, the two (distinct, node)
// neighbours gain one connecting edge.  Multiplicities are untouched and the
// compatibility relation is preserved.
DecoratedGraph blow_down(const DecoratedGraph& g, const VertexId& v);

bool blow_down_eligible(const DecoratedGraph& g, const VertexId& v);

// Repeatedly blow down the smallest eligible vertex until none is left.
DecoratedGraph minimize(const DecoratedGraph& g);

}  // namespace covres
