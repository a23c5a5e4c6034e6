#pragma once

#include "covres/covering.hpp"
#include "covres/graph.hpp"
#include "covres/hjstring.hpp"

namespace covres {

// Genus of any vertex lifted over a node w in the degree-N quotient cover:
//   2 - 2g~  =  [ (2 - 2g - delta) * gcd(m, N)
//                 + sum over incident edge ends of gcd(m_other, m, N) ]
//               / gcd(N, n_w)
// delta = number of incident edge ends (arrow edges included, parallel edges
// with multiplicity), n_w = the vertex fibre size of the covering data.
long long genus_lift(long long g, long long delta, long long m,
                     const std::vector<long long>& neighbor_mults,
                     long long N, long long n_w);

struct ResolveOutput {
  DecoratedGraph embedded;  // full decorated output with multiplicities
  DecoratedGraph stripped;  // arrowheads and multiplicities dropped
  long long points_above = 1;
};

// Resolution graph of the degree-N cyclic cover determined by the covering
// presentation p over `base` (an embedded resolution graph with a full
// multiplicity system).  Vertices lifted over base vertex v are named
// "v.<i>"; string vertices over realized edge (e, k) are "e<e>.<k>.<pos>".
ResolveOutput resolve_cyclic_cover(const DecoratedGraph& base,
                                   const CoveringPresentation& p, long long N);

// Convenience: the stripped, minimized resolution graph.
DecoratedGraph resolution_graph(const DecoratedGraph& base,
                                const CoveringPresentation& p, long long N);

// Number of points of the N-fold cover lying over the singular point, where
// k is the number of components of the realized covering graph: gcd(k, N).
long long points_above(long long k, long long N);

}  // namespace covres
