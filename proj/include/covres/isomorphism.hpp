#pragma once

#include <map>
#include <string>

#include "covres/graph.hpp"

namespace covres {

// Exact isomorphism of decorated multigraphs: a bijection of vertices that
// preserves kind, genus, euler, mult, an optional extra colour, and edge
// multiplicities.  Colour refinement prunes, backtracking decides; adequate
// at desk scale.
bool is_isomorphic(const DecoratedGraph& a, const DecoratedGraph& b,
                   const std::map<VertexId, std::string>* extra_a = nullptr,
                   const std::map<VertexId, std::string>* extra_b = nullptr);

}  // namespace covres
