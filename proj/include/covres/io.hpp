#pragma once

#include <optional>
#include <string>
#include <vector>

#include "covres/covering.hpp"
#include "covres/graph.hpp"

namespace covres {

// A graph document: the decorated graph plus an optional covering block.
//
// {
//   "vertices": [{"id": "v1", "kind": "node", "genus": 3, "euler": -2, "mult": 2},
//                {"id": "a1", "kind": "arrow", "mult": 1}],
//   "edges":    [["v1", "v2"], ["v2", "a1"]],
//   "covering": {"n": {"v1": 2, ...},
//                "d": {"0": 1, ...},                 // by edge index, default 1
//                "offsets": {"0": [0, 0], ...}}      // by edge index, default [0,0]
// }
//
// Out-of-range covering offsets are reduced into range with a warning.
struct Document {
  DecoratedGraph graph;
  std::optional<CoveringPresentation> covering;
  std::vector<std::string> warnings;
};

Document parse_document(const std::string& text);  // throws ParseError

std::string serialize_document(const DecoratedGraph& g,
                               const std::optional<CoveringPresentation>& covering = std::nullopt);

// Graphviz rendering: nodes labelled "e=<euler> [genus] (mult)", arrowheads
// drawn as directed edges out of their node.
std::string to_dot(const DecoratedGraph& g);

}  // namespace covres
