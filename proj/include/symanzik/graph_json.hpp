#pragma once

#include <stdexcept>
#include <string>

#include "symanzik/supports.hpp"

namespace symanzik {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// On-disk form of a graph plus optional coefficient degeneracy:
//   { "vertices": [..], "edges": [{"id","ends","massive"}, ..],
//     "external": [..], "deleted_monomials": [[int per edge], ..] }
struct GraphDocument {
  FeynmanGraph graph;
  Degeneracy degeneracy;
};

GraphDocument parse_graph_document(const std::string& text);
GraphDocument load_graph_document(const std::string& path);
std::string graph_document_to_json(const GraphDocument& doc);

}  // namespace symanzik
