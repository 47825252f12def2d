#include "symanzik/graph_json.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symanzik {

using json = nlohmann::ordered_json;

GraphDocument parse_graph_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  try {
    if (!doc.is_object()) throw ParseError("top level must be an object");
    std::vector<std::string> vertices =
        doc.at("vertices").get<std::vector<std::string>>();
    std::vector<EdgeSpec> edges;
    for (const json& e : doc.at("edges")) {
      EdgeSpec spec;
      spec.id = e.at("id").get<std::string>();
      const json& ends = e.at("ends");
      if (!ends.is_array() || ends.size() != 2)
        throw ParseError("edge " + spec.id + ": \"ends\" must list two vertices");
      spec.from = ends[0].get<std::string>();
      spec.to = ends[1].get<std::string>();
      spec.massive = e.value("massive", false);
      edges.push_back(std::move(spec));
    }
    std::vector<std::string> external;
    if (doc.contains("external"))
      external = doc.at("external").get<std::vector<std::string>>();

    GraphDocument out{
        FeynmanGraph(std::move(vertices), std::move(edges), std::move(external)),
        {}};
    if (doc.contains("deleted_monomials")) {
      for (const json& m : doc.at("deleted_monomials")) {
        ExponentVec v = m.get<ExponentVec>();
        if (static_cast<int>(v.size()) != out.graph.num_edges())
          throw ParseError("deleted monomial length must equal the edge count");
        out.degeneracy.deleted.push_back(std::move(v));
      }
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("schema error: ") + e.what());
  } catch (const GraphError& e) {
    throw ParseError(std::string("graph error: ") + e.what());
  }
}

GraphDocument load_graph_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_document(buf.str());
}

std::string graph_document_to_json(const GraphDocument& doc) {
  json out;
  out["vertices"] = doc.graph.vertex_ids();
  json edges = json::array();
  for (int e = 0; e < doc.graph.num_edges(); ++e) {
    auto [a, b] = doc.graph.ends(e);
    edges.push_back({{"id", doc.graph.edge_id(e)},
                     {"ends", {doc.graph.vertex_id(a), doc.graph.vertex_id(b)}},
                     {"massive", doc.graph.massive(e)}});
  }
  out["edges"] = std::move(edges);
  json ext = json::array();
  for (int v : doc.graph.external_vertices())
    ext.push_back(doc.graph.vertex_id(v));
  out["external"] = std::move(ext);
  if (!doc.degeneracy.deleted.empty())
    out["deleted_monomials"] = doc.degeneracy.deleted;
  return out.dump(2);
}

}  // namespace symanzik
