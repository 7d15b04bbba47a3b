#pragma once

#include <string>
#include <utility>
#include <vector>

#include "setreal/io.hpp"
#include "setreal/rep.hpp"

namespace sr {

struct Graph {
  std::vector<std::string> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // vertex indices
  std::size_t vertex_index(const std::string& name) const;
};

/// Graphs over a poset shape. vertex_maps[a][i] is the image in the target graph
/// of vertex i of the source graph.
struct GraphDiagram {
  Shape shape;
  std::vector<Graph> graphs;
  std::vector<std::vector<std::size_t>> vertex_maps;
};

/// Throws RepError on bad references, non-morphisms or non-commuting paths,
/// ShapeError when the shape is not a poset given by its cover relation.
void validate(const GraphDiagram& G);

/// Connected components, numbered by their smallest vertex name.
std::vector<std::size_t> component_labels(const Graph& g, std::size_t* count = nullptr);

/// Path components as a basepoint-free SetRep.
SetRep h0_setrep(const GraphDiagram& G);

/// Mapping-cylinder graphs: G(p) has a vertex "r:i" for each r <= p and element
/// i of S(r), and an edge from "q:i" to "q':S(a)(i)" for every arrow a: q -> q'
/// with q' <= p. Throws RepError on basepointed input.
GraphDiagram setrep_to_graphs(const SetRep& S);

namespace io {
/// {"shape": ..., "objects": {name: {"vertices": [...], "edges": [[u, v]]}},
///  "maps": {arrow: "inclusion" | {u: v}}}
GraphDiagram graph_diagram_from_json(const json& j);
json graph_diagram_to_json(const GraphDiagram& G);
}  // namespace io

}  // namespace sr
