#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symanzik/arith.hpp"

namespace symanzik {

// Edge subsets are bitmasks over the edge order of the owning graph.
using EdgeSet = std::uint32_t;

constexpr int kMaxEdges = 31;

inline int popcount(EdgeSet s) { return __builtin_popcount(s); }
inline bool edge_in(EdgeSet s, int e) { return (s >> e) & 1u; }

// Structural defects: dangling endpoints, duplicate ids, unknown vertices.
// Distinct from s1I failures, which are reported rather than thrown.
struct GraphError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EdgeSpec {
  std::string id;
  std::string from;
  std::string to;
  bool massive = false;
};

// A multigraph with per-edge mass flags and a distinguished set of external
// vertices.  Parallel edges are first-class; self-loops are representable
// here but rejected by validate_s1i.  Immutable after construction.
class FeynmanGraph {
 public:
  FeynmanGraph(std::vector<std::string> vertices, std::vector<EdgeSpec> edges,
               std::vector<std::string> external);

  int num_vertices() const { return static_cast<int>(vertex_ids_.size()); }
  int num_edges() const { return static_cast<int>(edge_ids_.size()); }

  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  const std::string& edge_id(int e) const { return edge_ids_[e]; }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::vector<std::string>& edge_ids() const { return edge_ids_; }

  int vertex_index(const std::string& id) const;  // throws GraphError
  int edge_index(const std::string& id) const;    // throws GraphError

  std::pair<int, int> ends(int e) const { return ends_[e]; }
  bool massive(int e) const { return massive_[e]; }
  bool external(int v) const { return external_[v]; }

  EdgeSet massive_edges() const;
  EdgeSet all_edges() const { return num_edges() >= 32 ? ~EdgeSet(0) : (EdgeSet(1) << num_edges()) - 1; }
  std::vector<int> external_vertices() const;
  int num_external() const;

  // Connected components of the spanning subgraph on edge subset `s`,
  // counted over the full vertex set.
  int components(EdgeSet s) const;
  bool acyclic(EdgeSet s) const;

 private:
  std::vector<std::string> vertex_ids_;
  std::vector<std::string> edge_ids_;
  std::vector<std::pair<int, int>> ends_;
  std::vector<bool> massive_;
  std::vector<bool> external_;
};

// Component label per vertex (label = smallest vertex index in the
// component) for the spanning subgraph on `s`.
std::vector<int> component_labels(const FeynmanGraph& g, EdgeSet s);

struct S1IViolation {
  std::string kind;     // disconnected | no_edges | isolated_vertex |
                        // self_loop | bridge | cut_vertex
  std::string element;  // offending edge/vertex id, empty for global kinds
};

struct S1IReport {
  bool ok = false;
  std::vector<S1IViolation> violations;
};

// Strong 1-irreducibility: connected, >=1 edge, no self-loops, no bridges,
// no cut vertices.  Isolated vertices are reported explicitly.
S1IReport validate_s1i(const FeynmanGraph& g);

// An i-forest: acyclic edge subset whose spanning subgraph has exactly
// (i-1) more components than the graph itself.
struct Forest {
  EdgeSet edges = 0;
  int components = 0;
};

// All i-forests in ascending bitmask order.
std::vector<Forest> enumerate_forests(const FeynmanGraph& g, int i);

// Kirchhoff count of spanning trees: determinant of a Laplacian cofactor
// over exact integers.  Returns 0 for disconnected graphs.  Serves as the
// independent oracle for enumerate_forests(g, 1).
Int spanning_tree_count_oracle(const FeynmanGraph& g);

// Contraction keeps the lower-indexed endpoint; the merged vertex is
// external iff either endpoint was.  Contracting a self-loop throws.
FeynmanGraph contract_edge(const FeynmanGraph& g, int e);
FeynmanGraph delete_edge(const FeynmanGraph& g, int e);

// True iff v reaches an external vertex inside the subgraph of massive
// edges (an external v qualifies via the length-0 path).
bool massive_path_exists(const FeynmanGraph& g, int v);

}  // namespace symanzik
