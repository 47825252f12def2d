#pragma once

#include <functional>
#include <vector>

#include "symanzik/graph.hpp"

namespace symanzik {

// Test-family builders.  Vertices are "v0", "v1", ...; edges "e0", ...
FeynmanGraph make_graph(int num_vertices,
                        const std::vector<std::pair<int, int>>& ends,
                        EdgeSet massive, const std::vector<int>& external);

// Banana graph: two vertices (both external) joined by parallel edges.
FeynmanGraph make_banana(int num_edges, EdgeSet massive);

FeynmanGraph make_cycle(int num_vertices, EdgeSet massive,
                        const std::vector<int>& external);

// All s1I multigraphs with at most max_edges edges, as canonically labeled
// edge multisets over vertex sets {0..nv-1}; massless, no externals.
std::vector<FeynmanGraph> s1i_graph_shapes(int max_edges);

// Shapes crossed with every mass assignment and every external set of size
// at least two.  This is the exhaustive verification family.
std::vector<FeynmanGraph> family_instances(int max_edges);

// Worker count: SYMANZIK_WORKERS when set, hardware concurrency otherwise.
int worker_count();

// Runs fn(0..n-1) across `workers` threads; any exception is rethrown.
void parallel_for_index(std::size_t n, int workers,
                        const std::function<void(std::size_t)>& fn);

}  // namespace symanzik
