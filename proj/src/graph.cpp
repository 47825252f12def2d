#include "symanzik/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace symanzik {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  // returns false if x and y were already joined
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x > y) std::swap(x, y);
    parent[y] = x;
    return true;
  }
};

}  // namespace

FeynmanGraph::FeynmanGraph(std::vector<std::string> vertices,
                           std::vector<EdgeSpec> edges,
                           std::vector<std::string> external)
    : vertex_ids_(std::move(vertices)) {
  if (static_cast<int>(edges.size()) > kMaxEdges)
    throw GraphError("too many edges (limit " + std::to_string(kMaxEdges) + ")");
  std::map<std::string, int> vindex;
  for (int v = 0; v < num_vertices(); ++v) {
    if (!vindex.emplace(vertex_ids_[v], v).second)
      throw GraphError("duplicate vertex id: " + vertex_ids_[v]);
  }
  std::set<std::string> eids;
  for (const EdgeSpec& e : edges) {
    if (!eids.insert(e.id).second) throw GraphError("duplicate edge id: " + e.id);
    auto a = vindex.find(e.from);
    auto b = vindex.find(e.to);
    if (a == vindex.end() || b == vindex.end())
      throw GraphError("edge " + e.id + " has a dangling endpoint");
    edge_ids_.push_back(e.id);
    ends_.emplace_back(a->second, b->second);
    massive_.push_back(e.massive);
  }
  external_.assign(num_vertices(), false);
  for (const std::string& x : external) {
    auto it = vindex.find(x);
    if (it == vindex.end()) throw GraphError("external vertex not in graph: " + x);
    external_[it->second] = true;
  }
}

int FeynmanGraph::vertex_index(const std::string& id) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (vertex_ids_[v] == id) return v;
  throw GraphError("unknown vertex: " + id);
}

int FeynmanGraph::edge_index(const std::string& id) const {
  for (int e = 0; e < num_edges(); ++e)
    if (edge_ids_[e] == id) return e;
  throw GraphError("unknown edge: " + id);
}

EdgeSet FeynmanGraph::massive_edges() const {
  EdgeSet s = 0;
  for (int e = 0; e < num_edges(); ++e)
    if (massive_[e]) s |= EdgeSet(1) << e;
  return s;
}

std::vector<int> FeynmanGraph::external_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < num_vertices(); ++v)
    if (external_[v]) out.push_back(v);
  return out;
}

int FeynmanGraph::num_external() const {
  return static_cast<int>(external_vertices().size());
}

int FeynmanGraph::components(EdgeSet s) const {
  Dsu dsu(num_vertices());
  int comps = num_vertices();
  for (int e = 0; e < num_edges(); ++e)
    if (edge_in(s, e) && dsu.unite(ends_[e].first, ends_[e].second)) --comps;
  return comps;
}

bool FeynmanGraph::acyclic(EdgeSet s) const {
  Dsu dsu(num_vertices());
  for (int e = 0; e < num_edges(); ++e)
    if (edge_in(s, e) && !dsu.unite(ends_[e].first, ends_[e].second)) return false;
  return true;
}

std::vector<int> component_labels(const FeynmanGraph& g, EdgeSet s) {
  Dsu dsu(g.num_vertices());
  for (int e = 0; e < g.num_edges(); ++e)
    if (edge_in(s, e)) dsu.unite(g.ends(e).first, g.ends(e).second);
  std::vector<int> labels(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) labels[v] = dsu.find(v);
  return labels;
}

S1IReport validate_s1i(const FeynmanGraph& g) {
  S1IReport rep;
  if (g.num_edges() == 0) rep.violations.push_back({"no_edges", ""});

  std::vector<int> degree(g.num_vertices(), 0);
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    ++degree[a];
    ++degree[b];
    if (a == b) rep.violations.push_back({"self_loop", g.edge_id(e)});
  }
  for (int v = 0; v < g.num_vertices(); ++v)
    if (degree[v] == 0) rep.violations.push_back({"isolated_vertex", g.vertex_id(v)});

  const EdgeSet all = g.all_edges();
  const int base_comps = g.components(all);
  if (base_comps > 1) rep.violations.push_back({"disconnected", ""});

  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    if (a == b) continue;  // a self-loop is never a bridge
    if (g.components(all & ~(EdgeSet(1) << e)) > base_comps)
      rep.violations.push_back({"bridge", g.edge_id(e)});
  }

  // Cut vertex: removing v and its incident edges splits the rest.
  if (g.num_vertices() > 2) {
    for (int v = 0; v < g.num_vertices(); ++v) {
      Dsu dsu(g.num_vertices());
      int comps = g.num_vertices() - 1;
      for (int e = 0; e < g.num_edges(); ++e) {
        auto [a, b] = g.ends(e);
        if (a == v || b == v || a == b) continue;
        if (dsu.unite(a, b)) --comps;
      }
      if (comps > base_comps)
        rep.violations.push_back({"cut_vertex", g.vertex_id(v)});
    }
  }

  rep.ok = rep.violations.empty();
  return rep;
}

std::vector<Forest> enumerate_forests(const FeynmanGraph& g, int i) {
  if (i < 1) throw GraphError("forest order must be >= 1");
  std::vector<Forest> out;
  const int target_comps = g.components(g.all_edges()) + (i - 1);
  if (target_comps > g.num_vertices()) return out;

  const int m = g.num_edges();
  std::vector<std::pair<EdgeSet, int>> stack;  // (chosen mask, next edge)
  // Backtracking over edges; union-find prunes cyclic choices.  The output
  // is sorted afterwards so callers always see ascending bitmask order.
  struct Frame {
    EdgeSet mask;
    int next;
  };
  std::vector<Frame> work{{0, 0}};
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    if (f.next == m) {
      const int comps = g.num_vertices() - popcount(f.mask);
      if (comps == target_comps) out.push_back({f.mask, comps});
      continue;
    }
    // exclude edge f.next
    work.push_back({f.mask, f.next + 1});
    // include it when it joins two components of the current choice
    Dsu dsu(g.num_vertices());
    for (int e = 0; e < f.next; ++e)
      if (edge_in(f.mask, e)) dsu.unite(g.ends(e).first, g.ends(e).second);
    auto [a, b] = g.ends(f.next);
    if (dsu.find(a) != dsu.find(b))
      work.push_back({f.mask | (EdgeSet(1) << f.next), f.next + 1});
  }
  std::sort(out.begin(), out.end(),
            [](const Forest& x, const Forest& y) { return x.edges < y.edges; });
  return out;
}

Int spanning_tree_count_oracle(const FeynmanGraph& g) {
  const int n = g.num_vertices();
  if (n == 1) return 1;
  if (g.components(g.all_edges()) > 1) return 0;
  IntMat lap(n, IntVec(n, 0));
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    if (a == b) continue;
    lap[a][a] += 1;
    lap[b][b] += 1;
    lap[a][b] -= 1;
    lap[b][a] -= 1;
  }
  // Bareiss fraction-free elimination on the cofactor deleting row/col 0.
  const int d = n - 1;
  IntMat m(d, IntVec(d));
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) m[r][c] = lap[r + 1][c + 1];
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < d; ++k) {
    if (m[k][k] == 0) {
      int p = -1;
      for (int r = k + 1; r < d; ++r)
        if (m[r][k] != 0) {
          p = r;
          break;
        }
      if (p < 0) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int r = k + 1; r < d; ++r)
      for (int c = k + 1; c < d; ++c) {
        m[r][c] = m[k][k] * m[r][c] - m[r][k] * m[k][c];
        mpz_divexact(m[r][c].get_mpz_t(), m[r][c].get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  Int det = m[d - 1][d - 1] * sign;
  return det < 0 ? Int(-det) : det;
}

FeynmanGraph contract_edge(const FeynmanGraph& g, int e) {
  auto [a, b] = g.ends(e);
  if (a == b) throw GraphError("cannot contract self-loop " + g.edge_id(e));
  const int keep = std::min(a, b);
  const int drop = std::max(a, b);
  std::vector<std::string> verts;
  std::vector<std::string> ext;
  const bool merged_external = g.external(a) || g.external(b);
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == drop) continue;
    verts.push_back(g.vertex_id(v));
    if (v == keep ? merged_external : g.external(v)) ext.push_back(g.vertex_id(v));
  }
  auto remap = [&](int v) { return v == drop ? keep : v; };
  std::vector<EdgeSpec> edges;
  for (int f = 0; f < g.num_edges(); ++f) {
    if (f == e) continue;
    auto [x, y] = g.ends(f);
    edges.push_back({g.edge_id(f), g.vertex_id(remap(x)), g.vertex_id(remap(y)),
                     g.massive(f)});
  }
  return FeynmanGraph(std::move(verts), std::move(edges), std::move(ext));
}

FeynmanGraph delete_edge(const FeynmanGraph& g, int e) {
  std::vector<std::string> ext;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.external(v)) ext.push_back(g.vertex_id(v));
  std::vector<EdgeSpec> edges;
  for (int f = 0; f < g.num_edges(); ++f) {
    if (f == e) continue;
    auto [x, y] = g.ends(f);
    edges.push_back({g.edge_id(f), g.vertex_id(x), g.vertex_id(y), g.massive(f)});
  }
  return FeynmanGraph(g.vertex_ids(), std::move(edges), std::move(ext));
}

bool massive_path_exists(const FeynmanGraph& g, int v) {
  if (v < 0 || v >= g.num_vertices()) throw GraphError("unknown vertex index");
  std::vector<int> labels = component_labels(g, g.massive_edges());
  for (int w = 0; w < g.num_vertices(); ++w)
    if (g.external(w) && labels[w] == labels[v]) return true;
  return false;
}

}  // namespace symanzik
