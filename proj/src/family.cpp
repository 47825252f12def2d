#include "symanzik/family.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

namespace symanzik {

FeynmanGraph make_graph(int num_vertices,
                        const std::vector<std::pair<int, int>>& ends,
                        EdgeSet massive, const std::vector<int>& external) {
  std::vector<std::string> verts;
  for (int v = 0; v < num_vertices; ++v) verts.push_back("v" + std::to_string(v));
  std::vector<EdgeSpec> edges;
  for (std::size_t e = 0; e < ends.size(); ++e)
    edges.push_back({"e" + std::to_string(e), verts[ends[e].first],
                     verts[ends[e].second], edge_in(massive, static_cast<int>(e))});
  std::vector<std::string> ext;
  for (int v : external) ext.push_back(verts[v]);
  return FeynmanGraph(std::move(verts), std::move(edges), std::move(ext));
}

FeynmanGraph make_banana(int num_edges, EdgeSet massive) {
  std::vector<std::pair<int, int>> ends(num_edges, {0, 1});
  return make_graph(2, ends, massive, {0, 1});
}

FeynmanGraph make_cycle(int num_vertices, EdgeSet massive,
                        const std::vector<int>& external) {
  std::vector<std::pair<int, int>> ends;
  for (int v = 0; v < num_vertices; ++v)
    ends.emplace_back(v, (v + 1) % num_vertices);
  return make_graph(num_vertices, ends, massive, external);
}

std::vector<FeynmanGraph> s1i_graph_shapes(int max_edges) {
  std::vector<FeynmanGraph> out;
  for (int nv = 2; nv <= max_edges; ++nv) {
    // candidate endpoint pairs in lexicographic order
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < nv; ++a)
      for (int b = a + 1; b < nv; ++b) slots.emplace_back(a, b);

    // multiplicities per slot, total between nv and max_edges (an s1I
    // graph on nv vertices is bridgeless and connected, so it has at
    // least nv edges)
    std::vector<int> mult(slots.size(), 0);
    auto emit = [&]() {
      std::vector<std::pair<int, int>> ends;
      for (std::size_t s = 0; s < slots.size(); ++s)
        for (int i = 0; i < mult[s]; ++i) ends.push_back(slots[s]);
      FeynmanGraph g = make_graph(nv, ends, 0, {});
      if (validate_s1i(g).ok) out.push_back(std::move(g));
    };
    auto rec = [&](auto&& self, std::size_t slot, int used) -> void {
      if (slot == slots.size()) {
        if (used >= nv) emit();
        return;
      }
      for (int m = 0; m + used <= max_edges; ++m) {
        mult[slot] = m;
        self(self, slot + 1, used + m);
      }
      mult[slot] = 0;
    };
    rec(rec, 0, 0);
  }
  return out;
}

std::vector<FeynmanGraph> family_instances(int max_edges) {
  std::vector<FeynmanGraph> out;
  for (const FeynmanGraph& shape : s1i_graph_shapes(max_edges)) {
    const int nv = shape.num_vertices();
    const int ne = shape.num_edges();
    std::vector<std::pair<int, int>> ends;
    for (int e = 0; e < ne; ++e) ends.push_back(shape.ends(e));
    for (EdgeSet massive = 0; massive < (EdgeSet(1) << ne); ++massive)
      for (unsigned ext = 0; ext < (1u << nv); ++ext) {
        if (__builtin_popcount(ext) < 2) continue;
        std::vector<int> external;
        for (int v = 0; v < nv; ++v)
          if ((ext >> v) & 1) external.push_back(v);
        out.push_back(make_graph(nv, ends, massive, external));
      }
  }
  return out;
}

int worker_count() {
  if (const char* env = std::getenv("SYMANZIK_WORKERS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for_index(std::size_t n, int workers,
                        const std::function<void(std::size_t)>& fn) {
  if (workers <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (int t = 0; t < workers; ++t) threads.emplace_back(work);
  for (std::thread& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace symanzik
