#include "symanzik/matroid.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "symanzik/polytope.hpp"

namespace symanzik {

namespace {

std::vector<EdgeSet> forest_masks(const FeynmanGraph& g, int i) {
  std::vector<EdgeSet> out;
  for (const Forest& f : enumerate_forests(g, i)) out.push_back(f.edges);
  return out;
}

}  // namespace

Matroid make_matroid(int ground_size, std::vector<EdgeSet> bases) {
  std::sort(bases.begin(), bases.end());
  bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
  if (bases.empty()) throw GraphError("matroid needs at least one basis");
  const int rank = popcount(bases.front());
  for (EdgeSet b : bases)
    if (popcount(b) != rank)
      throw GraphError("bases of unequal cardinality");
  return Matroid{ground_size, std::move(bases), rank};
}

Matroid graphic_matroid(const FeynmanGraph& g) {
  return make_matroid(g.num_edges(), forest_masks(g, 1));
}

Matroid cographic_matroid(const FeynmanGraph& g) {
  return dual(graphic_matroid(g));
}

Matroid two_forest_matroid(const FeynmanGraph& g) {
  return make_matroid(g.num_edges(), forest_masks(g, 2));
}

Matroid dual(const Matroid& m) {
  const EdgeSet all = m.ground_size >= 32 ? ~EdgeSet(0)
                                          : (EdgeSet(1) << m.ground_size) - 1;
  std::vector<EdgeSet> bases;
  for (EdgeSet b : m.bases) bases.push_back(all & ~b);
  return make_matroid(m.ground_size, std::move(bases));
}

Matroid momentous_matroid(const FeynmanGraph& g) {
  std::vector<EdgeSet> bases;
  for (EdgeSet f : forest_masks(g, 2))
    if (classify_2forest(g, f).momentous) bases.push_back(f);
  if (bases.empty()) throw HypothesisError("no momentous 2-forest");
  return make_matroid(g.num_edges(), std::move(bases));
}

Matroid massive_truncation_matroid(const FeynmanGraph& g) {
  std::vector<EdgeSet> bases;
  for (EdgeSet f : forest_masks(g, 2))
    if (classify_2forest(g, f).massive_truncation) bases.push_back(f);
  if (bases.empty()) throw HypothesisError("no massive truncations");
  return make_matroid(g.num_edges(), std::move(bases));
}

Matroid feynman_matroid(const FeynmanGraph& g) {
  std::vector<EdgeSet> bases;
  for (EdgeSet f : forest_masks(g, 2)) {
    const ForestClass cls = classify_2forest(g, f);
    if (cls.momentous || cls.massive_truncation) bases.push_back(f);
  }
  if (bases.empty())
    throw HypothesisError("no 2-forest contributes to the support");
  return make_matroid(g.num_edges(), std::move(bases));
}

Matroid quotient_by_subset(const Matroid& m, EdgeSet eprime) {
  if (rank_of(m, eprime) == 0)
    throw HypothesisError("trivial quotient: subset has rank zero");
  std::set<EdgeSet> bases;
  for (EdgeSet b : m.bases)
    for (int e = 0; e < m.ground_size; ++e)
      if (edge_in(b, e) && edge_in(eprime, e))
        bases.insert(b & ~(EdgeSet(1) << e));
  Matroid q = make_matroid(m.ground_size, {bases.begin(), bases.end()});
  if (q.rank != m.rank - 1)
    throw MathCheckError("quotient by subset did not drop the rank by one");
  return q;
}

ExchangeCheck check_exchange_axiom(const Matroid& m) {
  ExchangeCheck out;
  out.weak_ok = true;
  out.strong_ok = true;
  std::set<EdgeSet> lookup(m.bases.begin(), m.bases.end());
  for (EdgeSet b : m.bases)
    for (EdgeSet b2 : m.bases)
      for (int e = 0; e < m.ground_size; ++e) {
        if (!edge_in(b, e)) continue;
        const EdgeSet removed = b & ~(EdgeSet(1) << e);
        bool weak = false;
        bool strong = false;
        for (int f = 0; f < m.ground_size; ++f) {
          if (!edge_in(b2, f)) continue;
          if (!lookup.count(removed | (EdgeSet(1) << f))) continue;
          weak = true;
          const EdgeSet other = (b2 & ~(EdgeSet(1) << f)) | (EdgeSet(1) << e);
          if (lookup.count(other)) {
            strong = true;
            break;
          }
        }
        if (!weak && out.weak_ok) {
          out.weak_ok = false;
          out.weak_counterexample = ExchangeCounterexample{b, b2, e};
        }
        if (!strong && out.strong_ok) {
          out.strong_ok = false;
          out.strong_counterexample = ExchangeCounterexample{b, b2, e};
        }
      }
  return out;
}

int rank_of(const Matroid& m, EdgeSet s) {
  int best = 0;
  for (EdgeSet b : m.bases) best = std::max(best, popcount(b & s));
  return best;
}

EdgeSet span_of(const Matroid& m, EdgeSet s) {
  const int r = rank_of(m, s);
  EdgeSet out = 0;
  for (int e = 0; e < m.ground_size; ++e)
    if (rank_of(m, s | (EdgeSet(1) << e)) == r) out |= EdgeSet(1) << e;
  return out;
}

std::vector<EdgeSet> circuits(const Matroid& m) {
  auto independent = [&](EdgeSet s) { return rank_of(m, s) == popcount(s); };
  std::vector<EdgeSet> out;
  const EdgeSet limit = EdgeSet(1) << m.ground_size;
  for (EdgeSet s = 1; s < limit; ++s) {
    if (independent(s)) continue;
    bool minimal = true;
    for (int e = 0; e < m.ground_size && minimal; ++e)
      if (edge_in(s, e) && !independent(s & ~(EdgeSet(1) << e))) minimal = false;
    if (minimal) out.push_back(s);
  }
  return out;
}

QuotientWitness is_quotient(const Matroid& mprime, const Matroid& m) {
  if (mprime.ground_size != m.ground_size)
    throw GraphError("quotient check needs a common ground set");
  QuotientWitness w;
  w.holds = true;
  const std::vector<EdgeSet> prime_circuits = circuits(mprime);
  for (EdgeSet c : circuits(m)) {
    CircuitCover cover;
    cover.circuit = c;
    EdgeSet covered = 0;
    for (EdgeSet pc : prime_circuits)
      if ((pc & ~c) == 0) {
        cover.covering.push_back(pc);
        covered |= pc;
      }
    cover.covered = covered == c;
    cover.uncovered = c & ~covered;
    if (!cover.covered) w.holds = false;
    w.covers.push_back(std::move(cover));
  }
  return w;
}

ExponentVec basis_indicator(int ground_size, EdgeSet basis) {
  ExponentVec v(ground_size, 0);
  for (int e = 0; e < ground_size; ++e)
    if (edge_in(basis, e)) v[e] = 1;
  return v;
}

PolytopeEdgeReport matroid_polytope_edge_directions(const Matroid& m) {
  PolytopeEdgeReport rep;
  rep.ok = true;
  std::vector<Point> verts;
  for (EdgeSet b : m.bases) verts.push_back(basis_indicator(m.ground_size, b));

  // Midpoint-collision certificate: if v_i + v_j equals the sum of a
  // different vertex pair, the midpoint has a representation avoiding both
  // i and j, so the pair cannot be an edge.  Distinct pairs with equal
  // sums are automatically disjoint (vertices are distinct 0/1 vectors).
  std::map<Point, std::vector<std::pair<int, int>>> pair_sums;
  for (std::size_t i = 0; i < verts.size(); ++i)
    for (std::size_t j = i + 1; j < verts.size(); ++j) {
      Point s(verts[i].size());
      for (std::size_t c = 0; c < s.size(); ++c) s[c] = verts[i][c] + verts[j][c];
      pair_sums[std::move(s)].emplace_back(static_cast<int>(i),
                                           static_cast<int>(j));
    }

  for (const auto& [sum, pairs] : pair_sums)
    for (auto [i, j] : pairs) {
      if (pairs.size() > 1) continue;  // non-edge by the certificate
      if (!polytope_vertices_adjacent(verts, i, j)) continue;
      rep.edges.emplace_back(m.bases[i], m.bases[j]);
      if (popcount(m.bases[i] ^ m.bases[j]) != 2) rep.ok = false;
    }
  std::sort(rep.edges.begin(), rep.edges.end());
  return rep;
}

}  // namespace symanzik
