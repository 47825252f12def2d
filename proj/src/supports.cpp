#include "symanzik/supports.hpp"

#include <algorithm>
#include <set>

namespace symanzik {

namespace {

ExponentVec complement_indicator(const FeynmanGraph& g, EdgeSet subset) {
  ExponentVec v(g.num_edges(), 0);
  for (int e = 0; e < g.num_edges(); ++e)
    if (!edge_in(subset, e)) v[e] = 1;
  return v;
}

std::vector<ExponentVec> sorted_unique(std::set<ExponentVec>&& s) {
  return {s.begin(), s.end()};
}

}  // namespace

std::vector<ExponentVec> u_support(const FeynmanGraph& g) {
  std::set<ExponentVec> out;
  for (const Forest& t : enumerate_forests(g, 1))
    out.insert(complement_indicator(g, t.edges));
  return sorted_unique(std::move(out));
}

ForestClass classify_2forest(const FeynmanGraph& g, EdgeSet f) {
  if (!g.acyclic(f) || g.components(f) != g.components(g.all_edges()) + 1)
    throw GraphError("edge set is not a 2-forest");
  const std::vector<int> labels = component_labels(g, f);

  ForestClass cls;
  // Momentous: the external vertices do not all live in one component.
  int first_label = -1;
  bool split = false;
  bool any_external = false;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!g.external(v)) continue;
    any_external = true;
    if (first_label < 0)
      first_label = labels[v];
    else if (labels[v] != first_label)
      split = true;
  }
  cls.momentous = any_external && split;

  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.ends(e);
    if (g.massive(e) && labels[a] != labels[b]) {
      cls.massive_truncation = true;
      break;
    }
  }
  return cls;
}

std::vector<ExponentVec> f0_support(const FeynmanGraph& g, const Degeneracy& d) {
  std::set<ExponentVec> out;
  for (const Forest& f : enumerate_forests(g, 2))
    if (classify_2forest(g, f.edges).momentous)
      out.insert(complement_indicator(g, f.edges));
  for (const ExponentVec& m : d.deleted) out.erase(m);
  return sorted_unique(std::move(out));
}

std::vector<ExponentVec> mass_term_support(const FeynmanGraph& g) {
  std::set<ExponentVec> out;
  const std::vector<Forest> trees = enumerate_forests(g, 1);
  for (const Forest& t : trees)
    for (int e = 0; e < g.num_edges(); ++e) {
      if (!g.massive(e)) continue;
      ExponentVec v = complement_indicator(g, t.edges);
      v[e] += 1;
      out.insert(std::move(v));
    }
  return sorted_unique(std::move(out));
}

GmSupport gm_support(const FeynmanGraph& g, const Degeneracy& d) {
  GmSupport s;
  s.u_part = u_support(g);

  std::set<ExponentVec> generic;
  for (ExponentVec& v : mass_term_support(g)) generic.insert(std::move(v));
  for (ExponentVec& v : f0_support(g)) generic.insert(std::move(v));

  std::set<ExponentVec> deleted;
  for (const ExponentVec& m : d.deleted) {
    if (static_cast<int>(m.size()) != g.num_edges())
      throw HypothesisError("deleted monomial has wrong length");
    if (!generic.count(m))
      throw HypothesisError("deleted monomial is not in the generic support");
    deleted.insert(m);
  }
  for (const ExponentVec& m : deleted) generic.erase(m);

  s.f_part = sorted_unique(std::move(generic));
  s.deleted = {deleted.begin(), deleted.end()};
  s.degenerate = !s.deleted.empty();
  s.hypothesis_ok = !s.f_part.empty() && !s.degenerate;
  return s;
}

}  // namespace symanzik
