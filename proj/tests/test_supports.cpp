#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "symanzik/family.hpp"
#include "symanzik/supports.hpp"

using namespace symanzik;

namespace {
using Vecs = std::vector<ExponentVec>;
}

TEST_CASE("u support: bubble, sunset, triangle") {
  CHECK(u_support(make_banana(2, 0)) == Vecs{{0, 1}, {1, 0}});
  CHECK(u_support(make_banana(3, 0)) == Vecs{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(u_support(make_cycle(3, 0, {0, 1, 2})) ==
        Vecs{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
}

TEST_CASE("2-forest classification") {
  const FeynmanGraph bubble = make_banana(2, 0b01);
  const ForestClass empty_forest = classify_2forest(bubble, 0);
  CHECK(empty_forest.momentous);           // both vertices external
  CHECK(empty_forest.massive_truncation);  // e0 is massive and links them
  CHECK_FALSE(classify_2forest(make_banana(2, 0), 0).massive_truncation);
  CHECK_THROWS_AS(classify_2forest(bubble, 0b01), GraphError);  // a tree

  // single external vertex: every 2-forest is momentum-free
  const FeynmanGraph single = make_cycle(3, 0, {0});
  for (const Forest& f : enumerate_forests(single, 2))
    CHECK_FALSE(classify_2forest(single, f.edges).momentous);

  // 4-cycle with two adjacent externals, massless: brute-force the
  // external-containment criterion
  const FeynmanGraph cyc = make_cycle(4, 0, {0, 1});
  for (const Forest& f : enumerate_forests(cyc, 2)) {
    const std::vector<int> labels = component_labels(cyc, f.edges);
    const bool split = labels[0] != labels[1];
    CHECK(classify_2forest(cyc, f.edges).momentous == split);
  }
}

TEST_CASE("f0 support") {
  CHECK(f0_support(make_banana(2, 0)) == Vecs{{1, 1}});
  CHECK(f0_support(make_cycle(3, 0, {0})).empty());
  // all-external triangle: all three 2-forests are momentous
  CHECK(f0_support(make_cycle(3, 0, {0, 1, 2})) ==
        Vecs{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
}

TEST_CASE("mass term support") {
  CHECK(mass_term_support(make_banana(2, 0b11)) ==
        Vecs{{0, 2}, {1, 1}, {2, 0}});
  CHECK(mass_term_support(make_banana(2, 0)).empty());

  // massive sunset: six square-bearing vectors plus the all-ones vector
  const Vecs sunset = mass_term_support(make_banana(3, 0b111));
  CHECK(sunset.size() == 7);
  CHECK(std::count(sunset.begin(), sunset.end(), ExponentVec{1, 1, 1}) == 1);
  int with_square = 0;
  for (const ExponentVec& v : sunset)
    if (*std::max_element(v.begin(), v.end()) == 2) ++with_square;
  CHECK(with_square == 6);
}

TEST_CASE("gm support and degeneracies") {
  // massive bubble with the x1 x2 coefficient cancelled
  const FeynmanGraph bubble = make_banana(2, 0b11);
  const GmSupport gm = gm_support(bubble, Degeneracy{{{1, 1}}});
  CHECK(gm.u_part == Vecs{{0, 1}, {1, 0}});
  CHECK(gm.f_part == Vecs{{0, 2}, {2, 0}});
  CHECK(gm.degenerate);
  CHECK_FALSE(gm.hypothesis_ok);

  const GmSupport generic = gm_support(bubble);
  CHECK(generic.hypothesis_ok);
  CHECK(generic.f_part == Vecs{{0, 2}, {1, 1}, {2, 0}});

  CHECK_THROWS_AS(gm_support(bubble, Degeneracy{{{9, 9}}}), HypothesisError);
  CHECK_THROWS_AS(gm_support(bubble, Degeneracy{{{1, 0}}}), HypothesisError);

  // massless triangle: u and f parts are disjoint by degree
  const GmSupport tri = gm_support(make_cycle(3, 0, {0, 1, 2}));
  std::set<ExponentVec> u(tri.u_part.begin(), tri.u_part.end());
  for (const ExponentVec& v : tri.f_part) CHECK(u.count(v) == 0);

  // massive sunset with the a0 term cancelled: 9 support vectors
  const GmSupport s = gm_support(make_banana(3, 0b111), Degeneracy{{{1, 1, 1}}});
  CHECK(s.u_part.size() + s.f_part.size() == 9);
}

TEST_CASE("support shape invariants over the small family") {
  for (const FeynmanGraph& shape : s1i_graph_shapes(4)) {
    // externals: all vertices; masses: alternating pattern
    std::vector<int> ext(shape.num_vertices());
    for (int v = 0; v < shape.num_vertices(); ++v) ext[v] = v;
    std::vector<std::pair<int, int>> ends;
    for (int e = 0; e < shape.num_edges(); ++e) ends.push_back(shape.ends(e));
    const FeynmanGraph g =
        make_graph(shape.num_vertices(), ends, 0b0101, ext);

    const GmSupport gm = gm_support(g);
    const int usum = g.num_edges() - (g.num_vertices() - 1);
    for (const ExponentVec& v : gm.u_part) {
      int s = 0;
      for (int x : v) s += x;
      CHECK(s == usum);
    }
    for (const ExponentVec& v : gm.f_part) {
      int s = 0, twos = 0;
      for (int e = 0; e < g.num_edges(); ++e) {
        s += v[e];
        if (v[e] == 2) {
          ++twos;
          CHECK(g.massive(e));
        }
      }
      CHECK(s == usum + 1);
      CHECK(twos <= 1);
    }
    CHECK_FALSE(f0_support(g).empty());  // at least two externals
  }
}
