#pragma once

#include <vector>

#include "symanzik/arith.hpp"

namespace symanzik {

using Point = std::vector<int>;  // integer point, exponent-vector scale

// Halfspace description of the cone spanned by integer generators:
//   v in cone  <=>  e.v = 0 for all equation rows, f.v >= 0 for all
//                   inequality rows.
// Equations cut out the linear span; inequalities are the facet normals
// within it, computed by the double description method.
struct ConeFacets {
  IntMat equations;
  IntMat inequalities;
};

ConeFacets cone_facets(const std::vector<Point>& generators);

bool facets_contain(const ConeFacets& f, const Point& v);

// Integer points of the dilation k * conv(pts), ambient lattice, sorted.
std::vector<Point> dilation_lattice_points(const std::vector<Point>& pts, int k);

// Integer decomposition property up to k_max:
//   (kP n Z^d) == ((k-1)P n Z^d) + (P n Z^d) for 2 <= k <= k_max.
bool idp_check(const std::vector<Point>& pts, int k_max);

// Lattice-point additivity of a Minkowski sum:
//   (P n Z^d) + (Q n Z^d) == (P + Q) n Z^d.
bool minkowski_lattice_check(const std::vector<Point>& p,
                             const std::vector<Point>& q);

// Exact LP test: vertices i and j of conv(verts) span an edge of the
// polytope iff their midpoint admits no convex representation that puts
// weight on any other vertex.  All inputs must be vertices (no point a
// convex combination of the others), which holds for matroid polytopes.
bool polytope_vertices_adjacent(const std::vector<Point>& verts, int i, int j);

}  // namespace symanzik
