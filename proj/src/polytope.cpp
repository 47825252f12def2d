#include "symanzik/polytope.hpp"

#include <algorithm>
#include <bitset>
#include <cassert>
#include <cstdint>
#include <set>
#include <stdexcept>

#include "symanzik/intlinalg.hpp"
#include "symanzik/lp.hpp"

namespace symanzik {

namespace {

// Extreme rays of the pointed cone { z : G z >= 0 }, G of full column
// rank.  Incremental double description with the combinatorial adjacency
// test; tight constraint sets are tracked as fixed-width bitsets.
constexpr int kMaxConstraints = 128;
using TightSet = std::bitset<kMaxConstraints>;

IntMat dd_extreme_rays(const IntMat& g) {
  const int n = static_cast<int>(g.size());
  const int r = n == 0 ? 0 : static_cast<int>(g[0].size());
  if (r == 0) return {};
  if (n > kMaxConstraints)
    throw std::runtime_error("cone facet enumeration limited to " +
                             std::to_string(kMaxConstraints) + " generators");

  // Greedily pick r independent rows to form the starting simplicial cone.
  std::vector<int> order;
  IntMat picked;
  for (int i = 0; i < n && static_cast<int>(order.size()) < r; ++i) {
    picked.push_back(g[i]);
    if (matrix_rank(picked) == static_cast<int>(picked.size()))
      order.push_back(i);
    else
      picked.pop_back();
  }
  assert(static_cast<int>(order.size()) == r);
  std::vector<char> used(n, 0);
  for (int i : order) used[i] = 1;
  for (int i = 0; i < n; ++i)
    if (!used[i]) order.push_back(i);

  // Starting rays: columns of the adjugate of the picked rows, oriented so
  // that B ray_j = |det B| e_j.
  IntMat b(r, IntVec(r));
  for (int i = 0; i < r; ++i) b[i] = g[order[i]];
  const Int det = determinant(b);
  assert(det != 0);
  const int sgn = det > 0 ? 1 : -1;

  struct Ray {
    IntVec z;
    TightSet tight;  // over positions in `order`
  };
  std::vector<Ray> rays;
  for (int j = 0; j < r; ++j) {
    IntVec z(r);
    for (int i = 0; i < r; ++i) {
      // cofactor expansion: adj[i][j] = (-1)^{i+j} det(minor(b, j, i))
      IntMat minor(r - 1, IntVec(r - 1));
      for (int rr = 0, mr = 0; rr < r; ++rr) {
        if (rr == j) continue;
        for (int cc = 0, mc = 0; cc < r; ++cc) {
          if (cc == i) continue;
          minor[mr][mc++] = b[rr][cc];
        }
        ++mr;
      }
      Int cof = determinant(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      z[i] = sgn > 0 ? cof : Int(-cof);
    }
    divide_by_content(z);
    TightSet tight;
    for (int i = 0; i < r; ++i)
      if (i != j) tight.set(i);
    rays.push_back({std::move(z), tight});
  }

  for (int step = r; step < n; ++step) {
    const IntVec& row = g[order[step]];
    std::vector<Int> val(rays.size());
    for (std::size_t k = 0; k < rays.size(); ++k) val[k] = dot(row, rays[k].z);

    std::vector<Ray> next;
    for (std::size_t k = 0; k < rays.size(); ++k)
      if (val[k] >= 0) {
        Ray kept = rays[k];
        if (val[k] == 0) kept.tight.set(step);
        next.push_back(std::move(kept));
      }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (val[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (val[q] >= 0) continue;
        const TightSet common = rays[p].tight & rays[q].tight;
        bool adjacent = true;
        for (std::size_t w = 0; w < rays.size(); ++w) {
          if (w == p || w == q) continue;
          if ((common & ~rays[w].tight).none()) {
            adjacent = false;
            break;
          }
        }
        if (!adjacent) continue;
        IntVec z(r);
        for (int i = 0; i < r; ++i)
          z[i] = val[p] * rays[q].z[i] - val[q] * rays[p].z[i];
        divide_by_content(z);
        Ray fresh{std::move(z), common};
        fresh.tight.set(step);
        next.push_back(std::move(fresh));
      }
    }
    rays = std::move(next);
  }

  IntMat out;
  for (Ray& ray : rays) out.push_back(std::move(ray.z));
  std::sort(out.begin(), out.end());
  return out;
}

IntMat rows_from_points(const std::vector<Point>& pts) {
  IntMat rows(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    rows[i].assign(pts[i].begin(), pts[i].end());
  return rows;
}

}  // namespace

ConeFacets cone_facets(const std::vector<Point>& generators) {
  ConeFacets out;
  const int d = generators.empty() ? 0 : static_cast<int>(generators[0].size());
  // duplicate generators are redundant constraints on the dual side
  std::vector<Point> unique_gens = generators;
  std::sort(unique_gens.begin(), unique_gens.end());
  unique_gens.erase(std::unique(unique_gens.begin(), unique_gens.end()),
                    unique_gens.end());
  const IntMat gen_rows = rows_from_points(unique_gens);  // n x d

  // Equations: basis of the left kernel { y : y . a_i = 0 for all i }.
  IntMat left = integer_kernel(gen_rows);  // d x (d - rank), columns
  for (const IntVec& col : transpose(left)) out.equations.push_back(col);
  if (d == 0) return out;

  // Basis K of the linear span, as the kernel of the equation rows.
  IntMat span_basis;  // d x r
  if (out.equations.empty()) {
    span_basis.assign(d, IntVec(d, 0));
    for (int i = 0; i < d; ++i) span_basis[i][i] = 1;
  } else {
    span_basis = integer_kernel(out.equations);
  }
  const int r = span_basis.empty() ? 0 : static_cast<int>(span_basis[0].size());
  if (r == 0) return out;

  // Inequality system in span coordinates: one row K^T a_i per generator.
  IntMat g(gen_rows.size(), IntVec(r));
  for (std::size_t i = 0; i < gen_rows.size(); ++i)
    for (int c = 0; c < r; ++c) {
      Int s = 0;
      for (int row = 0; row < d; ++row) s += span_basis[row][c] * gen_rows[i][row];
      g[i][c] = std::move(s);
    }

  for (const IntVec& z : dd_extreme_rays(g)) {
    IntVec y(d, 0);
    for (int row = 0; row < d; ++row)
      for (int c = 0; c < r; ++c) y[row] += span_basis[row][c] * z[c];
    divide_by_content(y);
    out.inequalities.push_back(std::move(y));
  }
  std::sort(out.inequalities.begin(), out.inequalities.end());
  return out;
}

bool facets_contain(const ConeFacets& f, const Point& v) {
  for (const IntVec& e : f.equations) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += e[i] * v[i];
    if (s != 0) return false;
  }
  for (const IntVec& q : f.inequalities) {
    Int s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += q[i] * v[i];
    if (s < 0) return false;
  }
  return true;
}

std::vector<Point> dilation_lattice_points(const std::vector<Point>& pts, int k) {
  std::vector<Point> out;
  if (pts.empty() || k < 0) return out;
  const int d = static_cast<int>(pts[0].size());

  std::vector<Point> lifted;
  for (const Point& p : pts) {
    Point q(d + 1);
    q[0] = 1;
    std::copy(p.begin(), p.end(), q.begin() + 1);
    lifted.push_back(std::move(q));
  }
  const ConeFacets facets = cone_facets(lifted);

  std::vector<int> lo(d), hi(d);
  for (int c = 0; c < d; ++c) {
    int mn = pts[0][c], mx = pts[0][c];
    for (const Point& p : pts) {
      mn = std::min(mn, p[c]);
      mx = std::max(mx, p[c]);
    }
    lo[c] = mn * k;
    hi[c] = mx * k;
  }

  Point w(d + 1);
  w[0] = k;
  auto scan = [&](auto&& self, int c) -> void {
    if (c == d) {
      if (facets_contain(facets, w)) out.emplace_back(w.begin() + 1, w.end());
      return;
    }
    for (int x = lo[c]; x <= hi[c]; ++x) {
      w[c + 1] = x;
      self(self, c + 1);
    }
  };
  scan(scan, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool idp_check(const std::vector<Point>& pts, int k_max) {
  if (pts.empty()) return true;
  const std::vector<Point> base = dilation_lattice_points(pts, 1);
  std::vector<Point> prev = base;
  for (int k = 2; k <= k_max; ++k) {
    std::set<Point> sums;
    for (const Point& a : prev)
      for (const Point& b : base) {
        Point s(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
        sums.insert(std::move(s));
      }
    std::vector<Point> dil = dilation_lattice_points(pts, k);
    if (!std::equal(dil.begin(), dil.end(), sums.begin(), sums.end()) ||
        dil.size() != sums.size())
      return false;
    prev = std::move(dil);
  }
  return true;
}

bool minkowski_lattice_check(const std::vector<Point>& p,
                             const std::vector<Point>& q) {
  if (p.empty() || q.empty()) return true;
  std::set<Point> sum_set;
  for (const Point& a : p)
    for (const Point& b : q) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      sum_set.insert(std::move(s));
    }
  const std::vector<Point> sum_gens(sum_set.begin(), sum_set.end());
  std::set<Point> lhs;
  for (const Point& a : dilation_lattice_points(p, 1))
    for (const Point& b : dilation_lattice_points(q, 1)) {
      Point s(a.size());
      for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
      lhs.insert(std::move(s));
    }
  std::vector<Point> rhs = dilation_lattice_points(sum_gens, 1);
  return rhs.size() == lhs.size() &&
         std::equal(rhs.begin(), rhs.end(), lhs.begin());
}

bool polytope_vertices_adjacent(const std::vector<Point>& verts, int i, int j) {
  const int d = static_cast<int>(verts[0].size());
  const int n = static_cast<int>(verts.size());
  RatMat a(d + 1, RatVec(n));
  RatVec b(d + 1);
  for (int row = 0; row < d; ++row) {
    for (int w = 0; w < n; ++w) a[row][w] = verts[w][row];
    b[row] = verts[i][row] + verts[j][row];
  }
  for (int w = 0; w < n; ++w) a[d][w] = 1;
  b[d] = 2;
  RatVec c(n, 1);
  c[i] = 0;
  c[j] = 0;
  LpResult res = lp_maximize(a, b, c);
  if (!res.feasible || !res.bounded)
    throw std::logic_error("midpoint representation LP must be solvable");
  return res.objective == 0;
}

}  // namespace symanzik
