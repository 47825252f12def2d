#include "symanzik/semigroup.hpp"

#include <algorithm>
#include <set>

#include "symanzik/lp.hpp"
#include "symanzik/matroid.hpp"
#include "symanzik/polytope.hpp"

namespace symanzik {

IntMat SupportMatrix::rows() const {
  IntMat m(dim(), IntVec(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c)
    for (int r = 0; r < dim(); ++r) m[r][c] = columns[c][r];
  return m;
}

SupportMatrix build_support_matrix(const GmSupport& s) {
  SupportMatrix a;
  if (s.u_part.empty() && s.f_part.empty())
    throw HypothesisError("empty support");
  a.num_edges = static_cast<int>(
      s.u_part.empty() ? s.f_part.front().size() : s.u_part.front().size());
  auto lift = [&](const ExponentVec& v) {
    ExponentVec c(a.num_edges + 1);
    c[0] = 1;
    std::copy(v.begin(), v.end(), c.begin() + 1);
    return c;
  };
  for (const ExponentVec& v : s.u_part) a.columns.push_back(lift(v));
  for (const ExponentVec& v : s.f_part) a.columns.push_back(lift(v));
  return a;
}

LatticeBasis lattice_basis(const SupportMatrix& a) {
  LatticeBasis l;
  l.form = hermite_normal_form(a.rows());
  l.ambient = l.form.rank == a.dim();
  if (l.ambient)
    for (int c = 0; c < l.form.rank; ++c)
      if (l.form.basis[l.form.pivot_rows[c]][c] != 1) {
        l.ambient = false;
        break;
      }
  return l;
}

bool lattice_contains(const LatticeBasis& l, const ExponentVec& v) {
  IntVec w(v.begin(), v.end());
  return in_column_lattice(l.form, w);
}

bool cone_contains(const SupportMatrix& a, const ExponentVec& v) {
  IntVec b(v.begin(), v.end());
  return lp_feasible(a.rows(), b);
}

namespace {

// Degree slices of NA, capped componentwise: slice(k) holds every sum of
// exactly k columns all of whose entries stay within the cap.
class SemigroupSlices {
 public:
  SemigroupSlices(const SupportMatrix& a, ExponentVec cap)
      : a_(a), cap_(std::move(cap)) {
    slices_.push_back({ExponentVec(a.dim(), 0)});
  }

  const std::set<ExponentVec>& slice(int k) {
    while (static_cast<int>(slices_.size()) <= k) {
      std::set<ExponentVec> next;
      for (const ExponentVec& s : slices_.back())
        for (const ExponentVec& col : a_.columns) {
          ExponentVec t(s.size());
          bool ok = true;
          for (std::size_t i = 0; i < s.size(); ++i) {
            t[i] = s[i] + col[i];
            if (t[i] > cap_[i]) {
              ok = false;
              break;
            }
          }
          if (ok) next.insert(std::move(t));
        }
      slices_.push_back(std::move(next));
    }
    return slices_[k];
  }

 private:
  const SupportMatrix& a_;
  ExponentVec cap_;
  std::vector<std::set<ExponentVec>> slices_;
};

ExponentVec column_maxima(const SupportMatrix& a) {
  ExponentVec mx(a.dim(), 0);
  for (const ExponentVec& col : a.columns)
    for (int i = 0; i < a.dim(); ++i) mx[i] = std::max(mx[i], col[i]);
  return mx;
}

}  // namespace

bool semigroup_contains(const SupportMatrix& a, const ExponentVec& v) {
  if (static_cast<int>(v.size()) != a.dim())
    throw GraphError("vector dimension mismatch");
  const int k = v[0];
  if (k < 0) return false;
  for (int x : v)
    if (x < 0) return false;
  SemigroupSlices slices(a, v);
  return slices.slice(k).count(v) > 0;
}

SaturationReport saturation_check(const SupportMatrix& a, int k_max) {
  if (k_max < 1) throw GraphError("k_max must be >= 1");
  SaturationReport rep;
  rep.k_max = k_max;

  const LatticeBasis lattice = lattice_basis(a);
  rep.lattice_ambient = lattice.ambient;
  const ConeFacets facets = cone_facets(a.columns);

  ExponentVec cap = column_maxima(a);
  for (int& x : cap) x *= k_max;
  cap[0] = k_max;
  SemigroupSlices slices(a, cap);

  std::set<ExponentVec> hole_set;
  rep.holes_by_degree.assign(k_max, {});
  ExponentVec w(a.dim());
  for (int k = 1; k <= k_max; ++k) {
    const std::set<ExponentVec>& in_na = slices.slice(k);
    std::vector<ExponentVec>& holes = rep.holes_by_degree[k - 1];
    w[0] = k;
    auto scan = [&](auto&& self, int coord) -> void {
      if (coord == a.dim()) {
        if (in_na.count(w)) return;  // in NA, not a hole
        ExponentVec v = w;
        if (!lattice_contains(lattice, v)) return;
        if (!facets_contain(facets, v)) return;
        holes.push_back(v);
        hole_set.insert(std::move(v));
        return;
      }
      const int hi = (cap[coord] / k_max) * k;
      for (int x = 0; x <= hi; ++x) {
        w[coord] = x;
        self(self, coord + 1);
      }
    };
    scan(scan, 1);
    std::sort(holes.begin(), holes.end());
  }

  // A hole is a Q_A generator iff no column-translate below it is a hole.
  for (const std::vector<ExponentVec>& holes : rep.holes_by_degree)
    for (const ExponentVec& h : holes) {
      bool generated = false;
      for (const ExponentVec& col : a.columns) {
        ExponentVec prev(h.size());
        bool nonneg = true;
        for (std::size_t i = 0; i < h.size(); ++i) {
          prev[i] = h[i] - col[i];
          if (prev[i] < 0) {
            nonneg = false;
            break;
          }
        }
        if (nonneg && hole_set.count(prev)) {
          generated = true;
          break;
        }
      }
      if (!generated) rep.qa_generators.push_back(h);
    }
  std::sort(rep.qa_generators.begin(), rep.qa_generators.end());

  rep.degree_one_clear = rep.holes_by_degree[0].empty();
  rep.saturated_up_to_kmax = hole_set.empty();
  rep.verdict = rep.saturated_up_to_kmax ? "unknown (saturated up to bound)"
                                         : "not saturated";
  return rep;
}

TheoremVerdicts check_theorem_conditions(const FeynmanGraph& g,
                                         const GmSupport& s) {
  TheoremVerdicts v;
  if (s.degenerate) {
    v.withheld = true;
    v.reason = "verdicts withheld: degenerate coefficients";
    return v;
  }

  v.massive_path = true;
  for (int vertex = 0; vertex < g.num_vertices(); ++vertex)
    if (!massive_path_exists(g, vertex)) {
      v.massive_path = false;
      break;
    }
  bool base_equality = false;
  try {
    base_equality = feynman_matroid(g).bases == two_forest_matroid(g).bases;
  } catch (const HypothesisError&) {
    base_equality = false;
  }
  v.all_two_forests = base_equality;
  v.criterion_mismatch = v.massive_path != base_equality;

  v.massless = g.massive_edges() == 0;

  if (v.all_two_forests) {
    v.saturated_known = true;
    v.reason = "saturated: every 2-forest contributes to the support";
  } else if (v.massless) {
    v.saturated_known = true;
    v.reason = "saturated: massless mass function";
  } else {
    v.reason = "no applicable theorem; bounded search only";
  }
  if (v.criterion_mismatch)
    v.reason += "; massive-path criterion disagrees with base-set equality";
  return v;
}

SaturationReport saturation_report(const FeynmanGraph& g, const GmSupport& s,
                                   int k_max) {
  const SupportMatrix a = build_support_matrix(s);
  SaturationReport rep = saturation_check(a, k_max);
  rep.degenerate = s.degenerate;
  rep.verdicts = check_theorem_conditions(g, s);

  if (rep.verdicts.saturated_known) {
    if (rep.saturated_up_to_kmax) {
      rep.verdict = "saturated";
    } else {
      rep.contradiction = true;
      rep.contradiction_notes.push_back(
          "theorem certifies saturation but the bounded search found holes");
    }
  }
  if (!rep.degenerate && !rep.degree_one_clear) {
    rep.contradiction = true;
    rep.contradiction_notes.push_back(
        "degree-1 holes in a generic-coefficient run");
  }

  for (const ExponentVec& gen : rep.qa_generators) {
    bool from_deleted = false;
    for (const ExponentVec& del : s.deleted) {
      ExponentVec diff(gen.size());
      diff[0] = gen[0] - 1;
      bool nonneg = diff[0] >= 0;
      for (std::size_t i = 1; i < gen.size() && nonneg; ++i) {
        diff[i] = gen[i] - del[i - 1];
        nonneg = diff[i] >= 0;
      }
      if (nonneg && semigroup_contains(a, diff)) {
        from_deleted = true;
        break;
      }
    }
    rep.qa_generator_from_deleted.push_back(from_deleted);
  }
  return rep;
}

bool degree_one_completeness(const std::vector<ExponentVec>& f_part) {
  if (f_part.empty()) return true;
  std::vector<Point> pts(f_part.begin(), f_part.end());
  std::vector<Point> lattice = dilation_lattice_points(pts, 1);
  std::set<Point> support(pts.begin(), pts.end());
  for (const Point& p : lattice)
    if (!support.count(p)) return false;
  return true;
}

std::size_t SaturationReport::total_holes() const {
  std::size_t n = 0;
  for (const auto& hs : holes_by_degree) n += hs.size();
  return n;
}

}  // namespace symanzik
