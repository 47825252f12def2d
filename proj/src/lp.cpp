#include "symanzik/lp.hpp"

#include <stdexcept>

namespace symanzik {

namespace {

// Dense tableau simplex.  The last column is the right-hand side;
// `basis[r]` is the variable basic in row r.  Bland's rule throughout, so
// termination is guaranteed.
struct Tableau {
  RatMat t;                // m rows x (n + 1)
  RatVec cost;             // reduced costs, length n
  Rat objective = 0;
  std::vector<int> basis;  // size m

  int rows() const { return static_cast<int>(t.size()); }
  int cols() const { return t.empty() ? 0 : static_cast<int>(t[0].size()) - 1; }

  void pivot(int pr, int pc) {
    const int n = cols();
    Rat inv = 1 / t[pr][pc];
    for (int c = 0; c <= n; ++c) t[pr][c] *= inv;
    for (int r = 0; r < rows(); ++r) {
      if (r == pr || t[r][pc] == 0) continue;
      Rat f = t[r][pc];
      for (int c = 0; c <= n; ++c) t[r][c] -= f * t[pr][c];
    }
    if (cost[pc] != 0) {
      Rat f = cost[pc];
      for (int c = 0; c < n; ++c) cost[c] -= f * t[pr][c];
      objective += f * t[pr][n];
    }
    basis[pr] = pc;
  }

  // returns false when unbounded
  bool run() {
    for (;;) {
      int enter = -1;
      for (int c = 0; c < cols(); ++c)
        if (cost[c] > 0) {
          enter = c;
          break;
        }
      if (enter < 0) return true;
      int leave = -1;
      Rat best;
      for (int r = 0; r < rows(); ++r) {
        if (t[r][enter] <= 0) continue;
        Rat ratio = t[r][cols()] / t[r][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis[r] < basis[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult lp_maximize(const RatMat& a, const RatVec& b, const RatVec& c) {
  const int m = static_cast<int>(a.size());
  const int n = m == 0 ? static_cast<int>(c.size()) : static_cast<int>(a[0].size());
  LpResult res;
  if (m == 0) {
    res.feasible = true;
    res.x.assign(n, 0);
    for (int j = 0; j < n; ++j)
      if (c[j] > 0) {
        res.bounded = false;
        break;
      }
    return res;
  }

  // Phase 1: artificial variables n..n+m-1, maximize -(sum of artificials).
  Tableau ph1;
  ph1.t.assign(m, RatVec(n + m + 1, 0));
  ph1.basis.resize(m);
  for (int r = 0; r < m; ++r) {
    const bool flip = b[r] < 0;
    for (int j = 0; j < n; ++j) ph1.t[r][j] = flip ? -a[r][j] : a[r][j];
    ph1.t[r][n + r] = 1;
    ph1.t[r][n + m] = flip ? -b[r] : b[r];
    ph1.basis[r] = n + r;
  }
  ph1.cost.assign(n + m, 0);
  ph1.objective = 0;
  for (int r = 0; r < m; ++r) {  // price out the basic artificials
    for (int j = 0; j < n; ++j) ph1.cost[j] += ph1.t[r][j];
    ph1.objective -= ph1.t[r][n + m];
  }
  if (!ph1.run())  // the phase-1 objective is bounded above by zero
    throw std::logic_error("phase-1 simplex reported unbounded");
  if (ph1.objective != 0) return res;  // infeasible

  // Drive zero-level artificials out of the basis where possible.
  for (int r = 0; r < m; ++r) {
    if (ph1.basis[r] < n) continue;
    for (int j = 0; j < n; ++j)
      if (ph1.t[r][j] != 0) {
        ph1.pivot(r, j);
        break;
      }
  }

  // Phase 2 on a clean tableau: structural columns only; rows still basic
  // in an artificial are redundant constraints and are dropped.
  Tableau ph2;
  for (int r = 0; r < m; ++r) {
    if (ph1.basis[r] >= n) continue;
    RatVec row(n + 1);
    for (int j = 0; j < n; ++j) row[j] = ph1.t[r][j];
    row[n] = ph1.t[r][n + m];
    ph2.t.push_back(std::move(row));
    ph2.basis.push_back(ph1.basis[r]);
  }
  ph2.cost.assign(n, 0);
  for (int j = 0; j < n; ++j) ph2.cost[j] = c[j];
  ph2.objective = 0;
  for (int r = 0; r < ph2.rows(); ++r) {
    Rat f = ph2.cost[ph2.basis[r]];
    if (f == 0) continue;
    for (int j = 0; j < n; ++j) ph2.cost[j] -= f * ph2.t[r][j];
    ph2.objective += f * ph2.t[r][n];
  }
  if (!ph2.run()) {
    res.feasible = true;
    res.bounded = false;
    return res;
  }

  res.feasible = true;
  res.objective = ph2.objective;
  res.x.assign(n, 0);
  for (int r = 0; r < ph2.rows(); ++r) res.x[ph2.basis[r]] = ph2.t[r][n];
  return res;
}

bool lp_feasible(const RatMat& a, const RatVec& b) {
  if (a.empty()) {
    for (const Rat& x : b)
      if (x != 0) return false;
    return true;
  }
  RatVec c(a[0].size(), 0);
  return lp_maximize(a, b, c).feasible;
}

bool lp_feasible(const IntMat& a, const IntVec& b) {
  RatMat ra(a.size());
  for (std::size_t r = 0; r < a.size(); ++r)
    ra[r].assign(a[r].begin(), a[r].end());
  RatVec rb(b.begin(), b.end());
  return lp_feasible(ra, rb);
}

}  // namespace symanzik
