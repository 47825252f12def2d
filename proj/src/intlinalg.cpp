#include "symanzik/intlinalg.hpp"

#include <utility>

namespace symanzik {

namespace {

// Shared column-reduction engine.  Applies the same unimodular column
// operations to `transform` when it is non-null (kernel extraction).
HermiteForm reduce_columns(IntMat work, IntMat* transform) {
  const int rows = static_cast<int>(work.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(work[0].size());

  auto col_combine = [&](IntMat& m, int rlo, int j, int k, const Int& x,
                         const Int& y, const Int& u, const Int& v) {
    // (col_j, col_k) <- (x col_j + y col_k, u col_j + v col_k)
    const int nr = static_cast<int>(m.size());
    for (int r = rlo; r < nr; ++r) {
      Int nj = x * m[r][j] + y * m[r][k];
      Int nk = u * m[r][j] + v * m[r][k];
      m[r][j] = std::move(nj);
      m[r][k] = std::move(nk);
    }
  };
  auto col_axpy = [&](IntMat& m, int rlo, int j, int k, const Int& t) {
    // col_j -= t col_k
    const int nr = static_cast<int>(m.size());
    for (int r = rlo; r < nr; ++r) m[r][j] -= t * m[r][k];
  };
  auto col_swap = [&](IntMat& m, int j, int k) {
    const int nr = static_cast<int>(m.size());
    for (int r = 0; r < nr; ++r) std::swap(m[r][j], m[r][k]);
  };
  auto col_negate = [&](IntMat& m, int j) {
    const int nr = static_cast<int>(m.size());
    for (int r = 0; r < nr; ++r) m[r][j] = -m[r][j];
  };

  HermiteForm h;
  int next = 0;  // next pivot column
  for (int row = 0; row < rows && next < cols; ++row) {
    int found = -1;
    for (int j = next; j < cols; ++j)
      if (work[row][j] != 0) {
        found = j;
        break;
      }
    if (found < 0) continue;
    if (found != next) {
      col_swap(work, next, found);
      if (transform) col_swap(*transform, next, found);
    }
    for (int j = next + 1; j < cols; ++j) {
      if (work[row][j] == 0) continue;
      Int g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                 work[row][next].get_mpz_t(), work[row][j].get_mpz_t());
      Int u = -work[row][j] / g;
      Int v = work[row][next] / g;
      // det of [[x, u], [y, v]] is 1, so the operation is unimodular.
      col_combine(work, 0, next, j, x, y, u, v);
      if (transform) col_combine(*transform, 0, next, j, x, y, u, v);
    }
    if (work[row][next] < 0) {
      col_negate(work, next);
      if (transform) col_negate(*transform, next);
    }
    for (int j = 0; j < next; ++j) {
      Int t;
      mpz_fdiv_q(t.get_mpz_t(), work[row][j].get_mpz_t(),
                 work[row][next].get_mpz_t());
      if (t != 0) {
        col_axpy(work, 0, j, next, t);
        if (transform) col_axpy(*transform, 0, j, next, t);
      }
    }
    h.pivot_rows.push_back(row);
    ++next;
  }
  h.rank = next;
  h.basis.assign(rows, IntVec(next, 0));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < next; ++c) h.basis[r][c] = work[r][c];
  if (transform) {
    // keep only the columns spanning the kernel
    IntMat k(transform->size(), IntVec(cols - next));
    for (std::size_t r = 0; r < transform->size(); ++r)
      for (int c = next; c < cols; ++c) k[r][c - next] = (*transform)[r][c];
    *transform = std::move(k);
  }
  return h;
}

}  // namespace

HermiteForm hermite_normal_form(const IntMat& a) {
  return reduce_columns(a, nullptr);
}

bool in_column_lattice(const HermiteForm& h, const IntVec& v) {
  if (h.basis.empty()) {
    for (const Int& x : v)
      if (x != 0) return false;
    return true;
  }
  IntVec r = v;
  const int rows = static_cast<int>(h.basis.size());
  for (int c = 0; c < h.rank; ++c) {
    const int pr = h.pivot_rows[c];
    const Int& piv = h.basis[pr][c];
    if (!mpz_divisible_p(r[pr].get_mpz_t(), piv.get_mpz_t())) return false;
    Int q = r[pr] / piv;
    if (q != 0)
      for (int row = 0; row < rows; ++row) r[row] -= q * h.basis[row][c];
  }
  for (const Int& x : r)
    if (x != 0) return false;
  return true;
}

IntMat integer_kernel(const IntMat& a) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  IntMat transform(cols, IntVec(cols, 0));
  for (int i = 0; i < cols; ++i) transform[i][i] = 1;
  reduce_columns(a, &transform);
  // canonicalize the kernel basis itself
  HermiteForm k = hermite_normal_form(transform);
  return k.basis;
}

int matrix_rank(const IntMat& a) { return hermite_normal_form(a).rank; }

Int determinant(IntMat m) {
  const int d = static_cast<int>(m.size());
  if (d == 0) return 1;
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
  return sign > 0 ? m[d - 1][d - 1] : Int(-m[d - 1][d - 1]);
}

}  // namespace symanzik
