#pragma once

#include <gmpxx.h>

#include <vector>

namespace symanzik {

// All arithmetic in the project is exact: arbitrary-precision integers and
// rationals.  Floating point is not used anywhere.
using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using IntMat = std::vector<IntVec>;  // row-major, mat[row][col]

inline IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), IntVec(a.size()));
  for (std::size_t r = 0; r < a.size(); ++r)
    for (std::size_t c = 0; c < a[r].size(); ++c) t[c][r] = a[r][c];
  return t;
}

inline Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// gcd of the entries, nonnegative; 0 for the zero vector.
inline Int vec_content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

inline void divide_by_content(IntVec& v) {
  Int g = vec_content(v);
  if (g > 1)
    for (Int& x : v) x /= g;
}

}  // namespace symanzik
