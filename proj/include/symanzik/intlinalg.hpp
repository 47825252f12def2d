#pragma once

#include "symanzik/arith.hpp"

namespace symanzik {

// Column-style Hermite normal form of the lattice spanned by the columns
// of the input.  Canonical: pivot rows strictly increase, pivots positive,
// entries left of a pivot reduced into [0, pivot), zeros right of it.
struct HermiteForm {
  IntMat basis;                 // d x rank, columns are the lattice basis
  std::vector<int> pivot_rows;  // one per basis column, strictly increasing
  int rank = 0;
};

HermiteForm hermite_normal_form(const IntMat& a);

// Membership of v in the column span over the integers.
bool in_column_lattice(const HermiteForm& h, const IntVec& v);

// Canonical basis (columns) of { x : a x = 0 } over the integers.
IntMat integer_kernel(const IntMat& a);

int matrix_rank(const IntMat& a);

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(IntMat a);

}  // namespace symanzik
