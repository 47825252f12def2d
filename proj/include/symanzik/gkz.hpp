#pragma once

#include <string>
#include <vector>

#include "symanzik/semigroup.hpp"

namespace symanzik {

// E_i = sum_j a_{i,j} y_j d_j; coefficients are row i of A verbatim.
struct EulerOperator {
  int row = 0;
  std::vector<int> coeffs;
};

// Box binomial d^u - d^v with A u = A v and disjoint supports.
struct Binomial {
  std::vector<int> u;
  std::vector<int> v;
};

std::vector<EulerOperator> euler_operators(const SupportMatrix& a);

// A basis of the integer kernel of A, split into positive/negative parts.
// These generate the lattice ideal only up to saturation; full toric-ideal
// generation is out of scope.
std::vector<Binomial> lattice_kernel_binomials(const SupportMatrix& a);

std::string gkz_pretty(const SupportMatrix& a);

}  // namespace symanzik
