#pragma once

#include "symanzik/arith.hpp"

namespace symanzik {

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

struct LpResult {
  bool feasible = false;
  bool bounded = true;
  Rat objective = 0;
  RatVec x;
};

// maximize c.x subject to A x = b, x >= 0, with exact rational arithmetic.
// Two-phase simplex with Bland's rule.
LpResult lp_maximize(const RatMat& a, const RatVec& b, const RatVec& c);

// Feasibility of A x = b, x >= 0.
bool lp_feasible(const RatMat& a, const RatVec& b);
bool lp_feasible(const IntMat& a, const IntVec& b);

}  // namespace symanzik
