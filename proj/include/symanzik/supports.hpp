#pragma once

#include <stdexcept>
#include <vector>

#include "symanzik/graph.hpp"

namespace symanzik {

// Exponent vector of a monomial, one entry per edge in graph edge order.
using ExponentVec = std::vector<int>;

// Violation of the Feynman hypotheses (s1I required downstream, no
// momentous 2-forest, empty Feynman base set, ...).
struct HypothesisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A confirmed mathematical inconsistency: something an established
// structural result rules out happened anyway.  Treated as a bug signal.
struct MathCheckError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Coefficients are never stored; genericity is the default.  A degeneracy
// deletes named monomials from the generic support (e.g. the x1 x2 term of
// the massive bubble when p^2 + m1^2 + m2^2 = 0).
struct Degeneracy {
  std::vector<ExponentVec> deleted;
  bool empty() const { return deleted.empty(); }
};

struct ForestClass {
  bool momentous = false;
  bool massive_truncation = false;
};

// Support of U: indicator vectors of spanning-tree complements.  Sorted.
std::vector<ExponentVec> u_support(const FeynmanGraph& g);

// Classification of a 2-forest: momentous iff neither component contains
// every external vertex; massive truncation iff some massive edge links
// the two components.  Throws GraphError if f is not a 2-forest.
ForestClass classify_2forest(const FeynmanGraph& g, EdgeSet f);

// Support of F0 (momentum part): complements of momentous 2-forests, minus
// any deleted monomials that fall in this set.  Sorted.
std::vector<ExponentVec> f0_support(const FeynmanGraph& g,
                                    const Degeneracy& d = {});

// Support of U * sum(m_e^2 x_e): tree complement plus a unit at a massive
// edge; carries an entry 2 exactly when the edge misses the tree.  Sorted.
std::vector<ExponentVec> mass_term_support(const FeynmanGraph& g);

struct GmSupport {
  std::vector<ExponentVec> u_part;
  std::vector<ExponentVec> f_part;
  std::vector<ExponentVec> deleted;  // the applied degeneracy
  bool hypothesis_ok = false;        // f_part nonempty and no deletions
  bool degenerate = false;           // deletions were applied
};

// Support of G_m = U + F.  Throws HypothesisError when a deleted monomial
// is not part of the generic f-support.
GmSupport gm_support(const FeynmanGraph& g, const Degeneracy& d = {});

}  // namespace symanzik
