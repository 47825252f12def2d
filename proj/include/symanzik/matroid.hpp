#pragma once

#include <optional>
#include <vector>

#include "symanzik/graph.hpp"
#include "symanzik/supports.hpp"

namespace symanzik {

// Bases-list matroid on ground set {0, ..., ground_size-1}.  Bases are
// stored explicitly so that all axioms can be verified exhaustively.
struct Matroid {
  int ground_size = 0;
  std::vector<EdgeSet> bases;  // ascending bitmask order, no duplicates
  int rank = 0;
};

// Validates equal cardinality and non-emptiness; does not assume exchange.
Matroid make_matroid(int ground_size, std::vector<EdgeSet> bases);

Matroid graphic_matroid(const FeynmanGraph& g);
Matroid cographic_matroid(const FeynmanGraph& g);
Matroid two_forest_matroid(const FeynmanGraph& g);
Matroid dual(const Matroid& m);

// Bases: momentous 2-forests.  Throws HypothesisError when none exist.
Matroid momentous_matroid(const FeynmanGraph& g);

// Bases: 2-forests completable to a spanning tree by a massive edge.
// Throws HypothesisError when there are none.
Matroid massive_truncation_matroid(const FeynmanGraph& g);

// Bases: union of the momentous and massively truncated 2-forests.
Matroid feynman_matroid(const FeynmanGraph& g);

// M_{/E'}: subsets B with B u {e'} a basis for some e' in eprime \ B.
// Throws HypothesisError when eprime has rank zero (trivial quotient).
Matroid quotient_by_subset(const Matroid& m, EdgeSet eprime);

struct ExchangeCounterexample {
  EdgeSet base_a = 0;
  EdgeSet base_b = 0;
  int removed = -1;
};

struct ExchangeCheck {
  bool weak_ok = false;
  bool strong_ok = false;
  std::optional<ExchangeCounterexample> weak_counterexample;
  std::optional<ExchangeCounterexample> strong_counterexample;
};

// Exhaustive check of the weak and strong exchange axioms over all ordered
// base pairs and all removable elements.
ExchangeCheck check_exchange_axiom(const Matroid& m);

// Inclusion-minimal dependent sets, ascending bitmask order.
std::vector<EdgeSet> circuits(const Matroid& m);

int rank_of(const Matroid& m, EdgeSet s);
EdgeSet span_of(const Matroid& m, EdgeSet s);

struct CircuitCover {
  EdgeSet circuit = 0;
  bool covered = false;
  std::vector<EdgeSet> covering;  // circuits of M' contained in the circuit
  EdgeSet uncovered = 0;          // failure certificate
};

struct QuotientWitness {
  bool holds = false;
  std::vector<CircuitCover> covers;  // one entry per circuit of M
};

// M' is a quotient of M iff every circuit of M is a union of circuits of
// M'.  The cover search is exhaustive over contained circuits.
QuotientWitness is_quotient(const Matroid& mprime, const Matroid& m);

struct PolytopeEdgeReport {
  bool ok = false;  // every edge direction is of the form e_i - e_j
  std::vector<std::pair<EdgeSet, EdgeSet>> edges;
};

// 1-skeleton of the matroid polytope, decided per vertex pair by an exact
// rational LP; every edge direction is checked to be a basis-exchange step.
PolytopeEdgeReport matroid_polytope_edge_directions(const Matroid& m);

ExponentVec basis_indicator(int ground_size, EdgeSet basis);

}  // namespace symanzik
