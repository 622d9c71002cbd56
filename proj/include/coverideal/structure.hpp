// Weak polymatroidality under a fixed variable order, exhaustive order
// search, linear quotients, and the implication experiments tying these to
// vertex decomposability.

#ifndef COVERIDEAL_STRUCTURE_HPP
#define COVERIDEAL_STRUCTURE_HPP

#include <optional>
#include <vector>

#include "coverideal/graph.hpp"
#include "coverideal/monomial.hpp"
#include "coverideal/simplicial.hpp"

namespace coverideal {

// exchange witness for one ordered generator pair: w = (x_q * u) / x_p lies
// in G(I), with p of strictly lower rank than q
struct WpWitness {
  Monomial u;
  Monomial v;
  int q = 0;  // variable at the first differing rank, where u falls short
  int p = 0;  // traded variable, lower-ranked than q
  Monomial w;
};

// a pair with a common strict prefix and no admissible trade
struct WpViolation {
  Monomial u;
  Monomial v;
  int q = 0;
};

struct WpResult {
  VariableOrder order;
  bool weakly_polymatroidal = false;
  std::vector<WpWitness> witnesses;      // one per exchange-requiring pair
  std::optional<WpViolation> violation;  // first failing pair otherwise
};

// evaluates the exchange definition verbatim under the given order; every
// ordered generator pair (u, v) agreeing above rank r and with u smaller at
// rank r needs a witness; ideals not generated in one degree are allowed
WpResult is_weakly_polymatroidal(const MonomialIdeal& ideal, const VariableOrder& order);

// depth-first search over rank assignments, pruning a partial order as soon
// as some decided pair has no possible witness among lower-or-unranked
// variables; returns the lexicographically least admissible order
std::optional<VariableOrder> find_wp_order(const MonomialIdeal& ideal, int ambient_cap = 10);

struct LinearQuotientsResult {
  bool found = false;
  std::vector<Monomial> order;  // admissible generator order when found
};

// searches for a generator order whose successive colon ideals are
// variable-generated; backtracking with a dead-state memo
LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal);

// complex whose facets are the complements of the generator supports; the
// given squarefree ideal is then the facet-complement ideal of the result
SimplicialComplex complex_of_dual(const MonomialIdeal& ideal);
// inverse direction: generators are complements of facets inside vertex_set,
// written in the given ambient ring
MonomialIdeal dual_ideal(const SimplicialComplex& d, int ambient);

struct WpVdecCase {
  MonomialIdeal ideal;
  bool wp = false;  // some order admits the exchange property
  VariableOrder order;
  bool vertex_decomposable = false;  // computed when wp holds
};

struct WpVdecReport {
  std::vector<WpVdecCase> cases;
  int wp_count = 0;
  int counterexamples = 0;  // wp holds but the complex is not decomposable
};

// for each squarefree ideal: search for an order, rebuild the complex it is
// dual to, and test decomposability; counterexamples must stay at zero
WpVdecReport wp_implies_vdec_experiment(const std::vector<MonomialIdeal>& corpus);

struct ConjectureCase {
  Graph graph;
  bool wp_order_found = false;
  VariableOrder order;
};

struct ConjectureReport {
  int max_n = 0;
  int connected_graphs = 0;  // scanned, up to isomorphism
  std::vector<ConjectureCase> candidates;  // unmixed and vertex decomposable
  std::vector<Graph> exhausted;            // candidates with no admissible order
};

// scans connected graphs up to max_n vertices for unmixed vertex
// decomposable graphs whose cover ideal admits no order: potential
// counterexamples are reported, never asserted
ConjectureReport conjecture_scan(int max_n);

}  // namespace coverideal

#endif
