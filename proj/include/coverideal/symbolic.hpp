// Symbolic powers of cover ideals, the closed-form decomposition available
// when every odd cycle sees the whole vertex set, truncation-equality
// experiments, face ideals of simplicial co-complexes, and the L_{s,t}
// family for whiskered graphs.

#ifndef COVERIDEAL_SYMBOLIC_HPP
#define COVERIDEAL_SYMBOLIC_HPP

#include <optional>
#include <vector>

#include "coverideal/graph.hpp"
#include "coverideal/monomial.hpp"

namespace coverideal {

// J(G)^(s) as the intersection of (x_i, x_j)^s over edges; unit ideal for an
// edgeless graph, matching the empty-intersection convention of cover_ideal
MonomialIdeal symbolic_power(const Graph& g, int s);

// true iff every simple odd cycle C has N(C) = V(G), where N(C) is the set
// of vertices adjacent to some vertex of C; exhaustive enumeration, capped
bool check_odd_cycle_neighborhood(const Graph& g);

// J^s + sum over i of (x_1...x_n)^i J^{s-2i}; requires the odd-cycle
// neighborhood hypothesis
MonomialIdeal herzog_symbolic(const Graph& g, int s);

// for an odd cycle: symbolic and ordinary s-th powers agree after cutting
// at degree s * Deg(J)
bool truncation_equality_check(const Graph& g, int s);

// upward-closed face family on a partitioned ground set, stored by its
// minimal faces
struct CoComplex {
  std::vector<std::vector<int>> parts;      // partition of {1..V}, part order fixed
  std::vector<std::vector<int>> min_faces;  // antichain of sorted subsets of {1..V}

  int ground_size() const;
  // every face: union of upward closures of the minimal faces
  std::vector<std::vector<int>> all_faces() const;
};

// u_F = prod of x over F times prod of y_i^{|V_i| - |F cap V_i|}, minimized
// over all faces; ambient = |V| + parts, y-variables appended in part order
MonomialIdeal face_ideal(const CoComplex& nabla);

// traces of the minimal vertex covers of W on V(G), as a co-complex with
// partition pi; validates W = clique_whisker(G, pi) and upward closure
CoComplex cover_cocomplex(const Graph& w, const Graph& g, const CliquePartition& pi);

// J^s + (x_[n]y_[n]) J^{s-2} + ... + (x_[n]y_[n])^t J^{s-2t} for the cover
// ideal J of whisker(G); requires 2t <= s
MonomialIdeal l_ideal(const Graph& g, int s, int t);

struct SymbolicPowerReport {
  Graph graph;
  int s = 1;
  MonomialIdeal via_intersection;
  std::optional<MonomialIdeal> via_formula;  // present when the hypothesis holds
  bool equal = false;                        // matches when both present
};

SymbolicPowerReport symbolic_report(const Graph& g, int s);

}  // namespace coverideal

#endif
