// Simple graphs on vertex set {1..n}: constructors, vertex-cover
// enumeration, cover and edge ideals, class predicates, whiskering, and
// isomorph-free enumeration of small graphs.

#ifndef COVERIDEAL_GRAPH_HPP
#define COVERIDEAL_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "coverideal/monomial.hpp"

namespace coverideal {

struct Graph {
  int n = 0;
  // normalized: i < j, sorted, no duplicates
  std::vector<std::pair<int, int>> edges;

  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int edge_count() const { return static_cast<int>(edges.size()); }
  bool has_edge(int a, int b) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;
  bool is_connected() const;

  bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }
};

Graph cycle_graph(int n);   // n >= 3, edges {i,i+1} and {n,1}
Graph path_graph(int n);    // n >= 1
Graph star_graph(int n);    // n >= 1, center 1
Graph complete_graph(int n);

// inclusion-minimal vertex covers, each sorted, list sorted; exhaustive over
// subsets, so ambient is capped
std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g);

// squarefree ideal generated by the minimal cover monomials; unit ideal for
// an edgeless graph
MonomialIdeal cover_ideal(const Graph& g);
// generated by x_i x_j over edges; zero ideal for an edgeless graph
MonomialIdeal edge_ideal(const Graph& g);

bool is_unmixed(const Graph& g);   // all minimal covers of equal size
bool is_bipartite(const Graph& g);
int girth(const Graph& g);         // 0 for a forest
bool is_cactus(const Graph& g);    // every edge lies on at most one cycle
bool is_chordal(const Graph& g);

struct CliquePartition {
  // ordered parts W_1..W_t; disjoint, exhaustive, each inducing a clique
  std::vector<std::vector<int>> parts;
};

// attach a new vertex y_i (labeled n+i) to every vertex of part W_i
Graph clique_whisker(const Graph& g, const CliquePartition& pi);
// whisker = clique_whisker with the partition into singletons
Graph whisker(const Graph& g);
CliquePartition singleton_partition(const Graph& g);

// canonical relabeling: lexicographically least adjacency encoding over the
// permutations consistent with iterated degree refinement
Graph canonical_form(const Graph& g);
std::vector<std::uint64_t> canonical_key(const Graph& g);

// all graphs / connected graphs on n labeled-then-canonicalized vertices,
// one representative per isomorphism class
std::vector<Graph> graphs_up_to_iso(int n);
std::vector<Graph> connected_graphs_up_to_iso(int n);

}  // namespace coverideal

#endif
