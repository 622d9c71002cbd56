// Simplicial complexes stored by their facet antichain: link, deletion,
// shedding vertices, vertex decomposability with certificates, and
// Stanley-Reisner ideals.
//
// Encodings: the void complex has no facets; the complex {∅} has the single
// facet ∅ and counts as a simplex (the empty simplex).

#ifndef COVERIDEAL_SIMPLICIAL_HPP
#define COVERIDEAL_SIMPLICIAL_HPP

#include <memory>
#include <optional>
#include <vector>

#include "coverideal/monomial.hpp"

namespace coverideal {

struct Graph;

struct SimplicialComplex {
  std::vector<int> vertex_set;           // sorted ascending
  std::vector<std::vector<int>> facets;  // antichain; each facet sorted; list sorted

  // canonicalizes: sorts, dedupes, drops faces contained in others
  static SimplicialComplex from_faces(std::vector<int> vertex_set,
                                      std::vector<std::vector<int>> faces);

  bool is_void() const { return facets.empty(); }
  bool is_irrelevant() const;  // exactly {∅}
  bool is_simplex() const { return facets.size() == 1; }
  // max facet size - 1; -1 for {∅}; error on the void complex
  int dim() const;
  bool is_pure() const;
  bool has_vertex(int v) const;
  bool has_face(const std::vector<int>& f) const;

  bool operator==(const SimplicialComplex& o) const {
    return vertex_set == o.vertex_set && facets == o.facets;
  }
};

// facets that contain v, with v removed; void if v lies in no face
SimplicialComplex link(const SimplicialComplex& d, int v);
// faces avoiding v, re-minimized
SimplicialComplex deletion(const SimplicialComplex& d, int v);

// true iff no facet of link(d,v) is also a facet of deletion(d,v)
bool is_shedding_vertex(const SimplicialComplex& d, int v);

struct SheddingTree {
  bool leaf = false;  // complex was a simplex
  int vertex = 0;     // shedding vertex chosen (interior nodes)
  std::unique_ptr<SheddingTree> link_branch;
  std::unique_ptr<SheddingTree> deletion_branch;
};

// recursive test per the shedding-vertex definition; rejects the void
// complex; memoized across isomorphic subproblems
bool is_vertex_decomposable(const SimplicialComplex& d);
// same test, with the shedding tree on success
std::optional<SheddingTree> vertex_decomposition(const SimplicialComplex& d);

// maximal independent sets of g as facets on {1..n}
SimplicialComplex independence_complex(const Graph& g);

// ideal of minimal non-faces; requires vertex_set == {1..ambient}
MonomialIdeal stanley_reisner(const SimplicialComplex& d, int ambient);

}  // namespace coverideal

#endif
