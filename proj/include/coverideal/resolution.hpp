// Multigraded Betti numbers of monomial ideals over the rationals, computed
// from the reduced homology of upper Koszul complexes at lcm-lattice
// multidegrees, plus the derived invariants: regularity, projective
// dimension, linear-resolution and componentwise-linear tests, and the
// Cohen-Macaulay test for edge ideals.

#ifndef COVERIDEAL_RESOLUTION_HPP
#define COVERIDEAL_RESOLUTION_HPP

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "coverideal/monomial.hpp"

namespace coverideal {

struct Graph;

// multidegrees closed under pairwise lcm, generated by G(I); the unit
// monomial is kept as the lattice bottom
struct LcmLattice {
  int ambient = 0;
  std::vector<Monomial> elements;  // canonical order, bottom first
};

struct ResolutionOptions {
  std::size_t lattice_cap = 200000;  // max lattice elements
  std::size_t matrix_cap = 4000;     // max faces per Koszul dimension
  int jobs = 1;                      // worker threads across multidegrees
};

LcmLattice lcm_lattice(const MonomialIdeal& ideal,
                       std::size_t cap = ResolutionOptions{}.lattice_cap);

struct BettiEntry {
  int i = 0;            // homological degree
  Monomial multidegree;
  long long rank = 0;   // dimension over the rationals, always > 0
};

struct BettiTable {
  std::vector<BettiEntry> entries;  // sorted by (i, multidegree)

  long long rank_at(int i, const Monomial& a) const;
  // (i, total degree j) -> summed rank
  std::map<std::pair<int, int>, long long> coarse() const;
  std::vector<long long> totals() const;  // index i -> total Betti number
  int max_homological_degree() const;     // -1 for an empty table
};

// beta_{i,a}(ideal) for every lattice multidegree; zero rows omitted
BettiTable betti_numbers(const MonomialIdeal& ideal,
                         const ResolutionOptions& opts = {});

// regularity of the ideal as a module: max |a| - i over nonzero entries
int regularity(const MonomialIdeal& ideal, const ResolutionOptions& opts = {});
// regularity of R/I, = regularity(ideal) - 1
int regularity_quotient(const MonomialIdeal& ideal,
                        const ResolutionOptions& opts = {});

bool has_linear_resolution(const MonomialIdeal& ideal,
                           const ResolutionOptions& opts = {});
bool is_componentwise_linear(const MonomialIdeal& ideal,
                             const ResolutionOptions& opts = {});
// ideal generated by the degree-d members of the ideal
MonomialIdeal degree_component(const MonomialIdeal& ideal, int d);

// pd(R/I) = 1 + max homological degree of the ideal's table; 0 for the zero
// ideal
int projective_dimension_quotient(const MonomialIdeal& ideal,
                                  const ResolutionOptions& opts = {});

// R/I(G) Cohen-Macaulay: projective dimension equals the minimum vertex
// cover size (the height of the edge ideal)
bool is_cohen_macaulay_graph(const Graph& g, const ResolutionOptions& opts = {});

// exact rank over the rationals of an integer matrix (fraction-free
// elimination; no floating point)
long long integer_matrix_rank(std::vector<std::vector<long long>> m);

}  // namespace coverideal

#endif
