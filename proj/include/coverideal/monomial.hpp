// Exact arithmetic on monomials and monomial ideals: divisibility, lcm,
// products, powers, intersections, Alexander duality, polarization and
// truncation by powers of the maximal ideal.
//
// Conventions used throughout the library:
//   * variables are 1-based (x_1, ..., x_n); exponent vectors are 0-based
//   * the zero ideal is the empty generator set
//   * the unit ideal is generated by the all-zeros monomial
//   * generator sets are always stored minimized and sorted graded-lex,
//     so ideal equality is sequence equality

#ifndef COVERIDEAL_MONOMIAL_HPP
#define COVERIDEAL_MONOMIAL_HPP

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace coverideal {

// Hard failure for configurable resource limits (never silent truncation).
struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Monomial {
  std::vector<int> exps;

  Monomial() = default;
  explicit Monomial(std::vector<int> e);

  static Monomial unit(int ambient);
  // x_i in the given ambient dimension, i is 1-based
  static Monomial variable(int ambient, int i);

  int ambient() const { return static_cast<int>(exps.size()); }
  int degree() const;
  int deg_of(int var) const { return exps.at(var - 1); }
  bool is_unit() const;
  bool is_squarefree() const;
  // 1-based indices of variables with positive exponent
  std::vector<int> support() const;

  bool divides(const Monomial& other) const;
  Monomial times(const Monomial& other) const;
  // exact quotient; throws if other does not divide *this
  Monomial divided_by(const Monomial& other) const;

  std::string str() const;  // "x1*x2^2", "1" for the unit monomial

  bool operator==(const Monomial& o) const { return exps == o.exps; }
  bool operator!=(const Monomial& o) const { return exps != o.exps; }
  // graded, then lexicographic on the exponent vector
  bool operator<(const Monomial& o) const;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

struct MonomialHash {
  size_t operator()(const Monomial& m) const;
};
struct ExpVectorHash {
  size_t operator()(const std::vector<int>& v) const;
};

struct MonomialIdeal {
  int ambient = 0;
  // minimal generators, sorted graded-lex; empty = zero ideal
  std::vector<Monomial> gens;

  MonomialIdeal() = default;
  explicit MonomialIdeal(int n) : ambient(n) {}

  static MonomialIdeal zero(int ambient);
  static MonomialIdeal unit(int ambient);
  // ideal generated by the variables {i : i in vars}, 1-based
  static MonomialIdeal variables(int ambient, const std::vector<int>& vars);

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const;
  bool is_squarefree() const;
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& o) const {
    return ambient == o.ambient && gens == o.gens;
  }
  bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }
};

// Canonicalize a generating set: drop non-minimal generators, sort graded-lex.
MonomialIdeal minimize(int ambient, std::vector<Monomial> gens);

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
// power(I, 0) is the unit ideal by convention
MonomialIdeal power(const MonomialIdeal& a, int s);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// k-way intersection; folds smallest generator sets first, result is
// independent of the fold order
MonomialIdeal intersect_many(std::vector<MonomialIdeal> ideals);
// ideal sum = generator union, minimized
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum_many(const std::vector<MonomialIdeal>& ideals);

// Alexander dual of a squarefree ideal; involution, throws on non-squarefree.
MonomialIdeal alexander_dual(const MonomialIdeal& a);

// I cap m^t: generators of degree < t are padded by all monomials of the
// missing degree, then the set is minimized.
MonomialIdeal truncate(const MonomialIdeal& a, int t);

struct Polarization {
  MonomialIdeal ideal;                   // squarefree, in the enlarged ring
  std::vector<std::vector<int>> blocks;  // blocks[i] = new 1-based variables for x_{i+1}
};
Polarization polarize(const MonomialIdeal& a);

// min / max total degree over the minimal generators; throw on the zero ideal
int deg_min(const MonomialIdeal& a);
int deg_max(const MonomialIdeal& a);

// all monomials of total degree d in n variables, in canonical order
std::vector<Monomial> monomials_of_degree(int ambient, int d);

// rename variables: result exponent at position perm[i]-1 is the old exponent
// at position i (perm is a 1-based bijection old var -> new var)
Monomial rename(const Monomial& m, const std::vector<int>& perm);
MonomialIdeal rename(const MonomialIdeal& a, const std::vector<int>& perm);

// Ordering of the ambient variables: ranking[r] is the variable at rank r,
// rank 0 being the greatest variable.
struct VariableOrder {
  std::vector<int> ranking;

  VariableOrder() = default;
  explicit VariableOrder(std::vector<int> r);

  static VariableOrder identity(int n);
  int size() const { return static_cast<int>(ranking.size()); }
  int variable_at_rank(int r) const { return ranking.at(r); }
  int rank_of(int var) const;
  std::string str() const;  // "1,2,3"
  static VariableOrder parse(const std::string& text);

  bool operator==(const VariableOrder& o) const { return ranking == o.ranking; }
};

}  // namespace coverideal

#endif
