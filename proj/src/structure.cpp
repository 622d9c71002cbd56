#include "coverideal/structure.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace coverideal {

namespace {

constexpr int kQuotientGenCap = 25;
constexpr std::uint64_t kQuotientNodeCap = 4'000'000;
constexpr int kScanCap = 8;

using ExpSet = std::unordered_set<std::vector<int>, ExpVectorHash>;

ExpSet generator_set(const MonomialIdeal& ideal) {
  ExpSet set;
  for (const Monomial& g : ideal.gens) set.insert(g.exps);
  return set;
}

// first rank where the exponent vectors differ, or -1 if equal
int first_difference_rank(const Monomial& u, const Monomial& v, const VariableOrder& order) {
  int n = static_cast<int>(u.exps.size());
  for (int r = 0; r < n; ++r) {
    int q = order.variable_at_rank(r);
    if (u.exps[q - 1] != v.exps[q - 1]) return r;
  }
  return -1;
}

// witness search for the pair (u, v) whose first difference sits at rank r
// with u smaller there; tries lower ranks in order, so the reported witness
// is the highest-ranked admissible trade
std::optional<WpWitness> find_witness(const Monomial& u, const Monomial& v, int r,
                                      const VariableOrder& order, const ExpSet& gens) {
  int n = static_cast<int>(u.exps.size());
  int q = order.variable_at_rank(r);
  std::vector<int> candidate = u.exps;
  candidate[q - 1] += 1;
  for (int r2 = r + 1; r2 < n; ++r2) {
    int p = order.variable_at_rank(r2);
    if (u.exps[p - 1] < 1) continue;
    candidate[p - 1] -= 1;
    if (gens.count(candidate))
      return WpWitness{u, v, q, p, Monomial(candidate)};
    candidate[p - 1] += 1;
  }
  return std::nullopt;
}

// true iff a witness could still exist for (u, v) when only the ranks in
// `assigned` are fixed: any variable assigned below rank r or not yet
// assigned may end up as the trade
bool witness_possible(const Monomial& u, int q, const std::vector<int>& rank_of_var,
                      int r, const ExpSet& gens) {
  int n = static_cast<int>(u.exps.size());
  std::vector<int> candidate = u.exps;
  candidate[q - 1] += 1;
  for (int p = 1; p <= n; ++p) {
    if (p == q) continue;
    if (rank_of_var[p - 1] >= 0 && rank_of_var[p - 1] <= r) continue;
    if (u.exps[p - 1] < 1) continue;
    candidate[p - 1] -= 1;
    if (gens.count(candidate)) {
      return true;
    }
    candidate[p - 1] += 1;
  }
  return false;
}

struct OrderSearch {
  const MonomialIdeal* ideal = nullptr;
  ExpSet gens;
  int n = 0;
  std::vector<int> order_so_far;   // variable at each assigned rank
  std::vector<int> rank_of_var;    // -1 while unassigned

  // every pair whose first difference is decided by the assigned prefix must
  // still admit a possible witness
  bool consistent() const {
    int assigned = static_cast<int>(order_so_far.size());
    for (const Monomial& u : ideal->gens)
      for (const Monomial& v : ideal->gens) {
        if (u == v) continue;
        int r = -1;
        int q = 0;
        for (int i = 0; i < assigned; ++i) {
          int var = order_so_far[i];
          if (u.exps[var - 1] != v.exps[var - 1]) {
            r = i;
            q = var;
            break;
          }
        }
        if (r < 0 || u.exps[q - 1] > v.exps[q - 1]) continue;
        if (!witness_possible(u, q, rank_of_var, r, gens)) return false;
      }
    return true;
  }

  bool dfs() {
    if (static_cast<int>(order_so_far.size()) == n) return true;
    for (int var = 1; var <= n; ++var) {
      if (rank_of_var[var - 1] >= 0) continue;
      rank_of_var[var - 1] = static_cast<int>(order_so_far.size());
      order_so_far.push_back(var);
      if (consistent() && dfs()) return true;
      order_so_far.pop_back();
      rank_of_var[var - 1] = -1;
    }
    return false;
  }
};

// colon criterion: for every k already chosen, some chosen l has
// u_l : u_j equal to a single variable dividing u_k : u_j
bool colon_is_variable_generated(const std::vector<Monomial>& gens, std::uint32_t chosen,
                                 int j) {
  int m = static_cast<int>(gens.size());
  for (int k = 0; k < m; ++k) {
    if (!(chosen >> k & 1)) continue;
    Monomial qk = gens[k].divided_by(gcd(gens[k], gens[j]));
    bool covered = false;
    for (int l = 0; l < m && !covered; ++l) {
      if (!(chosen >> l & 1)) continue;
      Monomial ql = gens[l].divided_by(gcd(gens[l], gens[j]));
      if (ql.degree() != 1) continue;
      if (ql.divides(qk)) covered = true;
    }
    if (!covered) return false;
  }
  return true;
}

struct QuotientSearch {
  const std::vector<Monomial>* gens = nullptr;
  int m = 0;
  std::unordered_set<std::uint32_t> dead;
  std::uint64_t nodes = 0;
  std::vector<int> order;

  bool dfs(std::uint32_t chosen) {
    if (static_cast<int>(order.size()) == m) return true;
    if (dead.count(chosen)) return false;
    if (++nodes > kQuotientNodeCap)
      throw CapExceeded("linear quotients search exceeded its node budget");
    for (int j = 0; j < m; ++j) {
      if (chosen >> j & 1) continue;
      if (!colon_is_variable_generated(*gens, chosen, j)) continue;
      order.push_back(j);
      if (dfs(chosen | 1u << j)) return true;
      order.pop_back();
    }
    dead.insert(chosen);
    return false;
  }
};

}  // namespace

WpResult is_weakly_polymatroidal(const MonomialIdeal& ideal, const VariableOrder& order) {
  if (ideal.is_zero()) throw std::invalid_argument("zero ideal has no generators to order");
  if (static_cast<int>(order.ranking.size()) != ideal.ambient)
    throw std::invalid_argument("order ambient mismatch");
  WpResult result;
  result.order = order;
  ExpSet gens = generator_set(ideal);
  for (const Monomial& u : ideal.gens)
    for (const Monomial& v : ideal.gens) {
      if (u == v) continue;
      int r = first_difference_rank(u, v, order);
      int q = order.variable_at_rank(r);
      if (u.exps[q - 1] > v.exps[q - 1]) continue;
      auto witness = find_witness(u, v, r, order, gens);
      if (!witness) {
        result.weakly_polymatroidal = false;
        result.witnesses.clear();
        result.violation = WpViolation{u, v, q};
        return result;
      }
      result.witnesses.push_back(*witness);
    }
  result.weakly_polymatroidal = true;
  return result;
}

std::optional<VariableOrder> find_wp_order(const MonomialIdeal& ideal, int ambient_cap) {
  if (ideal.is_zero()) throw std::invalid_argument("zero ideal has no generators to order");
  if (ideal.ambient > ambient_cap)
    throw CapExceeded("order search capped at ambient " + std::to_string(ambient_cap));
  OrderSearch search;
  search.ideal = &ideal;
  search.gens = generator_set(ideal);
  search.n = ideal.ambient;
  search.rank_of_var.assign(ideal.ambient, -1);
  if (!search.dfs()) return std::nullopt;
  VariableOrder order(search.order_so_far);
  // the exhaustive check is cheap insurance over the incremental pruning
  if (!is_weakly_polymatroidal(ideal, order).weakly_polymatroidal)
    throw std::logic_error("order search returned an inadmissible order");
  return order;
}

LinearQuotientsResult has_linear_quotients(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) throw std::invalid_argument("zero ideal has no generators to order");
  int m = static_cast<int>(ideal.gens.size());
  if (m > kQuotientGenCap)
    throw CapExceeded("linear quotients search capped at " +
                      std::to_string(kQuotientGenCap) + " generators");
  QuotientSearch search;
  search.gens = &ideal.gens;
  search.m = m;
  LinearQuotientsResult result;
  if (!search.dfs(0)) return result;
  result.found = true;
  for (int j : search.order) result.order.push_back(ideal.gens[j]);
  return result;
}

SimplicialComplex complex_of_dual(const MonomialIdeal& ideal) {
  if (!ideal.is_squarefree()) throw std::invalid_argument("dual complex needs a squarefree ideal");
  if (ideal.is_zero()) throw std::invalid_argument("zero ideal has no dual complex");
  std::vector<int> verts(ideal.ambient);
  for (int i = 0; i < ideal.ambient; ++i) verts[i] = i + 1;
  std::vector<std::vector<int>> facets;
  for (const Monomial& g : ideal.gens) {
    std::vector<int> f;
    for (int i = 1; i <= ideal.ambient; ++i)
      if (g.exps[i - 1] == 0) f.push_back(i);
    facets.push_back(std::move(f));
  }
  // generator minimality makes the complement family an antichain already
  SimplicialComplex d;
  d.vertex_set = std::move(verts);
  std::sort(facets.begin(), facets.end());
  d.facets = std::move(facets);
  return d;
}

MonomialIdeal dual_ideal(const SimplicialComplex& d, int ambient) {
  if (d.is_void()) throw std::invalid_argument("void complex has no facet-complement ideal");
  std::vector<Monomial> gens;
  for (const auto& f : d.facets) {
    Monomial g = Monomial::unit(ambient);
    for (int v : d.vertex_set) {
      if (v < 1 || v > ambient) throw std::invalid_argument("vertex outside ambient ring");
      if (!std::binary_search(f.begin(), f.end(), v)) g.exps[v - 1] = 1;
    }
    gens.push_back(g);
  }
  return minimize(ambient, gens);
}

WpVdecReport wp_implies_vdec_experiment(const std::vector<MonomialIdeal>& corpus) {
  WpVdecReport report;
  for (const MonomialIdeal& ideal : corpus) {
    WpVdecCase c;
    c.ideal = ideal;
    auto order = find_wp_order(ideal);
    if (order) {
      c.wp = true;
      c.order = *order;
      c.vertex_decomposable = is_vertex_decomposable(complex_of_dual(ideal));
      ++report.wp_count;
      if (!c.vertex_decomposable) ++report.counterexamples;
    }
    report.cases.push_back(std::move(c));
  }
  return report;
}

ConjectureReport conjecture_scan(int max_n) {
  if (max_n < 1 || max_n > kScanCap)
    throw CapExceeded("scan capped at " + std::to_string(kScanCap) + " vertices");
  ConjectureReport report;
  report.max_n = max_n;
  for (int n = 1; n <= max_n; ++n) {
    for (const Graph& g : connected_graphs_up_to_iso(n)) {
      ++report.connected_graphs;
      if (!is_unmixed(g)) continue;
      if (!is_vertex_decomposable(independence_complex(g))) continue;
      ConjectureCase c;
      c.graph = g;
      auto order = find_wp_order(cover_ideal(g), kScanCap);
      if (order) {
        c.wp_order_found = true;
        c.order = *order;
      } else {
        report.exhausted.push_back(g);
      }
      report.candidates.push_back(std::move(c));
    }
  }
  return report;
}

}  // namespace coverideal
