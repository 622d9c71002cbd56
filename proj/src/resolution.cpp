#include "coverideal/resolution.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "coverideal/graph.hpp"

namespace coverideal {

using boost::multiprecision::cpp_int;

LcmLattice lcm_lattice(const MonomialIdeal& ideal, std::size_t cap) {
  if (ideal.is_zero()) throw std::invalid_argument("lcm lattice of the zero ideal");
  std::set<std::vector<int>> seen;
  seen.insert(Monomial::unit(ideal.ambient).exps);  // lattice bottom
  std::vector<Monomial> worklist;
  for (const Monomial& g : ideal.gens)
    if (seen.insert(g.exps).second) worklist.push_back(g);
  // closure under pairwise lcm, to a fixed point
  while (!worklist.empty()) {
    Monomial a = std::move(worklist.back());
    worklist.pop_back();
    for (const Monomial& g : ideal.gens) {
      Monomial m = lcm(a, g);
      if (seen.insert(m.exps).second) {
        if (seen.size() > cap) throw CapExceeded("lcm lattice exceeds cap");
        worklist.push_back(std::move(m));
      }
    }
  }
  LcmLattice out;
  out.ambient = ideal.ambient;
  for (const auto& e : seen) out.elements.push_back(Monomial(e));
  std::sort(out.elements.begin(), out.elements.end());
  return out;
}

long long BettiTable::rank_at(int i, const Monomial& a) const {
  for (const BettiEntry& e : entries)
    if (e.i == i && e.multidegree == a) return e.rank;
  return 0;
}

std::map<std::pair<int, int>, long long> BettiTable::coarse() const {
  std::map<std::pair<int, int>, long long> out;
  for (const BettiEntry& e : entries)
    out[{e.i, e.multidegree.degree()}] += e.rank;
  return out;
}

std::vector<long long> BettiTable::totals() const {
  std::vector<long long> out;
  for (const BettiEntry& e : entries) {
    if (e.i >= static_cast<int>(out.size())) out.resize(e.i + 1, 0);
    out[e.i] += e.rank;
  }
  return out;
}

int BettiTable::max_homological_degree() const {
  int m = -1;
  for (const BettiEntry& e : entries) m = std::max(m, e.i);
  return m;
}

// ---------------------------------------------------------------------------
// exact rank
// ---------------------------------------------------------------------------

namespace {

struct Int64Overflow {};

inline long long mul_checked(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}

inline long long sub_checked(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw Int64Overflow{};
  return r;
}

// fraction-free Bareiss elimination with full pivoting; entries stay integral
template <typename T>
long long bareiss_rank(std::vector<std::vector<T>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  T prev = 1;
  int rank = 0;
  for (int step = 0; step < std::min(rows, cols); ++step) {
    int pr = -1, pc = -1;
    for (int i = step; i < rows && pr < 0; ++i)
      for (int j = step; j < cols; ++j)
        if (m[i][j] != 0) {
          pr = i;
          pc = j;
          break;
        }
    if (pr < 0) break;
    std::swap(m[step], m[pr]);
    if (pc != step)
      for (int i = 0; i < rows; ++i) std::swap(m[i][step], m[i][pc]);
    for (int i = step + 1; i < rows; ++i) {
      for (int j = step + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, long long>) {
          T num = sub_checked(mul_checked(m[step][step], m[i][j]),
                              mul_checked(m[i][step], m[step][j]));
          m[i][j] = num / prev;
        } else {
          m[i][j] = (m[step][step] * m[i][j] - m[i][step] * m[step][j]) / prev;
        }
      }
      m[i][step] = 0;
    }
    prev = m[step][step];
    ++rank;
  }
  return rank;
}

}  // namespace

long long integer_matrix_rank(std::vector<std::vector<long long>> m) {
  std::vector<std::vector<long long>> copy = m;
  try {
    return bareiss_rank(copy);
  } catch (const Int64Overflow&) {
    std::vector<std::vector<cpp_int>> wide(m.size());
    for (size_t i = 0; i < m.size(); ++i)
      wide[i].assign(m[i].begin(), m[i].end());
    return bareiss_rank(wide);
  }
}

// ---------------------------------------------------------------------------
// upper Koszul homology per multidegree
// ---------------------------------------------------------------------------

namespace {

// beta_{i,a} for one multidegree, indexed by homological degree i
std::vector<long long> koszul_betti(const MonomialIdeal& ideal, const Monomial& a,
                                    std::size_t matrix_cap) {
  // faces of the Koszul complex at a: squarefree b within supp(a) with
  // x^{a-b} in the ideal; equivalently the union of the power sets of
  // B_g = {i : g_i < a_i} over generators g dividing a
  std::vector<int> supp = a.support();
  const int k = static_cast<int>(supp.size());
  if (k > 31) throw CapExceeded("multidegree support exceeds 31 variables");

  std::vector<std::uint32_t> facet_masks;
  for (const Monomial& g : ideal.gens) {
    if (!g.divides(a)) continue;
    std::uint32_t mask = 0;
    for (int idx = 0; idx < k; ++idx)
      if (g.exps[supp[idx] - 1] < a.exps[supp[idx] - 1]) mask |= 1u << idx;
    facet_masks.push_back(mask);
  }
  if (facet_masks.empty()) return {};  // void complex, no homology
  // keep maximal masks only
  std::sort(facet_masks.begin(), facet_masks.end());
  facet_masks.erase(std::unique(facet_masks.begin(), facet_masks.end()),
                    facet_masks.end());
  std::vector<std::uint32_t> facets;
  for (std::uint32_t f : facet_masks) {
    bool covered = false;
    for (std::uint32_t g : facet_masks)
      if (g != f && (f & ~g) == 0) {
        covered = true;
        break;
      }
    if (!covered) facets.push_back(f);
  }

  // enumerate the union of power sets, grouped by popcount
  std::unordered_set<std::uint32_t> seen;
  std::vector<std::vector<std::uint32_t>> faces(k + 1);
  for (std::uint32_t f : facets) {
    // iterate submasks of f, including 0
    std::uint32_t sub = f;
    while (true) {
      if (seen.insert(sub).second) {
        faces[__builtin_popcount(sub)].push_back(sub);
        if (seen.size() > matrix_cap * 4)
          throw CapExceeded("Koszul complex face count exceeds cap");
      }
      if (sub == 0) break;
      sub = (sub - 1) & f;
    }
  }
  for (auto& level : faces) {
    if (level.size() > matrix_cap)
      throw CapExceeded("Koszul boundary matrix exceeds cap");
    std::sort(level.begin(), level.end());
  }

  // rank of the boundary from size-s faces to size-(s-1) faces
  auto boundary_rank = [&](int s) -> long long {
    if (s <= 0 || faces[s].empty() || faces[s - 1].empty()) return 0;
    std::vector<std::vector<long long>> mat(
        faces[s - 1].size(), std::vector<long long>(faces[s].size(), 0));
    for (size_t col = 0; col < faces[s].size(); ++col) {
      std::uint32_t b = faces[s][col];
      int sign = 1;
      for (std::uint32_t rest = b; rest;) {
        int bit = __builtin_ctz(rest);
        rest &= rest - 1;
        std::uint32_t sub = b & ~(1u << bit);
        auto it = std::lower_bound(faces[s - 1].begin(), faces[s - 1].end(), sub);
        mat[it - faces[s - 1].begin()][col] = sign;
        sign = -sign;
      }
    }
    return integer_matrix_rank(std::move(mat));
  };

  std::vector<long long> ranks(k + 2, 0);
  for (int s = 1; s <= k; ++s) ranks[s] = boundary_rank(s);

  std::vector<long long> betti(k + 1, 0);
  long long alternating = 0, euler = 0;
  for (int i = 0; i <= k; ++i) {
    long long f = static_cast<long long>(faces[i].size());
    betti[i] = f - ranks[i] - ranks[i + 1];
    alternating += (i % 2 ? -1 : 1) * betti[i];
    euler += (i % 2 ? -1 : 1) * f;
  }
  if (alternating != euler)
    throw std::logic_error("Betti alternating sum disagrees with Euler characteristic");
  for (long long b : betti)
    if (b < 0) throw std::logic_error("negative Betti rank");
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

}  // namespace

BettiTable betti_numbers(const MonomialIdeal& ideal, const ResolutionOptions& opts) {
  if (ideal.is_zero()) throw std::invalid_argument("Betti table of the zero ideal");
  LcmLattice lattice = lcm_lattice(ideal, opts.lattice_cap);

  std::vector<std::vector<long long>> per_degree(lattice.elements.size());
  std::atomic<size_t> next{0};
  std::exception_ptr first_error = nullptr;
  std::mutex error_mutex;

  auto worker = [&]() {
    while (true) {
      size_t idx = next.fetch_add(1);
      if (idx >= lattice.elements.size()) return;
      try {
        per_degree[idx] = koszul_betti(ideal, lattice.elements[idx], opts.matrix_cap);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };

  int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  BettiTable table;
  for (size_t idx = 0; idx < lattice.elements.size(); ++idx)
    for (size_t i = 0; i < per_degree[idx].size(); ++i)
      if (per_degree[idx][i] > 0)
        table.entries.push_back({static_cast<int>(i), lattice.elements[idx],
                                 per_degree[idx][i]});
  std::sort(table.entries.begin(), table.entries.end(),
            [](const BettiEntry& x, const BettiEntry& y) {
              if (x.i != y.i) return x.i < y.i;
              return x.multidegree < y.multidegree;
            });
  return table;
}

int regularity(const MonomialIdeal& ideal, const ResolutionOptions& opts) {
  BettiTable table = betti_numbers(ideal, opts);
  int reg = 0;
  for (const BettiEntry& e : table.entries)
    reg = std::max(reg, e.multidegree.degree() - e.i);
  return reg;
}

int regularity_quotient(const MonomialIdeal& ideal, const ResolutionOptions& opts) {
  return regularity(ideal, opts) - 1;
}

bool has_linear_resolution(const MonomialIdeal& ideal, const ResolutionOptions& opts) {
  if (ideal.is_zero()) throw std::invalid_argument("zero ideal");
  if (deg_min(ideal) != deg_max(ideal)) return false;
  return regularity(ideal, opts) == deg_max(ideal);
}

MonomialIdeal degree_component(const MonomialIdeal& ideal, int d) {
  std::vector<Monomial> gens;
  for (const Monomial& m : monomials_of_degree(ideal.ambient, d))
    if (ideal.contains(m)) gens.push_back(m);
  return minimize(ideal.ambient, std::move(gens));
}

bool is_componentwise_linear(const MonomialIdeal& ideal, const ResolutionOptions& opts) {
  if (ideal.is_zero()) throw std::invalid_argument("zero ideal");
  std::set<int> degrees;
  for (const Monomial& g : ideal.gens) degrees.insert(g.degree());
  for (int d : degrees)
    if (!has_linear_resolution(degree_component(ideal, d), opts)) return false;
  return true;
}

int projective_dimension_quotient(const MonomialIdeal& ideal,
                                  const ResolutionOptions& opts) {
  if (ideal.is_zero()) return 0;
  return 1 + betti_numbers(ideal, opts).max_homological_degree();
}

bool is_cohen_macaulay_graph(const Graph& g, const ResolutionOptions& opts) {
  if (g.edge_count() == 0) return true;  // polynomial ring
  size_t height = SIZE_MAX;
  for (const auto& c : minimal_vertex_covers(g)) height = std::min(height, c.size());
  return projective_dimension_quotient(edge_ideal(g), opts) ==
         static_cast<int>(height);
}

}  // namespace coverideal
