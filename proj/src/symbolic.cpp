#include "coverideal/symbolic.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>

namespace coverideal {

namespace {

constexpr int kCycleVertexCap = 14;
constexpr std::uint64_t kCycleCountCap = 5'000'000;

std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
  std::vector<std::uint64_t> adj(g.n, 0);
  for (auto [a, b] : g.edges) {
    adj[a - 1] |= 1ull << (b - 1);
    adj[b - 1] |= 1ull << (a - 1);
  }
  return adj;
}

// gens {x_i^a x_j^{s-a} : 0 <= a <= s} of the s-th power of (x_i, x_j)
MonomialIdeal edge_prime_power(int ambient, int i, int j, int s) {
  std::vector<Monomial> gens;
  for (int a = 0; a <= s; ++a) {
    Monomial m = Monomial::unit(ambient);
    m.exps[i - 1] = a;
    m.exps[j - 1] = s - a;
    gens.push_back(m);
  }
  return minimize(ambient, gens);
}

struct CycleScan {
  const Graph* g = nullptr;
  std::vector<std::uint64_t> adj;
  std::uint64_t full = 0;
  std::uint64_t count = 0;
  bool all_odd_cycles_dominating = true;

  // neighborhood of the cycle = union of adjacency masks over its vertices
  void visit_cycle(const std::vector<int>& path) {
    if (++count > kCycleCountCap)
      throw CapExceeded("cycle enumeration exceeded " + std::to_string(kCycleCountCap));
    if (path.size() % 2 == 0) return;
    std::uint64_t nb = 0;
    for (int v : path) nb |= adj[v];
    if (nb != full) all_odd_cycles_dominating = false;
  }

  // extend a simple path rooted at its minimal vertex; a cycle is recorded
  // once by requiring the second vertex to be smaller than the last
  void extend(std::vector<int>& path, std::uint64_t used) {
    int root = path.front();
    int tip = path.back();
    for (int v = root + 1; v < g->n; ++v) {
      if (!(adj[tip] >> v & 1)) continue;
      if (used >> v & 1) {
        continue;
      }
      path.push_back(v);
      if (path.size() >= 3 && (adj[v] >> root & 1) && path[1] < v) visit_cycle(path);
      if (all_odd_cycles_dominating) extend(path, used | 1ull << v);
      path.pop_back();
      if (!all_odd_cycles_dominating) return;
    }
  }
};

std::uint64_t set_mask(const std::vector<int>& verts) {
  std::uint64_t m = 0;
  for (int v : verts) m |= 1ull << (v - 1);
  return m;
}

std::vector<int> mask_to_set(std::uint64_t m, int n) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (m >> (v - 1) & 1) out.push_back(v);
  return out;
}

void validate_cocomplex(const CoComplex& nabla) {
  int ground = nabla.ground_size();
  if (ground <= 0 || ground > 20)
    throw std::invalid_argument("co-complex ground set must have 1..20 vertices");
  std::vector<bool> seen(ground + 1, false);
  for (const auto& part : nabla.parts) {
    if (part.empty()) throw std::invalid_argument("empty part in co-complex partition");
    for (int v : part) {
      if (v < 1 || v > ground || seen[v])
        throw std::invalid_argument("parts must partition the ground set");
      seen[v] = true;
    }
  }
  std::vector<std::uint64_t> masks;
  for (const auto& f : nabla.min_faces) {
    for (int v : f)
      if (v < 1 || v > ground) throw std::invalid_argument("face vertex out of range");
    masks.push_back(set_mask(f));
  }
  for (size_t a = 0; a < masks.size(); ++a)
    for (size_t b = 0; b < masks.size(); ++b)
      if (a != b && (masks[a] & masks[b]) == masks[a])
        throw std::invalid_argument("minimal faces must form an antichain");
}

}  // namespace

MonomialIdeal symbolic_power(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
  if (g.edges.empty()) return MonomialIdeal::unit(g.n);
  std::vector<MonomialIdeal> factors;
  for (const auto& [i, j] : g.edges) factors.push_back(edge_prime_power(g.n, i, j, s));
  return intersect_many(factors);
}

bool check_odd_cycle_neighborhood(const Graph& g) {
  if (g.n > kCycleVertexCap)
    throw CapExceeded("cycle enumeration capped at " + std::to_string(kCycleVertexCap) +
                      " vertices");
  CycleScan scan;
  scan.g = &g;
  scan.adj = neighbor_masks(g);
  scan.full = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
  for (int root = 0; root < g.n && scan.all_odd_cycles_dominating; ++root) {
    std::vector<int> path{root};
    scan.extend(path, 1ull << root);
  }
  return scan.all_odd_cycles_dominating;
}

MonomialIdeal herzog_symbolic(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("symbolic power exponent must be >= 1");
  if (g.edges.empty()) return MonomialIdeal::unit(g.n);
  if (!check_odd_cycle_neighborhood(g))
    throw std::invalid_argument("some odd cycle fails the neighborhood hypothesis");
  MonomialIdeal j = cover_ideal(g);
  std::vector<int> all_ones(g.n, 1);
  Monomial everything(all_ones);
  std::vector<MonomialIdeal> pieces{power(j, s)};
  Monomial scale = Monomial::unit(g.n);
  for (int i = 1; 2 * i <= s; ++i) {
    scale = scale.times(everything);
    pieces.push_back(multiply(power(j, s - 2 * i), minimize(g.n, {scale})));
  }
  return sum_many(pieces);
}

bool truncation_equality_check(const Graph& g, int s) {
  if (s < 1) throw std::invalid_argument("truncation exponent must be >= 1");
  if (g.n < 3 || g.n % 2 == 0 || !g.is_connected() ||
      static_cast<int>(g.edges.size()) != g.n)
    throw std::invalid_argument("truncation check expects an odd cycle");
  for (int v = 1; v <= g.n; ++v)
    if (g.degree(v) != 2) throw std::invalid_argument("truncation check expects an odd cycle");
  MonomialIdeal j = cover_ideal(g);
  int cut = s * deg_max(j);
  return truncate(symbolic_power(g, s), cut) == truncate(power(j, s), cut);
}

int CoComplex::ground_size() const {
  int total = 0;
  for (const auto& part : parts) total += static_cast<int>(part.size());
  return total;
}

std::vector<std::vector<int>> CoComplex::all_faces() const {
  validate_cocomplex(*this);
  int ground = ground_size();
  std::vector<std::uint64_t> mins;
  for (const auto& f : min_faces) mins.push_back(set_mask(f));
  std::vector<std::vector<int>> faces;
  for (std::uint64_t m = 0; m < (1ull << ground); ++m) {
    bool in = false;
    for (std::uint64_t lo : mins)
      if ((m & lo) == lo) {
        in = true;
        break;
      }
    if (in) faces.push_back(mask_to_set(m, ground));
  }
  return faces;
}

MonomialIdeal face_ideal(const CoComplex& nabla) {
  auto faces = nabla.all_faces();
  int ground = nabla.ground_size();
  int t = static_cast<int>(nabla.parts.size());
  int ambient = ground + t;
  std::vector<Monomial> gens;
  for (const auto& face : faces) {
    Monomial u = Monomial::unit(ambient);
    for (int v : face) u.exps[v - 1] = 1;
    for (int p = 0; p < t; ++p) {
      int inside = 0;
      for (int v : nabla.parts[p])
        if (std::binary_search(face.begin(), face.end(), v)) ++inside;
      u.exps[ground + p] = static_cast<int>(nabla.parts[p].size()) - inside;
    }
    gens.push_back(u);
  }
  if (gens.empty()) return MonomialIdeal::zero(ambient);
  return minimize(ambient, gens);
}

CoComplex cover_cocomplex(const Graph& w, const Graph& g, const CliquePartition& pi) {
  Graph expected = clique_whisker(g, pi);
  if (!(w.n == expected.n && w.edges == expected.edges))
    throw std::invalid_argument("graph is not the clique-whisker of the base graph");
  std::uint64_t ground_mask = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
  std::set<std::uint64_t> traces;
  for (const auto& cover : minimal_vertex_covers(w)) traces.insert(set_mask(cover) & ground_mask);
  // the trace family must be closed upward inside V(G); single-vertex steps
  // suffice by induction
  for (std::uint64_t tr : traces)
    for (int v = 0; v < g.n; ++v)
      if (!(tr >> v & 1) && !traces.count(tr | 1ull << v))
        throw std::logic_error("cover traces are not upward closed");
  CoComplex nabla;
  nabla.parts = pi.parts;
  for (std::uint64_t tr : traces) {
    bool minimal = true;
    for (std::uint64_t other : traces)
      if (other != tr && (other & tr) == other) {
        minimal = false;
        break;
      }
    if (minimal) nabla.min_faces.push_back(mask_to_set(tr, g.n));
  }
  std::sort(nabla.min_faces.begin(), nabla.min_faces.end());
  return nabla;
}

MonomialIdeal l_ideal(const Graph& g, int s, int t) {
  if (s < 1) throw std::invalid_argument("power must be >= 1");
  if (t < 0 || 2 * t > s) throw std::invalid_argument("need 0 <= 2t <= s");
  Graph w = whisker(g);
  MonomialIdeal j = cover_ideal(w);
  std::vector<int> all_ones(w.n, 1);
  Monomial everything(all_ones);
  std::vector<MonomialIdeal> pieces{power(j, s)};
  Monomial scale = Monomial::unit(w.n);
  for (int i = 1; i <= t; ++i) {
    scale = scale.times(everything);
    pieces.push_back(multiply(power(j, s - 2 * i), minimize(w.n, {scale})));
  }
  return sum_many(pieces);
}

SymbolicPowerReport symbolic_report(const Graph& g, int s) {
  SymbolicPowerReport rep;
  rep.graph = g;
  rep.s = s;
  rep.via_intersection = symbolic_power(g, s);
  if (g.n <= kCycleVertexCap && check_odd_cycle_neighborhood(g)) {
    rep.via_formula = herzog_symbolic(g, s);
    rep.equal = rep.via_intersection == *rep.via_formula;
  } else {
    rep.equal = false;
  }
  return rep;
}

}  // namespace coverideal
