#include "coverideal/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace coverideal {

namespace {

constexpr int kCoverCap = 20;        // subset enumeration bound
constexpr long long kPermCap = 10'000'000;  // canonicalization search bound

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
  if (g.n > 64) throw CapExceeded("graph too large for mask operations");
  std::vector<std::uint64_t> adj(g.n, 0);
  for (auto [a, b] : g.edges) {
    adj[a - 1] |= 1ull << (b - 1);
    adj[b - 1] |= 1ull << (a - 1);
  }
  return adj;
}

}  // namespace

Graph::Graph(int n_, std::vector<std::pair<int, int>> e) : n(n_), edges(std::move(e)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& [a, b] : edges) {
    if (a == b) throw std::invalid_argument("loop edge");
    if (a > b) std::swap(a, b);
    if (a < 1 || b > n) throw std::invalid_argument("edge endpoint out of range");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
}

bool Graph::has_edge(int a, int b) const {
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto [a, b] : edges) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

bool Graph::is_connected() const {
  if (n <= 1) return true;
  std::vector<char> seen(n + 1, 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int count = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        q.push(u);
      }
  }
  return count == n;
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i) e.push_back({i, i % n + 1});
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n; ++i) e.push_back({i, i + 1});
  return Graph(n, std::move(e));
}

Graph star_graph(int n) {
  if (n < 1) throw std::invalid_argument("star needs at least 1 vertex");
  std::vector<std::pair<int, int>> e;
  for (int i = 2; i <= n; ++i) e.push_back({1, i});
  return Graph(n, std::move(e));
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  return Graph(n, std::move(e));
}

std::vector<std::vector<int>> minimal_vertex_covers(const Graph& g) {
  if (g.n > kCoverCap) throw CapExceeded("cover enumeration capped at 20 vertices");
  auto adj = adjacency_masks(g);
  std::vector<std::vector<int>> covers;
  const std::uint64_t all = (g.n == 64) ? ~0ull : (1ull << g.n) - 1;
  for (std::uint64_t mask = 0; mask <= all; ++mask) {
    std::uint64_t out = all & ~mask;
    bool is_cover = true;
    for (std::uint64_t rest = out; rest && is_cover;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      if (adj[v] & out) is_cover = false;
    }
    if (!is_cover) continue;
    // minimal iff every chosen vertex has a neighbor outside the cover
    bool minimal = true;
    for (std::uint64_t rest = mask; rest && minimal;) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      if (!(adj[v] & out)) minimal = false;
    }
    if (!minimal) continue;
    std::vector<int> c;
    for (int v = 1; v <= g.n; ++v)
      if ((mask >> (v - 1)) & 1) c.push_back(v);
    covers.push_back(std::move(c));
    if (g.n == 64) break;  // avoid wraparound; unreachable under the cap
  }
  std::sort(covers.begin(), covers.end());
  return covers;
}

MonomialIdeal cover_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (const auto& c : minimal_vertex_covers(g)) {
    std::vector<int> e(g.n, 0);
    for (int v : c) e[v - 1] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return minimize(g.n, std::move(gens));
}

MonomialIdeal edge_ideal(const Graph& g) {
  std::vector<Monomial> gens;
  for (auto [a, b] : g.edges) {
    std::vector<int> e(g.n, 0);
    e[a - 1] = e[b - 1] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return minimize(g.n, std::move(gens));
}

bool is_unmixed(const Graph& g) {
  auto covers = minimal_vertex_covers(g);
  for (const auto& c : covers)
    if (c.size() != covers.front().size()) return false;
  return true;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> color(g.n + 1, 0);
  for (int s = 1; s <= g.n; ++s) {
    if (color[s]) continue;
    color[s] = 1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (!color[u]) {
          color[u] = -color[v];
          q.push(u);
        } else if (color[u] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

int girth(const Graph& g) {
  int best = 0;
  for (int s = 1; s <= g.n; ++s) {
    std::vector<int> dist(g.n + 1, -1), parent(g.n + 1, 0);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int u : g.neighbors(v)) {
        if (dist[u] < 0) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (u != parent[v]) {
          int len = dist[v] + dist[u] + 1;
          if (best == 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

namespace {

struct BiconnectedScan {
  const Graph& g;
  std::vector<int> depth, low;
  std::vector<std::pair<int, int>> stack;
  std::vector<std::vector<std::pair<int, int>>> components;

  explicit BiconnectedScan(const Graph& graph)
      : g(graph), depth(graph.n + 1, -1), low(graph.n + 1, 0) {}

  void dfs(int v, int parent_edge_to) {
    low[v] = depth[v];
    for (int u : g.neighbors(v)) {
      if (depth[u] < 0) {
        depth[u] = depth[v] + 1;
        stack.push_back({v, u});
        dfs(u, v);
        low[v] = std::min(low[v], low[u]);
        if (low[u] >= depth[v]) {
          components.push_back({});
          while (true) {
            auto e = stack.back();
            stack.pop_back();
            components.back().push_back(e);
            if (e == std::make_pair(v, u)) break;
          }
        }
      } else if (u != parent_edge_to && depth[u] < depth[v]) {
        stack.push_back({v, u});
        low[v] = std::min(low[v], depth[u]);
      }
    }
  }

  void run() {
    for (int v = 1; v <= g.n; ++v)
      if (depth[v] < 0) {
        depth[v] = 0;
        dfs(v, 0);
      }
  }
};

}  // namespace

bool is_cactus(const Graph& g) {
  BiconnectedScan scan(g);
  scan.run();
  for (const auto& comp : scan.components) {
    if (comp.size() == 1) continue;  // bridge
    std::vector<int> verts;
    for (auto [a, b] : comp) {
      verts.push_back(a);
      verts.push_back(b);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    if (comp.size() != verts.size()) return false;  // not a plain cycle
  }
  return true;
}

bool is_chordal(const Graph& g) {
  if (g.n == 0) return true;
  // maximum cardinality search, then verify the reversed order is a perfect
  // elimination order via the parent trick
  std::vector<int> weight(g.n + 1, 0), pick_order;
  std::vector<char> picked(g.n + 1, 0);
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 1; v <= g.n; ++v)
      if (!picked[v] && (best < 0 || weight[v] > weight[best])) best = v;
    picked[best] = 1;
    pick_order.push_back(best);
    for (int u : g.neighbors(best))
      if (!picked[u]) ++weight[u];
  }
  std::vector<int> pos(g.n + 1, 0);  // elimination position, 1 = first out
  for (int i = 0; i < g.n; ++i) pos[pick_order[i]] = g.n - i;
  for (int v = 1; v <= g.n; ++v) {
    std::vector<int> later;
    for (int u : g.neighbors(v))
      if (pos[u] > pos[v]) later.push_back(u);
    if (later.empty()) continue;
    int p = *std::min_element(later.begin(), later.end(),
                              [&](int a, int b) { return pos[a] < pos[b]; });
    for (int u : later)
      if (u != p && !g.has_edge(p, u)) return false;
  }
  return true;
}

Graph clique_whisker(const Graph& g, const CliquePartition& pi) {
  std::vector<char> seen(g.n + 1, 0);
  for (const auto& part : pi.parts) {
    if (part.empty()) throw std::invalid_argument("empty part");
    for (int v : part) {
      if (v < 1 || v > g.n) throw std::invalid_argument("part vertex out of range");
      if (seen[v]) throw std::invalid_argument("parts not disjoint");
      seen[v] = 1;
    }
    for (size_t i = 0; i < part.size(); ++i)
      for (size_t j = i + 1; j < part.size(); ++j)
        if (!g.has_edge(part[i], part[j]))
          throw std::invalid_argument("part is not a clique");
  }
  for (int v = 1; v <= g.n; ++v)
    if (!seen[v]) throw std::invalid_argument("parts do not cover the graph");

  int t = static_cast<int>(pi.parts.size());
  std::vector<std::pair<int, int>> e = g.edges;
  for (int i = 0; i < t; ++i)
    for (int v : pi.parts[i]) e.push_back({v, g.n + 1 + i});
  return Graph(g.n + t, std::move(e));
}

CliquePartition singleton_partition(const Graph& g) {
  CliquePartition pi;
  for (int v = 1; v <= g.n; ++v) pi.parts.push_back({v});
  return pi;
}

Graph whisker(const Graph& g) { return clique_whisker(g, singleton_partition(g)); }

namespace {

// iterated refinement: colors start as degrees and absorb sorted neighbor
// colors until stable; class ids are assigned by sorted signature, so they
// are isomorphism invariants
std::vector<int> refinement_colors(const Graph& g) {
  std::vector<int> color(g.n);
  for (int v = 1; v <= g.n; ++v) color[v - 1] = g.degree(v);
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> sig(g.n);
    for (int v = 1; v <= g.n; ++v) {
      std::vector<int> s;
      s.push_back(color[v - 1]);
      std::vector<int> nb;
      for (int u : g.neighbors(v)) nb.push_back(color[u - 1]);
      std::sort(nb.begin(), nb.end());
      s.insert(s.end(), nb.begin(), nb.end());
      sig[v - 1] = {std::move(s), v - 1};
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> next(g.n);
    int id = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
      if (i > 0 && sorted[i].first != sorted[i - 1].first) ++id;
      next[sorted[i].second] = id;
    }
    if (next == color) return color;
    color = std::move(next);
  }
}

std::vector<std::uint64_t> edge_bits(const Graph& g, const std::vector<int>& newlabel) {
  // bit index for pair (i<j) in the relabeled graph, row-major upper triangle
  int n = g.n;
  int total = n * (n - 1) / 2;
  std::vector<std::uint64_t> bits((total + 63) / 64, 0);
  for (auto [a, b] : g.edges) {
    int i = newlabel[a - 1], j = newlabel[b - 1];
    if (i > j) std::swap(i, j);
    int idx = i * n - i * (i + 1) / 2 + (j - i - 1);
    bits[idx / 64] |= 1ull << (idx % 64);
  }
  return bits;
}

}  // namespace

std::vector<std::uint64_t> canonical_key(const Graph& g) {
  if (g.n == 0) return {};
  std::vector<int> color = refinement_colors(g);
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  std::vector<std::vector<int>> members(classes);
  for (int v = 0; v < g.n; ++v) members[color[v]].push_back(v);

  long long work = 1;
  for (const auto& m : members) {
    for (size_t k = 2; k <= m.size(); ++k) {
      work *= static_cast<long long>(k);
      if (work > kPermCap) throw CapExceeded("canonical form search too large");
    }
  }

  std::vector<int> newlabel(g.n, -1);
  std::vector<std::uint64_t> best;
  bool have = false;
  // enumerate relabelings consistent with the class order, take the least key
  std::function<void(int, int)> rec = [&](int cls, int next_position) {
    if (cls == classes) {
      auto bits = edge_bits(g, newlabel);
      if (!have || bits < best) {
        best = std::move(bits);
        have = true;
      }
      return;
    }
    std::vector<int>& m = members[cls];
    std::sort(m.begin(), m.end());
    do {
      for (size_t k = 0; k < m.size(); ++k) newlabel[m[k]] = next_position + static_cast<int>(k);
      rec(cls + 1, next_position + static_cast<int>(m.size()));
    } while (std::next_permutation(m.begin(), m.end()));
  };
  rec(0, 0);
  return best;
}

Graph canonical_form(const Graph& g) {
  auto want = canonical_key(g);
  std::vector<int> color = refinement_colors(g);
  int classes = g.n ? *std::max_element(color.begin(), color.end()) + 1 : 0;
  std::vector<std::vector<int>> members(classes);
  for (int v = 0; v < g.n; ++v) members[color[v]].push_back(v);

  std::vector<int> newlabel(g.n, -1);
  Graph result;
  bool done = false;
  std::function<void(int, int)> rec = [&](int cls, int next_position) {
    if (done) return;
    if (cls == classes) {
      if (edge_bits(g, newlabel) == want) {
        std::vector<std::pair<int, int>> e;
        for (auto [a, b] : g.edges)
          e.push_back({newlabel[a - 1] + 1, newlabel[b - 1] + 1});
        result = Graph(g.n, std::move(e));
        done = true;
      }
      return;
    }
    std::vector<int> m = members[cls];
    std::sort(m.begin(), m.end());
    do {
      for (size_t k = 0; k < m.size(); ++k) newlabel[m[k]] = next_position + static_cast<int>(k);
      rec(cls + 1, next_position + static_cast<int>(m.size()));
      if (done) return;
    } while (std::next_permutation(m.begin(), m.end()));
  };
  if (g.n == 0) return g;
  rec(0, 0);
  return result;
}

std::vector<Graph> graphs_up_to_iso(int n) {
  if (n < 1) throw std::invalid_argument("need at least one vertex");
  if (n > 8) throw CapExceeded("graph enumeration capped at 8 vertices");
  std::vector<Graph> reps = {Graph(1, {})};
  for (int k = 1; k < n; ++k) {
    std::map<std::vector<std::uint64_t>, Graph> next;
    for (const Graph& g : reps) {
      for (int subset = 0; subset < (1 << k); ++subset) {
        std::vector<std::pair<int, int>> e = g.edges;
        for (int v = 1; v <= k; ++v)
          if ((subset >> (v - 1)) & 1) e.push_back({v, k + 1});
        Graph h(k + 1, std::move(e));
        auto key = canonical_key(h);
        if (!next.count(key)) next.emplace(std::move(key), canonical_form(h));
      }
    }
    reps.clear();
    for (auto& [key, g] : next) reps.push_back(std::move(g));
  }
  return reps;
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  for (const Graph& g : graphs_up_to_iso(n))
    if (g.is_connected()) out.push_back(g);
  return out;
}

}  // namespace coverideal
