#include <catch2/catch.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "coverideal/graph.hpp"

using namespace coverideal;

// maximal independent sets by brute force, as an independent cover oracle
static std::vector<std::vector<int>> oracle_max_independent(const Graph& g) {
  std::vector<std::vector<int>> indep;
  for (int mask = 0; mask < (1 << g.n); ++mask) {
    bool ok = true;
    for (auto [a, b] : g.edges)
      if (((mask >> (a - 1)) & 1) && ((mask >> (b - 1)) & 1)) { ok = false; break; }
    if (ok) {
      std::vector<int> s;
      for (int v = 1; v <= g.n; ++v)
        if ((mask >> (v - 1)) & 1) s.push_back(v);
      indep.push_back(s);
    }
  }
  std::vector<std::vector<int>> out;
  for (const auto& s : indep) {
    bool maximal = true;
    for (const auto& t : indep)
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end()))
        maximal = false;
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

static Graph random_graph(std::mt19937& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (coin(rng)) e.push_back({i, j});
  return Graph(n, std::move(e));
}

static Graph random_relabel(std::mt19937& rng, const Graph& g) {
  std::vector<int> perm(g.n);
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::pair<int, int>> e;
  for (auto [a, b] : g.edges) e.push_back({perm[a - 1], perm[b - 1]});
  return Graph(g.n, std::move(e));
}

TEST_CASE("constructors and normalization") {
  Graph c3 = cycle_graph(3);
  CHECK(c3.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(cycle_graph(5).edge_count() == 5);
  CHECK(star_graph(4).edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 4}});
  CHECK(path_graph(4).edge_count() == 3);
  CHECK(complete_graph(4).edge_count() == 6);
  CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 2}}), std::invalid_argument);
  CHECK(Graph(3, {{2, 1}, {1, 2}}).edge_count() == 1);  // normalized
  CHECK(cycle_graph(5).neighbors(1) == std::vector<int>{2, 5});
  CHECK(cycle_graph(5).is_connected());
  CHECK_FALSE(Graph(3, {{1, 2}}).is_connected());
}

TEST_CASE("minimal vertex covers of small cycles") {
  CHECK(minimal_vertex_covers(cycle_graph(3)) ==
        std::vector<std::vector<int>>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(minimal_vertex_covers(cycle_graph(5)) ==
        std::vector<std::vector<int>>{
            {1, 2, 4}, {1, 3, 4}, {1, 3, 5}, {2, 3, 5}, {2, 4, 5}});
  CHECK(minimal_vertex_covers(Graph(3, {})) == std::vector<std::vector<int>>{{}});
}

TEST_CASE("covers are minimal, hit every edge, and complement the maximal independent sets") {
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(rng, 3 + trial % 5, 0.4);
    auto covers = minimal_vertex_covers(g);
    for (const auto& c : covers) {
      for (auto [a, b] : g.edges)
        CHECK((std::binary_search(c.begin(), c.end(), a) ||
               std::binary_search(c.begin(), c.end(), b)));
      for (const auto& d : covers)
        if (&c != &d)
          CHECK_FALSE(std::includes(c.begin(), c.end(), d.begin(), d.end()));
    }
    std::set<std::vector<int>> complements;
    for (const auto& s : oracle_max_independent(g)) {
      std::vector<int> c;
      for (int v = 1; v <= g.n; ++v)
        if (!std::binary_search(s.begin(), s.end(), v)) c.push_back(v);
      complements.insert(c);
    }
    CHECK(std::set<std::vector<int>>(covers.begin(), covers.end()) == complements);
  }
}

TEST_CASE("cover and edge ideals") {
  MonomialIdeal j3 = cover_ideal(cycle_graph(3));
  CHECK(j3.gens.size() == 3);
  CHECK(j3.contains(Monomial({1, 1, 0})));

  MonomialIdeal j5 = cover_ideal(cycle_graph(5));
  CHECK(j5.gens.size() == 5);
  for (const Monomial& g : j5.gens) CHECK(g.degree() == 3);
  CHECK(is_unmixed(cycle_graph(5)));

  MonomialIdeal e4 = edge_ideal(cycle_graph(4));
  CHECK(e4.gens.size() == 4);
  CHECK(e4.contains(Monomial({1, 1, 0, 0})));
  CHECK(e4.contains(Monomial({1, 0, 0, 1})));
  CHECK_FALSE(e4.contains(Monomial({1, 0, 1, 0})));

  CHECK(cover_ideal(Graph(2, {})) == MonomialIdeal::unit(2));
  CHECK(edge_ideal(Graph(2, {})) == MonomialIdeal::zero(2));
}

TEST_CASE("cover ideal equals edge-wise intersection and the dual of the edge ideal") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    Graph g = random_graph(rng, 3 + trial % 6, 0.45);
    if (g.edge_count() == 0) continue;
    MonomialIdeal jc = cover_ideal(g);
    std::vector<MonomialIdeal> parts;
    for (auto [a, b] : g.edges)
      parts.push_back(MonomialIdeal::variables(g.n, {a, b}));
    CHECK(jc == intersect_many(parts));
    CHECK(jc == alexander_dual(edge_ideal(g)));
  }
}

TEST_CASE("unmixedness of odd cycles") {
  CHECK(is_unmixed(cycle_graph(3)));
  CHECK(is_unmixed(cycle_graph(5)));
  CHECK(is_unmixed(cycle_graph(7)));
  CHECK_FALSE(is_unmixed(cycle_graph(9)));
  CHECK_FALSE(is_unmixed(star_graph(4)));
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(cycle_graph(4)));
  CHECK(is_bipartite(cycle_graph(6)));
  CHECK(is_bipartite(path_graph(5)));
  CHECK(is_bipartite(Graph(3, {})));
  CHECK_FALSE(is_bipartite(cycle_graph(3)));
  CHECK_FALSE(is_bipartite(cycle_graph(7)));
  CHECK_FALSE(is_bipartite(complete_graph(4)));
}

TEST_CASE("girth") {
  CHECK(girth(cycle_graph(3)) == 3);
  CHECK(girth(cycle_graph(9)) == 9);
  CHECK(girth(complete_graph(4)) == 3);
  CHECK(girth(path_graph(6)) == 0);
  CHECK(girth(Graph(4, {})) == 0);
  CHECK(girth(whisker(cycle_graph(5))) == 5);
  // two triangles sharing a vertex
  Graph bowtie(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(girth(bowtie) == 3);
}

TEST_CASE("cactus recognition") {
  CHECK(is_cactus(cycle_graph(5)));
  CHECK(is_cactus(path_graph(6)));
  CHECK(is_cactus(Graph(5, {{1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})));
  CHECK_FALSE(is_cactus(complete_graph(4)));
  CHECK_FALSE(is_cactus(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}})));
  CHECK(is_cactus(whisker(cycle_graph(5))));
}

TEST_CASE("chordality") {
  CHECK(is_chordal(complete_graph(4)));
  CHECK(is_chordal(path_graph(6)));
  CHECK(is_chordal(star_graph(5)));
  CHECK(is_chordal(cycle_graph(3)));
  CHECK_FALSE(is_chordal(cycle_graph(4)));
  CHECK_FALSE(is_chordal(cycle_graph(5)));
  // C4 plus a chord is chordal
  CHECK(is_chordal(Graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}, {1, 3}})));
  // C5 plus one chord still has an induced C4
  CHECK_FALSE(is_chordal(Graph(5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}, {1, 3}})));
}

TEST_CASE("chordality matches simplicial-elimination oracle on random graphs") {
  // oracle: repeatedly remove a vertex whose neighborhood is a clique
  auto oracle = [](Graph g) {
    std::vector<char> gone(g.n + 1, 0);
    int remaining = g.n;
    while (remaining > 0) {
      int pick = 0;
      for (int v = 1; v <= g.n && !pick; ++v) {
        if (gone[v]) continue;
        std::vector<int> nb;
        for (int u : g.neighbors(v))
          if (!gone[u]) nb.push_back(u);
        bool clique = true;
        for (size_t i = 0; i < nb.size() && clique; ++i)
          for (size_t j = i + 1; j < nb.size() && clique; ++j)
            if (!g.has_edge(nb[i], nb[j])) clique = false;
        if (clique) pick = v;
      }
      if (!pick) return false;
      gone[pick] = 1;
      --remaining;
    }
    return true;
  };
  std::mt19937 rng(787878);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_graph(rng, 4 + trial % 4, 0.5);
    CHECK(is_chordal(g) == oracle(g));
  }
}

TEST_CASE("whiskering") {
  Graph t = clique_whisker(complete_graph(2), CliquePartition{{{1, 2}}});
  CHECK(t.n == 3);
  CHECK(t.edges == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

  Graph w5 = whisker(cycle_graph(5));
  CHECK(w5.n == 10);
  CHECK(w5.edge_count() == 10);
  CHECK(w5.has_edge(1, 6));
  CHECK(w5.has_edge(5, 10));

  Graph p3 = path_graph(3);
  Graph cw = clique_whisker(p3, CliquePartition{{{1, 2}, {3}}});
  CHECK(cw.n == 5);
  CHECK(cw.edges == std::vector<std::pair<int, int>>{
                        {1, 2}, {1, 4}, {2, 3}, {2, 4}, {3, 5}});

  CHECK_THROWS_AS(clique_whisker(p3, CliquePartition{{{1, 3}, {2}}}),
                  std::invalid_argument);  // 1,3 not adjacent
  CHECK_THROWS_AS(clique_whisker(p3, CliquePartition{{{1, 2}}}),
                  std::invalid_argument);  // does not cover
  CHECK_THROWS_AS(clique_whisker(p3, CliquePartition{{{1, 2}, {2, 3}}}),
                  std::invalid_argument);  // not disjoint
}

TEST_CASE("clique-whiskered graphs have covers of one size") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 12; ++trial) {
    Graph g = random_graph(rng, 3 + trial % 4, 0.5);
    Graph w = whisker(g);
    MonomialIdeal j = cover_ideal(w);
    CHECK(deg_min(j) == g.n);
    CHECK(deg_max(j) == g.n);
  }
  // a non-trivial partition example: triangle with one part the whole clique
  Graph k3 = complete_graph(3);
  MonomialIdeal j = cover_ideal(clique_whisker(k3, CliquePartition{{{1, 2, 3}}}));
  CHECK(deg_min(j) == 3);
  CHECK(deg_max(j) == 3);
}

TEST_CASE("canonical form is an isomorphism invariant") {
  std::mt19937 rng(5555);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_graph(rng, 2 + trial % 6, 0.5);
    Graph h = random_relabel(rng, g);
    CHECK(canonical_key(g) == canonical_key(h));
    CHECK(canonical_form(g) == canonical_form(h));
    Graph c = canonical_form(g);
    CHECK(canonical_key(c) == canonical_key(g));
    CHECK(c.edge_count() == g.edge_count());
  }
  // same degree sequences, different graphs
  Graph c6 = cycle_graph(6);
  Graph two_triangles(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
  CHECK(canonical_key(c6) != canonical_key(two_triangles));
  Graph k13 = star_graph(4);
  Graph p4 = path_graph(4);
  CHECK(canonical_key(k13) != canonical_key(p4));
}

TEST_CASE("graph census matches the known counts") {
  const std::vector<size_t> all = {1, 2, 4, 11, 34, 156};
  const std::vector<size_t> connected = {1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    CHECK(graphs_up_to_iso(n).size() == all[n - 1]);
    CHECK(connected_graphs_up_to_iso(n).size() == connected[n - 1]);
  }
  for (const Graph& g : graphs_up_to_iso(4)) CHECK(g.n == 4);
}
