#include <catch2/catch.hpp>

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <map>
#include <random>
#include <set>

#include "coverideal/graph.hpp"
#include "coverideal/resolution.hpp"

using namespace coverideal;

// ---------------------------------------------------------------------------
// oracle: Betti numbers from the Taylor complex reduced modulo the maximal
// ideal, with ranks over the rationals by plain Gaussian elimination. every
// step is independent of the library's Koszul/Bareiss route.
// ---------------------------------------------------------------------------

using Rat = boost::rational<boost::multiprecision::cpp_int>;

static long long oracle_rank(std::vector<std::vector<Rat>> m) {
  size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  long long rank = 0;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && m[pivot][col] == Rat(0)) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[row], m[pivot]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == Rat(0)) continue;
      Rat factor = m[i][col] / m[row][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

using BettiMap = std::map<std::pair<int, std::vector<int>>, long long>;

static BettiMap oracle_betti(const MonomialIdeal& I) {
  const int r = static_cast<int>(I.gens.size());
  REQUIRE(r <= 14);
  std::vector<std::vector<int>> lcms(1u << r);
  lcms[0] = Monomial::unit(I.ambient).exps;
  for (std::uint32_t mask = 1; mask < (1u << r); ++mask) {
    int low = __builtin_ctz(mask);
    Monomial rest(lcms[mask & (mask - 1)]);
    lcms[mask] = lcm(rest, I.gens[low]).exps;
  }
  // strand basis: multidegree -> homological degree -> subsets
  std::map<std::vector<int>, std::map<int, std::vector<std::uint32_t>>> strands;
  for (std::uint32_t mask = 0; mask < (1u << r); ++mask)
    strands[lcms[mask]][__builtin_popcount(mask)].push_back(mask);

  BettiMap out;
  for (auto& [a, levels] : strands) {
    // differential within the strand: drop a generator, keep the arrow only
    // when the lcm is unchanged
    auto boundary_rank = [&](int j) -> long long {
      if (!levels.count(j) || !levels.count(j - 1)) return 0;
      const auto& cols_basis = levels[j];
      const auto& rows_basis = levels[j - 1];
      std::vector<std::vector<Rat>> mat(rows_basis.size(),
                                        std::vector<Rat>(cols_basis.size(), Rat(0)));
      for (size_t c = 0; c < cols_basis.size(); ++c) {
        std::uint32_t mask = cols_basis[c];
        int sign = 1;
        for (std::uint32_t rest = mask; rest;) {
          int bit = __builtin_ctz(rest);
          rest &= rest - 1;
          std::uint32_t sub = mask & ~(1u << bit);
          if (lcms[sub] == lcms[mask]) {
            auto it = std::lower_bound(rows_basis.begin(), rows_basis.end(), sub);
            if (it != rows_basis.end() && *it == sub)
              mat[it - rows_basis.begin()][c] = Rat(sign);
          }
          sign = -sign;
        }
      }
      return oracle_rank(std::move(mat));
    };
    int top = levels.rbegin()->first;
    for (int j = 1; j <= top; ++j) {
      long long dim = levels.count(j) ? levels[j].size() : 0;
      long long h = dim - boundary_rank(j) - boundary_rank(j + 1);
      REQUIRE(h >= 0);
      if (h > 0) out[{j - 1, a}] = h;  // beta_{i,a}(I) = H_{i+1}(R/I strand)
    }
  }
  return out;
}

static BettiMap to_map(const BettiTable& t) {
  BettiMap out;
  for (const BettiEntry& e : t.entries) out[{e.i, e.multidegree.exps}] = e.rank;
  return out;
}

static long long oracle_regularity(const BettiMap& m) {
  long long reg = 0;
  for (const auto& [key, rank] : m) {
    long long deg = 0;
    for (int e : key.second) deg += e;
    reg = std::max(reg, deg - key.first);
  }
  return reg;
}

static MonomialIdeal ideal_of(int n, std::vector<std::vector<int>> exps) {
  std::vector<Monomial> g;
  for (auto& e : exps) g.push_back(Monomial(std::move(e)));
  return minimize(n, std::move(g));
}

static MonomialIdeal random_ideal(std::mt19937& rng, int n, int max_gens, int max_deg) {
  std::uniform_int_distribution<int> deg(1, max_deg);
  std::uniform_int_distribution<int> cnt(2, max_gens);
  std::vector<Monomial> g;
  int k = cnt(rng);
  for (int i = 0; i < k; ++i) {
    std::vector<int> e(n, 0);
    int d = deg(rng);
    std::uniform_int_distribution<int> var(0, n - 1);
    for (int j = 0; j < d; ++j) e[var(rng)]++;
    g.push_back(Monomial(std::move(e)));
  }
  return minimize(n, std::move(g));
}

TEST_CASE("exact integer rank") {
  CHECK(integer_matrix_rank({{1, 0}, {0, 1}}) == 2);
  CHECK(integer_matrix_rank({{0, 0}, {0, 0}}) == 0);
  CHECK(integer_matrix_rank({{1, 2, 3}, {2, 4, 6}, {1, 1, 1}}) == 2);
  CHECK(integer_matrix_rank({{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}) == 2);
  // entries whose products overflow 64 bits exercise the wide fallback
  long long big = 1ll << 40;
  CHECK(integer_matrix_rank({{big, 1}, {1, big}}) == 2);
  CHECK(integer_matrix_rank({{big, big}, {big, big}}) == 1);

  // agreement with the rational-elimination oracle on random sign matrices
  std::mt19937 rng(808080);
  std::uniform_int_distribution<int> entry(-1, 1);
  for (int trial = 0; trial < 20; ++trial) {
    int rows = 2 + trial % 5, cols = 2 + (trial / 2) % 5;
    std::vector<std::vector<long long>> m(rows, std::vector<long long>(cols));
    std::vector<std::vector<Rat>> q(rows, std::vector<Rat>(cols));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) {
        int v = entry(rng);
        m[i][j] = v;
        q[i][j] = Rat(v);
      }
    CHECK(integer_matrix_rank(m) == oracle_rank(q));
  }
}

TEST_CASE("lcm lattice") {
  MonomialIdeal two_vars = ideal_of(2, {{1, 0}, {0, 1}});
  LcmLattice l = lcm_lattice(two_vars);
  std::vector<Monomial> expect = {Monomial({0, 0}), Monomial({1, 0}),
                                  Monomial({0, 1}), Monomial({1, 1})};
  std::sort(expect.begin(), expect.end());
  CHECK(l.elements == expect);

  // all pairwise lcms of the triangle covers coincide at the top
  MonomialIdeal j3 = cover_ideal(cycle_graph(3));
  LcmLattice l3 = lcm_lattice(j3);
  CHECK(l3.elements.size() == 5);  // bottom + 3 generators + top
  CHECK(l3.elements.back() == Monomial({1, 1, 1}));

  MonomialIdeal principal = ideal_of(3, {{1, 2, 0}});
  CHECK(lcm_lattice(principal).elements.size() == 2);  // bottom + generator

  CHECK_THROWS_AS(lcm_lattice(MonomialIdeal::zero(2)), std::invalid_argument);
  CHECK_THROWS_AS(lcm_lattice(cover_ideal(cycle_graph(7)), 5), CapExceeded);
}

TEST_CASE("triangle cover ideal resolves as 0 -> R^2 -> R^3") {
  MonomialIdeal j3 = cover_ideal(cycle_graph(3));
  BettiTable t = betti_numbers(j3);
  CHECK(t.totals() == std::vector<long long>{3, 2});
  long long deg2 = 0;
  for (const BettiEntry& e : t.entries)
    if (e.i == 0) {
      CHECK(e.multidegree.degree() == 2);
      CHECK(e.rank == 1);
      ++deg2;
    }
  CHECK(deg2 == 3);
  CHECK(t.rank_at(1, Monomial({1, 1, 1})) == 2);
  auto coarse = t.coarse();
  CHECK(coarse[{0, 2}] == 3);
  CHECK(coarse[{1, 3}] == 2);
  CHECK(t.max_homological_degree() == 1);
}

TEST_CASE("generator rows carry rank one exactly at the generators") {
  std::mt19937 rng(424211);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal I = random_ideal(rng, 3, 5, 3);
    BettiTable t = betti_numbers(I);
    std::set<std::vector<int>> row0;
    for (const BettiEntry& e : t.entries)
      if (e.i == 0) {
        CHECK(e.rank == 1);
        row0.insert(e.multidegree.exps);
      }
    std::set<std::vector<int>> gens;
    for (const Monomial& g : I.gens) gens.insert(g.exps);
    CHECK(row0 == gens);
  }
}

TEST_CASE("full tables agree with the Taylor-complex oracle") {
  std::vector<MonomialIdeal> battery = {
      cover_ideal(cycle_graph(3)),
      cover_ideal(cycle_graph(5)),
      edge_ideal(cycle_graph(4)),
      edge_ideal(cycle_graph(5)),
      power(cover_ideal(cycle_graph(3)), 2),
      ideal_of(3, {{3, 0, 0}, {0, 3, 0}, {0, 0, 3}, {1, 1, 1}}),
  };
  for (const MonomialIdeal& I : battery) CHECK(to_map(betti_numbers(I)) == oracle_betti(I));

  std::mt19937 rng(99123);
  for (int trial = 0; trial < 15; ++trial) {
    MonomialIdeal I = random_ideal(rng, 3 + trial % 2, 6, 3);
    CHECK(to_map(betti_numbers(I)) == oracle_betti(I));
  }
}

TEST_CASE("Betti tables are invariant under polarization") {
  MonomialIdeal j3sq = power(cover_ideal(cycle_graph(3)), 2);
  Polarization p = polarize(j3sq);
  CHECK(betti_numbers(j3sq).coarse() == betti_numbers(p.ideal).coarse());

  std::mt19937 rng(515151);
  for (int trial = 0; trial < 6; ++trial) {
    MonomialIdeal I = random_ideal(rng, 3, 4, 3);
    CHECK(betti_numbers(I).coarse() == betti_numbers(polarize(I).ideal).coarse());
  }
}

TEST_CASE("Betti tables commute with variable relabeling") {
  std::mt19937 rng(77742);
  for (int trial = 0; trial < 8; ++trial) {
    int n = 3 + trial % 2;
    MonomialIdeal I = random_ideal(rng, n, 5, 3);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    BettiMap direct = to_map(betti_numbers(I));
    BettiMap relabeled;
    for (const BettiEntry& e : betti_numbers(rename(I, perm)).entries) {
      std::vector<int> back(n);
      for (int i = 0; i < n; ++i) back[i] = e.multidegree.exps[perm[i] - 1];
      relabeled[{e.i, back}] = e.rank;
    }
    CHECK(direct == relabeled);
  }
}

TEST_CASE("jobs > 1 reproduces the serial table") {
  MonomialIdeal I = power(cover_ideal(cycle_graph(5)), 2);
  ResolutionOptions serial, parallel;
  parallel.jobs = 3;
  CHECK(to_map(betti_numbers(I, serial)) == to_map(betti_numbers(I, parallel)));
}

TEST_CASE("regularity values") {
  CHECK(regularity(ideal_of(2, {{1, 0}})) == 1);
  CHECK(regularity(cover_ideal(cycle_graph(3))) == 2);
  CHECK(regularity(cover_ideal(cycle_graph(5))) == 3);
  CHECK(regularity_quotient(cover_ideal(cycle_graph(5))) == 2);

  // regularity agrees with the oracle across the random battery
  std::mt19937 rng(31007);
  for (int trial = 0; trial < 10; ++trial) {
    MonomialIdeal I = random_ideal(rng, 3, 5, 3);
    CHECK(regularity(I) == oracle_regularity(oracle_betti(I)));
  }
}

TEST_CASE("linear resolutions") {
  CHECK(has_linear_resolution(cover_ideal(cycle_graph(3))));
  CHECK_FALSE(has_linear_resolution(edge_ideal(cycle_graph(5))));
  CHECK(regularity(edge_ideal(cycle_graph(5))) ==
        oracle_regularity(oracle_betti(edge_ideal(cycle_graph(5)))));
  // mixed degrees never qualify
  CHECK_FALSE(has_linear_resolution(ideal_of(2, {{1, 0}, {0, 2}})));
}

TEST_CASE("componentwise linearity") {
  // symbolic square of the triangle cover ideal, built by direct intersection
  std::vector<MonomialIdeal> parts;
  for (auto [a, b] : cycle_graph(3).edges)
    parts.push_back(power(MonomialIdeal::variables(3, {a, b}), 2));
  MonomialIdeal sym2 = intersect_many(parts);
  CHECK(is_componentwise_linear(sym2));

  CHECK(degree_component(sym2, 3) == ideal_of(3, {{1, 1, 1}}));
  // three degree-4 generators plus the three degree-4 multiples of x1x2x3
  CHECK(degree_component(sym2, 4).gens.size() == 6);

  // oracle comparison: each degree component has reg equal to its degree
  for (int d : {3, 4}) {
    MonomialIdeal comp = degree_component(sym2, d);
    CHECK(oracle_regularity(oracle_betti(comp)) == d);
  }

  CHECK_FALSE(is_componentwise_linear(edge_ideal(cycle_graph(5))));
}

TEST_CASE("projective dimension and Cohen-Macaulay graphs") {
  CHECK(projective_dimension_quotient(cover_ideal(cycle_graph(3))) == 2);
  CHECK(projective_dimension_quotient(MonomialIdeal::zero(3)) == 0);

  CHECK(is_cohen_macaulay_graph(cycle_graph(3)));
  CHECK(is_cohen_macaulay_graph(cycle_graph(5)));
  CHECK_FALSE(is_cohen_macaulay_graph(cycle_graph(7)));
  CHECK_FALSE(is_cohen_macaulay_graph(cycle_graph(9)));
  CHECK(is_cohen_macaulay_graph(whisker(path_graph(3))));
  CHECK(is_cohen_macaulay_graph(whisker(path_graph(2))));
  CHECK(is_cohen_macaulay_graph(whisker(cycle_graph(5))));
  CHECK(is_cohen_macaulay_graph(Graph(3, {})));
}

TEST_CASE("truncation can only raise regularity, and keeps it below Deg") {
  std::mt19937 rng(140312);
  for (int trial = 0; trial < 12; ++trial) {
    MonomialIdeal I = random_ideal(rng, 3, 4, 3);
    int base = regularity(I);
    int dmax = deg_max(I);
    for (int t = 0; t <= dmax + 2; ++t) {
      int truncated = regularity(truncate(I, t));
      CHECK(truncated >= base);
      if (t <= dmax) CHECK(truncated == base);
    }
  }
}
