#include "coverideal/monomial.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace coverideal {

namespace {

void check_exponent(long long v) {
  if (v < 0) throw std::invalid_argument("negative exponent");
  if (v > std::numeric_limits<int>::max())
    throw std::invalid_argument("exponent overflow");
}

void check_same_ambient(int a, int b) {
  if (a != b) throw std::invalid_argument("ambient dimension mismatch");
}

}  // namespace

Monomial::Monomial(std::vector<int> e) : exps(std::move(e)) {
  for (int v : exps) check_exponent(v);
}

Monomial Monomial::unit(int ambient) {
  if (ambient < 0) throw std::invalid_argument("negative ambient dimension");
  return Monomial(std::vector<int>(ambient, 0));
}

Monomial Monomial::variable(int ambient, int i) {
  if (i < 1 || i > ambient) throw std::invalid_argument("variable out of range");
  Monomial m = unit(ambient);
  m.exps[i - 1] = 1;
  return m;
}

int Monomial::degree() const {
  long long d = 0;
  for (int v : exps) d += v;
  check_exponent(d);
  return static_cast<int>(d);
}

bool Monomial::is_unit() const {
  return std::all_of(exps.begin(), exps.end(), [](int v) { return v == 0; });
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps.begin(), exps.end(), [](int v) { return v <= 1; });
}

std::vector<int> Monomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < ambient(); ++i)
    if (exps[i] > 0) s.push_back(i + 1);
  return s;
}

bool Monomial::divides(const Monomial& other) const {
  check_same_ambient(ambient(), other.ambient());
  for (int i = 0; i < ambient(); ++i)
    if (exps[i] > other.exps[i]) return false;
  return true;
}

Monomial Monomial::times(const Monomial& other) const {
  check_same_ambient(ambient(), other.ambient());
  std::vector<int> e(exps.size());
  for (size_t i = 0; i < exps.size(); ++i) {
    long long v = static_cast<long long>(exps[i]) + other.exps[i];
    check_exponent(v);
    e[i] = static_cast<int>(v);
  }
  return Monomial(std::move(e));
}

Monomial Monomial::divided_by(const Monomial& other) const {
  check_same_ambient(ambient(), other.ambient());
  std::vector<int> e(exps.size());
  for (size_t i = 0; i < exps.size(); ++i) {
    if (other.exps[i] > exps[i])
      throw std::invalid_argument("quotient is not a monomial");
    e[i] = exps[i] - other.exps[i];
  }
  return Monomial(std::move(e));
}

std::string Monomial::str() const {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < ambient(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) out << "*";
    out << "x" << (i + 1);
    if (exps[i] > 1) out << "^" << exps[i];
    first = false;
  }
  if (first) out << "1";
  return out.str();
}

bool Monomial::operator<(const Monomial& o) const {
  check_same_ambient(ambient(), o.ambient());
  int da = degree(), db = o.degree();
  if (da != db) return da < db;
  return exps < o.exps;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  check_same_ambient(a.ambient(), b.ambient());
  std::vector<int> e(a.exps.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(a.exps[i], b.exps[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  check_same_ambient(a.ambient(), b.ambient());
  std::vector<int> e(a.exps.size());
  for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(a.exps[i], b.exps[i]);
  return Monomial(std::move(e));
}

size_t ExpVectorHash::operator()(const std::vector<int>& v) const {
  size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

size_t MonomialHash::operator()(const Monomial& m) const {
  return ExpVectorHash{}(m.exps);
}

MonomialIdeal MonomialIdeal::zero(int ambient) { return MonomialIdeal(ambient); }

MonomialIdeal MonomialIdeal::unit(int ambient) {
  MonomialIdeal a(ambient);
  a.gens.push_back(Monomial::unit(ambient));
  return a;
}

MonomialIdeal MonomialIdeal::variables(int ambient, const std::vector<int>& vars) {
  std::vector<Monomial> g;
  for (int v : vars) g.push_back(Monomial::variable(ambient, v));
  return minimize(ambient, std::move(g));
}

bool MonomialIdeal::is_unit() const {
  return gens.size() == 1 && gens[0].is_unit();
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  check_same_ambient(ambient, m.ambient());
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal minimize(int ambient, std::vector<Monomial> gens) {
  for (const Monomial& g : gens) check_same_ambient(ambient, g.ambient());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // after sorting, a generator can only be divisible by an earlier one
  std::vector<Monomial> kept;
  for (const Monomial& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return k.divides(g); });
    if (!redundant) kept.push_back(g);
  }
  MonomialIdeal out(ambient);
  out.gens = std::move(kept);
  return out;
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a.ambient, b.ambient);
  std::vector<Monomial> g;
  g.reserve(a.gens.size() * b.gens.size());
  for (const Monomial& u : a.gens)
    for (const Monomial& v : b.gens) g.push_back(u.times(v));
  return minimize(a.ambient, std::move(g));
}

MonomialIdeal power(const MonomialIdeal& a, int s) {
  if (s < 0) throw std::invalid_argument("negative power");
  MonomialIdeal out = MonomialIdeal::unit(a.ambient);
  for (int i = 0; i < s; ++i) out = multiply(out, a);
  return out;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a.ambient, b.ambient);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ambient);
  std::vector<Monomial> g;
  g.reserve(a.gens.size() * b.gens.size());
  for (const Monomial& u : a.gens)
    for (const Monomial& v : b.gens) g.push_back(lcm(u, v));
  return minimize(a.ambient, std::move(g));
}

MonomialIdeal intersect_many(std::vector<MonomialIdeal> ideals) {
  if (ideals.empty())
    throw std::invalid_argument("intersect_many needs at least one ideal");
  // fold smallest generator sets first to keep intermediates small
  auto smaller = [](const MonomialIdeal& x, const MonomialIdeal& y) {
    return x.gens.size() < y.gens.size();
  };
  std::sort(ideals.begin(), ideals.end(), smaller);
  MonomialIdeal acc = ideals[0];
  for (size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same_ambient(a.ambient, b.ambient);
  std::vector<Monomial> g = a.gens;
  g.insert(g.end(), b.gens.begin(), b.gens.end());
  return minimize(a.ambient, std::move(g));
}

MonomialIdeal sum_many(const std::vector<MonomialIdeal>& ideals) {
  if (ideals.empty())
    throw std::invalid_argument("sum_many needs at least one ideal");
  std::vector<Monomial> g;
  for (const MonomialIdeal& a : ideals) {
    check_same_ambient(ideals[0].ambient, a.ambient);
    g.insert(g.end(), a.gens.begin(), a.gens.end());
  }
  return minimize(ideals[0].ambient, std::move(g));
}

MonomialIdeal alexander_dual(const MonomialIdeal& a) {
  if (!a.is_squarefree())
    throw std::invalid_argument("alexander dual needs a squarefree ideal");
  if (a.is_zero() || a.is_unit())
    throw std::invalid_argument("alexander dual of the zero or unit ideal");
  std::vector<MonomialIdeal> primes;
  primes.reserve(a.gens.size());
  for (const Monomial& g : a.gens)
    primes.push_back(MonomialIdeal::variables(a.ambient, g.support()));
  return intersect_many(std::move(primes));
}

MonomialIdeal truncate(const MonomialIdeal& a, int t) {
  if (t < 0) throw std::invalid_argument("negative truncation degree");
  std::vector<Monomial> g;
  for (const Monomial& u : a.gens) {
    int d = u.degree();
    if (d >= t) {
      g.push_back(u);
    } else {
      for (const Monomial& pad : monomials_of_degree(a.ambient, t - d))
        g.push_back(u.times(pad));
    }
  }
  return minimize(a.ambient, std::move(g));
}

Polarization polarize(const MonomialIdeal& a) {
  std::vector<int> widths(a.ambient, 1);  // keep a slot even for unused vars
  for (const Monomial& g : a.gens)
    for (int i = 0; i < a.ambient; ++i)
      widths[i] = std::max(widths[i], g.exps[i]);

  Polarization out;
  out.blocks.resize(a.ambient);
  int next = 1;
  for (int i = 0; i < a.ambient; ++i) {
    for (int k = 0; k < widths[i]; ++k) out.blocks[i].push_back(next++);
  }
  int big = next - 1;

  std::vector<Monomial> g;
  for (const Monomial& u : a.gens) {
    std::vector<int> e(big, 0);
    for (int i = 0; i < a.ambient; ++i)
      for (int k = 0; k < u.exps[i]; ++k) e[out.blocks[i][k] - 1] = 1;
    g.emplace_back(std::move(e));
  }
  out.ideal = minimize(big, std::move(g));
  return out;
}

int deg_min(const MonomialIdeal& a) {
  if (a.is_zero()) throw std::invalid_argument("degree of the zero ideal");
  int d = std::numeric_limits<int>::max();
  for (const Monomial& g : a.gens) d = std::min(d, g.degree());
  return d;
}

int deg_max(const MonomialIdeal& a) {
  if (a.is_zero()) throw std::invalid_argument("degree of the zero ideal");
  int d = 0;
  for (const Monomial& g : a.gens) d = std::max(d, g.degree());
  return d;
}

std::vector<Monomial> monomials_of_degree(int ambient, int d) {
  if (ambient < 0 || d < 0) throw std::invalid_argument("bad arguments");
  std::vector<Monomial> out;
  if (ambient == 0) {
    if (d == 0) out.push_back(Monomial::unit(0));
    return out;
  }
  std::vector<int> e(ambient, 0);
  // enumerate compositions of d into ambient parts
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == ambient - 1) {
      e[pos] = left;
      out.push_back(Monomial(e));
      e[pos] = 0;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      e[pos] = v;
      rec(pos + 1, left - v);
    }
    e[pos] = 0;
  };
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

Monomial rename(const Monomial& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.ambient())
    throw std::invalid_argument("permutation size mismatch");
  std::vector<int> e(m.ambient(), 0);
  std::vector<bool> seen(m.ambient(), false);
  for (int i = 0; i < m.ambient(); ++i) {
    int t = perm[i];
    if (t < 1 || t > m.ambient() || seen[t - 1])
      throw std::invalid_argument("not a permutation");
    seen[t - 1] = true;
    e[t - 1] = m.exps[i];
  }
  return Monomial(std::move(e));
}

MonomialIdeal rename(const MonomialIdeal& a, const std::vector<int>& perm) {
  std::vector<Monomial> g;
  g.reserve(a.gens.size());
  for (const Monomial& u : a.gens) g.push_back(rename(u, perm));
  return minimize(a.ambient, std::move(g));
}

VariableOrder::VariableOrder(std::vector<int> r) : ranking(std::move(r)) {
  std::vector<bool> seen(ranking.size(), false);
  for (int v : ranking) {
    if (v < 1 || v > static_cast<int>(ranking.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[v - 1] = true;
  }
}

VariableOrder VariableOrder::identity(int n) {
  std::vector<int> r(n);
  std::iota(r.begin(), r.end(), 1);
  return VariableOrder(std::move(r));
}

int VariableOrder::rank_of(int var) const {
  for (int r = 0; r < size(); ++r)
    if (ranking[r] == var) return r;
  throw std::invalid_argument("variable not in order");
}

std::string VariableOrder::str() const {
  std::ostringstream out;
  for (int r = 0; r < size(); ++r) {
    if (r) out << ",";
    out << ranking[r];
  }
  return out.str();
}

VariableOrder VariableOrder::parse(const std::string& text) {
  std::vector<int> r;
  std::string tok;
  std::istringstream in(text);
  while (std::getline(in, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("empty order token");
    r.push_back(std::stoi(tok));
  }
  return VariableOrder(std::move(r));
}

}  // namespace coverideal
