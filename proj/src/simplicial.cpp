#include "coverideal/simplicial.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "coverideal/graph.hpp"

namespace coverideal {

SimplicialComplex SimplicialComplex::from_faces(std::vector<int> vertex_set,
                                                std::vector<std::vector<int>> faces) {
  std::sort(vertex_set.begin(), vertex_set.end());
  vertex_set.erase(std::unique(vertex_set.begin(), vertex_set.end()), vertex_set.end());
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    for (int v : f)
      if (!std::binary_search(vertex_set.begin(), vertex_set.end(), v))
        throw std::invalid_argument("face vertex outside vertex set");
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  // drop faces contained in another face
  std::vector<std::vector<int>> facets;
  for (const auto& f : faces) {
    bool covered = false;
    for (const auto& g : faces) {
      if (&g == &f || g.size() <= f.size()) continue;
      if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
        covered = true;
        break;
      }
    }
    if (!covered) facets.push_back(f);
  }
  SimplicialComplex d;
  d.vertex_set = std::move(vertex_set);
  d.facets = std::move(facets);
  return d;
}

bool SimplicialComplex::is_irrelevant() const {
  return facets.size() == 1 && facets[0].empty();
}

int SimplicialComplex::dim() const {
  if (is_void()) throw std::invalid_argument("dimension of the void complex");
  int d = -1;
  for (const auto& f : facets) d = std::max(d, static_cast<int>(f.size()) - 1);
  return d;
}

bool SimplicialComplex::is_pure() const {
  if (is_void()) throw std::invalid_argument("purity of the void complex");
  for (const auto& f : facets)
    if (static_cast<int>(f.size()) - 1 != dim()) return false;
  return true;
}

bool SimplicialComplex::has_vertex(int v) const {
  return std::binary_search(vertex_set.begin(), vertex_set.end(), v);
}

bool SimplicialComplex::has_face(const std::vector<int>& f) const {
  std::vector<int> s = f;
  std::sort(s.begin(), s.end());
  for (const auto& g : facets)
    if (std::includes(g.begin(), g.end(), s.begin(), s.end())) return true;
  return false;
}

SimplicialComplex link(const SimplicialComplex& d, int v) {
  if (!d.has_vertex(v)) throw std::invalid_argument("link: not a vertex");
  std::vector<int> verts;
  for (int u : d.vertex_set)
    if (u != v) verts.push_back(u);
  std::vector<std::vector<int>> faces;
  for (const auto& f : d.facets) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    std::vector<int> g;
    for (int u : f)
      if (u != v) g.push_back(u);
    faces.push_back(std::move(g));
  }
  // facets containing v give incomparable residues, no re-minimization needed
  SimplicialComplex out;
  out.vertex_set = std::move(verts);
  std::sort(faces.begin(), faces.end());
  out.facets = std::move(faces);
  return out;
}

SimplicialComplex deletion(const SimplicialComplex& d, int v) {
  if (!d.has_vertex(v)) throw std::invalid_argument("deletion: not a vertex");
  std::vector<int> verts;
  for (int u : d.vertex_set)
    if (u != v) verts.push_back(u);
  std::vector<std::vector<int>> faces;
  for (const auto& f : d.facets) {
    std::vector<int> g;
    for (int u : f)
      if (u != v) g.push_back(u);
    faces.push_back(std::move(g));
  }
  return SimplicialComplex::from_faces(std::move(verts), std::move(faces));
}

bool is_shedding_vertex(const SimplicialComplex& d, int v) {
  SimplicialComplex lk = link(d, v);
  SimplicialComplex del = deletion(d, v);
  for (const auto& f : lk.facets)
    if (std::binary_search(del.facets.begin(), del.facets.end(), f)) return false;
  return true;
}

namespace {

// canonical content key: facets relabeled to a dense range, order preserving
std::string facet_key(const SimplicialComplex& d) {
  std::vector<int> support;
  for (const auto& f : d.facets) support.insert(support.end(), f.begin(), f.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<std::uint64_t> bitsets;
  for (const auto& f : d.facets) {
    std::uint64_t bits = 0;
    for (int v : f) {
      size_t idx = std::lower_bound(support.begin(), support.end(), v) - support.begin();
      if (idx >= 64) throw CapExceeded("complex support exceeds 64 vertices");
      bits |= 1ull << idx;
    }
    bitsets.push_back(bits);
  }
  std::sort(bitsets.begin(), bitsets.end());
  std::ostringstream out;
  for (std::uint64_t b : bitsets) out << b << ",";
  return out.str();
}

std::mutex decomp_mutex;
std::unordered_map<std::string, bool> decomp_memo;

bool memo_lookup(const std::string& key, bool& value) {
  std::lock_guard<std::mutex> lock(decomp_mutex);
  auto it = decomp_memo.find(key);
  if (it == decomp_memo.end()) return false;
  value = it->second;
  return true;
}

void memo_store(const std::string& key, bool value) {
  std::lock_guard<std::mutex> lock(decomp_mutex);
  decomp_memo.emplace(key, value);
}

// candidate shedding vertices: present in some facet (a vertex in no face
// has a void link), ascending label order
std::vector<int> shedding_candidates(const SimplicialComplex& d) {
  std::vector<int> support;
  for (const auto& f : d.facets) support.insert(support.end(), f.begin(), f.end());
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  return support;
}

bool decomposable(const SimplicialComplex& d) {
  if (d.is_void()) throw std::invalid_argument("void complex");
  if (d.is_simplex()) return true;
  std::string key = facet_key(d);
  bool cached;
  if (memo_lookup(key, cached)) return cached;
  bool ok = false;
  for (int v : shedding_candidates(d)) {
    if (!is_shedding_vertex(d, v)) continue;
    if (decomposable(link(d, v)) && decomposable(deletion(d, v))) {
      ok = true;
      break;
    }
  }
  memo_store(key, ok);
  return ok;
}

std::unique_ptr<SheddingTree> build_tree(const SimplicialComplex& d) {
  auto node = std::make_unique<SheddingTree>();
  if (d.is_simplex()) {
    node->leaf = true;
    return node;
  }
  for (int v : shedding_candidates(d)) {
    if (!is_shedding_vertex(d, v)) continue;
    SimplicialComplex lk = link(d, v);
    SimplicialComplex del = deletion(d, v);
    if (decomposable(lk) && decomposable(del)) {
      node->vertex = v;
      node->link_branch = build_tree(lk);
      node->deletion_branch = build_tree(del);
      return node;
    }
  }
  throw std::logic_error("certificate requested for a non-decomposable complex");
}

}  // namespace

bool is_vertex_decomposable(const SimplicialComplex& d) { return decomposable(d); }

std::optional<SheddingTree> vertex_decomposition(const SimplicialComplex& d) {
  if (!decomposable(d)) return std::nullopt;
  return std::move(*build_tree(d));
}

SimplicialComplex independence_complex(const Graph& g) {
  std::vector<int> verts(g.n);
  for (int v = 1; v <= g.n; ++v) verts[v - 1] = v;
  std::vector<std::vector<int>> faces;
  for (const auto& cover : minimal_vertex_covers(g)) {
    std::vector<int> f;
    size_t k = 0;
    for (int v = 1; v <= g.n; ++v) {
      if (k < cover.size() && cover[k] == v) {
        ++k;
      } else {
        f.push_back(v);
      }
    }
    faces.push_back(std::move(f));
  }
  return SimplicialComplex::from_faces(std::move(verts), std::move(faces));
}

MonomialIdeal stanley_reisner(const SimplicialComplex& d, int ambient) {
  for (int i = 0; i < static_cast<int>(d.vertex_set.size()); ++i)
    if (d.vertex_set[i] != i + 1)
      throw std::invalid_argument("stanley_reisner needs vertex set 1..n");
  if (static_cast<int>(d.vertex_set.size()) != ambient)
    throw std::invalid_argument("ambient mismatch");
  if (ambient > 20) throw CapExceeded("stanley_reisner capped at 20 vertices");

  // a subset is a minimal non-face iff it is not a face but every maximal
  // proper subset is
  std::vector<char> is_face(1 << ambient, 0);
  std::vector<std::uint64_t> facet_bits;
  for (const auto& f : d.facets) {
    std::uint64_t b = 0;
    for (int v : f) b |= 1ull << (v - 1);
    facet_bits.push_back(b);
  }
  for (int mask = 0; mask < (1 << ambient); ++mask)
    for (std::uint64_t fb : facet_bits)
      if ((static_cast<std::uint64_t>(mask) & ~fb) == 0) {
        is_face[mask] = 1;
        break;
      }
  std::vector<Monomial> gens;
  for (int mask = 1; mask < (1 << ambient); ++mask) {
    if (is_face[mask]) continue;
    bool minimal = true;
    for (int v = 0; v < ambient && minimal; ++v)
      if ((mask >> v) & 1)
        if (!is_face[mask & ~(1 << v)]) minimal = false;
    if (!minimal) continue;
    std::vector<int> e(ambient, 0);
    for (int v = 0; v < ambient; ++v)
      if ((mask >> v) & 1) e[v] = 1;
    gens.push_back(Monomial(std::move(e)));
  }
  return minimize(ambient, std::move(gens));
}

}  // namespace coverideal
