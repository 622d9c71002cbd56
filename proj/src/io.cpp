#include "coverideal/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace coverideal {

using nlohmann::json;

namespace {

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw std::invalid_argument(std::string(what) + " must hold integers");
    out.push_back(e.get<int>());
  }
  return out;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    line = line.substr(a, b - a + 1);
    if (line.empty() || line[0] == '#') continue;
    out.push_back(line);
  }
  return out;
}

// "x1^2*x3" -> sparse (variable, exponent) pairs; "1" -> empty
std::vector<std::pair<int, int>> parse_monomial_line(const std::string& line) {
  if (line == "1") return {};
  std::vector<std::pair<int, int>> terms;
  std::istringstream in(line);
  std::string factor;
  while (std::getline(in, factor, '*')) {
    if (factor.empty() || factor[0] != 'x')
      throw std::invalid_argument("bad monomial factor: " + factor);
    size_t caret = factor.find('^');
    std::string var_part = factor.substr(1, caret == std::string::npos ? caret : caret - 1);
    std::string exp_part = caret == std::string::npos ? "1" : factor.substr(caret + 1);
    size_t used = 0;
    int var = std::stoi(var_part, &used);
    if (used != var_part.size() || var < 1)
      throw std::invalid_argument("bad variable index: " + factor);
    int exp = std::stoi(exp_part, &used);
    if (used != exp_part.size() || exp < 1)
      throw std::invalid_argument("bad exponent: " + factor);
    terms.emplace_back(var, exp);
  }
  if (terms.empty()) throw std::invalid_argument("empty monomial line");
  return terms;
}

std::string monomial_to_text(const Monomial& m) {
  std::string out;
  for (size_t i = 0; i < m.exps.size(); ++i) {
    if (m.exps[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
    if (m.exps[i] > 1) out += '^' + std::to_string(m.exps[i]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

json ideal_to_json(const MonomialIdeal& a) {
  json gens = json::array();
  for (const Monomial& g : a.gens) gens.push_back(g.exps);
  return json{{"schema", kSchemaTag}, {"ambient", a.ambient}, {"generators", gens}};
}

MonomialIdeal ideal_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ambient") || !j.contains("generators"))
    throw std::invalid_argument("ideal JSON needs ambient and generators");
  int ambient = j.at("ambient").get<int>();
  if (ambient < 0) throw std::invalid_argument("negative ambient");
  std::vector<Monomial> gens;
  for (const auto& e : j.at("generators")) {
    std::vector<int> exps = int_vector(e, "generator");
    if (static_cast<int>(exps.size()) != ambient)
      throw std::invalid_argument("generator length does not match ambient");
    gens.push_back(Monomial(exps));
  }
  return minimize(ambient, gens);
}

std::string ideal_to_text(const MonomialIdeal& a) {
  std::string out;
  for (const Monomial& g : a.gens) out += monomial_to_text(g) + '\n';
  return out;
}

MonomialIdeal ideal_from_text(const std::string& text, int ambient) {
  std::vector<std::vector<std::pair<int, int>>> parsed;
  int max_var = 0;
  for (const std::string& line : lines_of(text)) {
    parsed.push_back(parse_monomial_line(line));
    for (auto [var, exp] : parsed.back()) max_var = std::max(max_var, var);
  }
  if (ambient == 0) ambient = max_var;
  if (max_var > ambient) throw std::invalid_argument("variable index exceeds ambient");
  std::vector<Monomial> gens;
  for (const auto& terms : parsed) {
    std::vector<int> exps(ambient, 0);
    for (auto [var, exp] : terms) exps[var - 1] += exp;
    gens.push_back(Monomial(exps));
  }
  return minimize(ambient, gens);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (auto [a, b] : g.edges) edges.push_back(json::array({a, b}));
  return json{{"schema", kSchemaTag}, {"n", g.n}, {"edges", edges}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs n and edges");
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) {
    std::vector<int> pair = int_vector(e, "edge");
    if (pair.size() != 2) throw std::invalid_argument("edge must have two endpoints");
    edges.emplace_back(pair[0], pair[1]);
  }
  return Graph(n, edges);
}

std::string graph_to_text(const Graph& g) {
  std::string out;
  for (auto [a, b] : g.edges) out += std::to_string(a) + ' ' + std::to_string(b) + '\n';
  return out;
}

Graph graph_from_text(const std::string& text, int n) {
  std::vector<std::pair<int, int>> edges;
  int max_v = 0;
  for (const std::string& line : lines_of(text)) {
    std::istringstream in(line);
    int a = 0, b = 0;
    char extra = 0;
    if (!(in >> a >> b) || (in >> extra))
      throw std::invalid_argument("edge line must be two integers: " + line);
    edges.emplace_back(a, b);
    max_v = std::max({max_v, a, b});
  }
  if (n == 0) n = max_v;
  return Graph(n, edges);
}

json partition_to_json(const CliquePartition& pi) {
  json parts = json::array();
  for (const auto& part : pi.parts) parts.push_back(part);
  return parts;
}

CliquePartition partition_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("partition must be a list of lists");
  CliquePartition pi;
  for (const auto& part : j) pi.parts.push_back(int_vector(part, "partition part"));
  return pi;
}

json betti_to_json(const BettiTable& t) {
  json entries = json::array();
  for (const BettiEntry& e : t.entries)
    entries.push_back(json{{"i", e.i}, {"multidegree", e.multidegree.exps}, {"rank", e.rank}});
  return json{{"schema", kSchemaTag}, {"entries", entries}};
}

BettiTable betti_from_json(const json& j) {
  if (!j.is_object() || !j.contains("entries"))
    throw std::invalid_argument("Betti JSON needs entries");
  BettiTable t;
  for (const auto& e : j.at("entries")) {
    BettiEntry entry;
    entry.i = e.at("i").get<int>();
    entry.multidegree = Monomial(int_vector(e.at("multidegree"), "multidegree"));
    entry.rank = e.at("rank").get<long long>();
    t.entries.push_back(entry);
  }
  return t;
}

std::string betti_to_text(const BettiTable& t) {
  auto coarse = t.coarse();
  if (coarse.empty()) return "(empty table)\n";
  int max_i = 0, min_row = 0, max_row = 0;
  bool first = true;
  for (const auto& [key, rank] : coarse) {
    auto [i, j] = key;
    max_i = std::max(max_i, i);
    int row = j - i;
    if (first || row < min_row) min_row = row;
    if (first || row > max_row) max_row = row;
    first = false;
  }
  std::vector<long long> totals(max_i + 1, 0);
  for (const auto& [key, rank] : coarse) totals[key.first] += rank;

  auto cell = [](long long v) { return v == 0 ? std::string(".") : std::to_string(v); };
  size_t width = 6;
  for (long long v : totals) width = std::max(width, std::to_string(v).size() + 1);

  std::ostringstream out;
  auto pad = [&](const std::string& s) {
    out << std::string(width > s.size() ? width - s.size() : 1, ' ') << s;
  };
  pad("");
  for (int i = 0; i <= max_i; ++i) pad(std::to_string(i));
  out << '\n';
  pad("total:");
  for (int i = 0; i <= max_i; ++i) pad(cell(totals[i]));
  out << '\n';
  for (int row = min_row; row <= max_row; ++row) {
    pad(std::to_string(row) + ":");
    for (int i = 0; i <= max_i; ++i) {
      auto it = coarse.find({i, row + i});
      pad(cell(it == coarse.end() ? 0 : it->second));
    }
    out << '\n';
  }
  return out.str();
}

json wp_result_to_json(const WpResult& r) {
  json witnesses = json::array();
  for (const WpWitness& w : r.witnesses)
    witnesses.push_back(json{{"u", w.u.exps},
                             {"v", w.v.exps},
                             {"q", w.q},
                             {"p", w.p},
                             {"w", w.w.exps}});
  json violation;
  if (r.violation)
    violation = json{{"u", r.violation->u.exps}, {"v", r.violation->v.exps}, {"q", r.violation->q}};
  return json{{"schema", kSchemaTag},
              {"order", r.order.str()},
              {"weakly_polymatroidal", r.weakly_polymatroidal},
              {"witnesses", witnesses},
              {"violation", violation}};
}

json shedding_tree_to_json(const SheddingTree& t) {
  if (t.leaf) return json{{"simplex", true}};
  json out{{"vertex", t.vertex}};
  out["link"] = t.link_branch ? shedding_tree_to_json(*t.link_branch) : json();
  out["deletion"] = t.deletion_branch ? shedding_tree_to_json(*t.deletion_branch) : json();
  return out;
}

json symbolic_report_to_json(const SymbolicPowerReport& r) {
  json formula;
  if (r.via_formula) formula = ideal_to_json(*r.via_formula);
  return json{{"schema", kSchemaTag},
              {"graph", graph_to_json(r.graph)},
              {"s", r.s},
              {"via_intersection", ideal_to_json(r.via_intersection)},
              {"via_formula", formula},
              {"equal", r.equal}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  json j;
  in >> j;
  return j;
}

std::string load_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace coverideal
