// Command-line driver: experiment suites plus direct access to the ideal,
// graph, resolution, symbolic and exchange-order machinery. Exit status is 0
// exactly when every assertion of the invoked command passes; usage problems
// exit 2.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <boost/program_options.hpp>

#include "coverideal/experiments.hpp"
#include "coverideal/io.hpp"
#include "coverideal/resolution.hpp"
#include "coverideal/simplicial.hpp"
#include "coverideal/structure.hpp"
#include "coverideal/symbolic.hpp"

namespace po = boost::program_options;
using namespace coverideal;
using nlohmann::json;

namespace {

const char* kUsage = R"(usage: coverideal-lab <command> [options]

commands:
  ideal            normalize an ideal file and print it
  graph            print a graph with its basic invariants
  symbolic         symbolic power of a graph's cover ideal (--graph, --s)
  herzog           closed-form symbolic decomposition, checked (--graph, --s)
  lideal           truncated power sum for a whiskered graph (--graph, --s, --t)
  truncation-check symbolic and ordinary powers agree after truncation (--graph, --s)
  reg              regularity of an ideal (--ideal | --graph [--s])
  betti            Betti table of an ideal (--ideal | --graph [--s])
  wp               exchange-order verbs: check | search | scan
  vdec             shedding-tree certificate (--graph | --ideal)
  odd-cycle        cycle power regularity suite (--n ..., --smax)
  deg-formula      cycle cover degree extremes (--max)
  whisker-suite    whiskered-graph power suite (--smax [--graph --partition])
  example-5-1      the appendix pentagon membership facts
  scan             search small graphs for exchange-order counterexamples (--max-n)

common options:
  --format json|tsv   output form (default json)
  --seed N            seed recorded with randomized corpora
  --cap-lattice N     lcm lattice size cap
  --cap-ambient N     ambient cap for order searches (default 10)
  --jobs N            worker threads for resolutions
)";

struct Common {
  std::string format = "json";
  unsigned seed = 0;
  int cap_ambient = 10;
  int jobs = 1;
  ResolutionOptions res;
};

void add_common(po::options_description& d) {
  d.add_options()
    ("format", po::value<std::string>()->default_value("json"), "json or tsv")
    ("seed", po::value<unsigned>()->default_value(0), "corpus seed")
    ("cap-lattice", po::value<std::size_t>(), "lcm lattice cap")
    ("cap-ambient", po::value<int>()->default_value(10), "order search ambient cap")
    ("jobs", po::value<int>()->default_value(1), "worker threads")
    ("help", "show usage");
}

// parses argv for one subcommand; returns nullopt after printing usage
std::optional<po::variables_map> parse(const std::vector<std::string>& args,
                                       const po::options_description& desc) {
  po::variables_map vm;
  po::store(po::command_line_parser(args).options(desc).run(), vm);
  po::notify(vm);
  if (vm.count("help")) {
    std::cout << kUsage;
    return std::nullopt;
  }
  return vm;
}

Common common_of(const po::variables_map& vm) {
  Common c;
  c.format = vm["format"].as<std::string>();
  if (c.format != "json" && c.format != "tsv")
    throw po::error("--format must be json or tsv");
  c.seed = vm["seed"].as<unsigned>();
  c.cap_ambient = vm["cap-ambient"].as<int>();
  c.jobs = vm["jobs"].as<int>();
  if (vm.count("cap-lattice")) c.res.lattice_cap = vm["cap-lattice"].as<std::size_t>();
  c.res.jobs = c.jobs;
  return c;
}

bool looks_like_json(const std::string& text) {
  for (char ch : text)
    if (!isspace(static_cast<unsigned char>(ch))) return ch == '{' || ch == '[';
  return false;
}

MonomialIdeal load_ideal(const std::string& path) {
  std::string text = load_text_file(path);
  return looks_like_json(text) ? ideal_from_json(json::parse(text)) : ideal_from_text(text);
}

Graph load_graph(const std::string& path) {
  std::string text = load_text_file(path);
  return looks_like_json(text) ? graph_from_json(json::parse(text)) : graph_from_text(text);
}

// --ideal FILE, or --graph FILE with optional --s giving a cover ideal power
MonomialIdeal load_ideal_input(const po::variables_map& vm) {
  if (vm.count("ideal")) return load_ideal(vm["ideal"].as<std::string>());
  if (vm.count("graph")) {
    MonomialIdeal j = cover_ideal(load_graph(vm["graph"].as<std::string>()));
    int s = vm.count("s") ? vm["s"].as<int>() : 1;
    return power(j, s);
  }
  throw po::error("need --ideal or --graph");
}

void emit(const json& j, const Common& c, const std::string& tsv) {
  if (c.format == "json")
    std::cout << j.dump(2) << '\n';
  else
    std::cout << tsv;
}

int finish_report(const ExperimentReport& report, const Common& c) {
  if (c.format == "json")
    std::cout << report_to_json(report).dump(2) << '\n';
  else
    std::cout << report_to_tsv(report);
  return report.all_pass() ? 0 : 1;
}

json scan_to_json(const ConjectureReport& r) {
  json candidates = json::array();
  for (const ConjectureCase& c : r.candidates)
    candidates.push_back(json{{"graph", graph_to_json(c.graph)},
                              {"order", c.wp_order_found ? json(c.order.str()) : json()}});
  json exhausted = json::array();
  for (const Graph& g : r.exhausted) exhausted.push_back(graph_to_json(g));
  return json{{"schema", kSchemaTag},
              {"max_n", r.max_n},
              {"connected_graphs", r.connected_graphs},
              {"candidates", candidates},
              {"exhausted", exhausted}};
}

int run_scan(int max_n, const Common& c) {
  ConjectureReport report = conjecture_scan(max_n);
  char line[128];
  std::snprintf(line, sizeof line, "connected_graphs\t%d\ncandidates\t%zu\nexhausted\t%zu\n",
                report.connected_graphs, report.candidates.size(), report.exhausted.size());
  emit(scan_to_json(report), c, line);
  return report.exhausted.empty() ? 0 : 1;
}

int cmd_ideal(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("ideal", po::value<std::string>(), "ideal file (json or text)");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  if (!vm->count("ideal")) throw po::error("need --ideal");
  MonomialIdeal a = load_ideal((*vm)["ideal"].as<std::string>());
  emit(ideal_to_json(a), c, ideal_to_text(a));
  return 0;
}

int cmd_graph(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("graph", po::value<std::string>(), "graph file (json or edge list)");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  if (!vm->count("graph")) throw po::error("need --graph");
  Graph g = load_graph((*vm)["graph"].as<std::string>());
  json out = graph_to_json(g);
  out["connected"] = g.is_connected();
  out["bipartite"] = is_bipartite(g);
  out["unmixed"] = is_unmixed(g);
  out["cactus"] = is_cactus(g);
  out["chordal"] = is_chordal(g);
  out["girth"] = girth(g);
  emit(out, c, graph_to_text(g));
  return 0;
}

int cmd_symbolic(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("graph", po::value<std::string>(), "graph file")
      ("s", po::value<int>()->default_value(1), "power");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  if (!vm->count("graph")) throw po::error("need --graph");
  SymbolicPowerReport report =
      symbolic_report(load_graph((*vm)["graph"].as<std::string>()), (*vm)["s"].as<int>());
  emit(symbolic_report_to_json(report), c, ideal_to_text(report.via_intersection));
  return !report.via_formula || report.equal ? 0 : 1;
}

int cmd_herzog(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("graph", po::value<std::string>(), "graph file")
      ("s", po::value<int>()->default_value(1), "power");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  if (!vm->count("graph")) throw po::error("need --graph");
  Graph g = load_graph((*vm)["graph"].as<std::string>());
  int s = (*vm)["s"].as<int>();
  MonomialIdeal formula = herzog_symbolic(g, s);
  bool matches = formula == symbolic_power(g, s);
  json out{{"schema", kSchemaTag},
           {"ideal", ideal_to_json(formula)},
           {"matches_intersection", matches}};
  emit(out, c, ideal_to_text(formula) + (matches ? "matches\tpass\n" : "matches\tFAIL\n"));
  return matches ? 0 : 1;
}

int cmd_lideal(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("graph", po::value<std::string>(), "graph file")
      ("s", po::value<int>()->default_value(2), "power")
      ("t", po::value<int>()->default_value(1), "number of truncation summands");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  if (!vm->count("graph")) throw po::error("need --graph");
  Graph g = load_graph((*vm)["graph"].as<std::string>());
  int s = (*vm)["s"].as<int>(), t = (*vm)["t"].as<int>();
  MonomialIdeal l = l_ideal(g, s, t);
  json out{{"schema", kSchemaTag}, {"ideal", ideal_to_json(l)}};
  std::string tsv = ideal_to_text(l);
  if (whisker(g).n <= 14) {
    bool matches = l == symbolic_power(whisker(g), s);
    out["matches_whisker_symbolic"] = matches;
    tsv += matches ? "matches_whisker_symbolic\ttrue\n" : "matches_whisker_symbolic\tfalse\n";
  }
  emit(out, c, tsv);
  return 0;
}

int cmd_truncation(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("graph", po::value<std::string>(), "odd cycle graph file")
      ("s", po::value<int>()->default_value(2), "power");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  if (!vm->count("graph")) throw po::error("need --graph");
  Graph g = load_graph((*vm)["graph"].as<std::string>());
  int s = (*vm)["s"].as<int>();
  bool equal = truncation_equality_check(g, s);
  json out{{"schema", kSchemaTag}, {"s", s}, {"truncations_equal", equal}};
  emit(out, c, equal ? "truncations_equal\ttrue\n" : "truncations_equal\tfalse\n");
  return equal ? 0 : 1;
}

int cmd_reg(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("ideal", po::value<std::string>(), "ideal file")
      ("graph", po::value<std::string>(), "graph file, cover ideal is used")
      ("s", po::value<int>(), "power of the cover ideal");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  MonomialIdeal a = load_ideal_input(*vm);
  int r = regularity(a, c.res);
  json out{{"schema", kSchemaTag},
           {"regularity", r},
           {"regularity_quotient", r - 1}};
  emit(out, c, "regularity\t" + std::to_string(r) + "\n");
  return 0;
}

int cmd_betti(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("ideal", po::value<std::string>(), "ideal file")
      ("graph", po::value<std::string>(), "graph file, cover ideal is used")
      ("s", po::value<int>(), "power of the cover ideal");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  BettiTable t = betti_numbers(load_ideal_input(*vm), c.res);
  emit(betti_to_json(t), c, betti_to_text(t));
  return 0;
}

int cmd_wp(std::vector<std::string> args) {
  std::string verb = "check";
  if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
    verb = args[0];
    args.erase(args.begin());
  }
  po::options_description desc;
  add_common(desc);
  desc.add_options()("ideal", po::value<std::string>(), "ideal file")
      ("graph", po::value<std::string>(), "graph file, cover ideal is used")
      ("s", po::value<int>(), "power of the cover ideal")
      ("order", po::value<std::string>(), "ranking, e.g. 1,2,3")
      ("max-n", po::value<int>()->default_value(6), "scan size limit");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  if (verb == "scan") return run_scan((*vm)["max-n"].as<int>(), c);
  MonomialIdeal a = load_ideal_input(*vm);
  if (verb == "check") {
    VariableOrder order = vm->count("order")
                              ? VariableOrder::parse((*vm)["order"].as<std::string>())
                              : VariableOrder::identity(a.ambient);
    WpResult r = is_weakly_polymatroidal(a, order);
    std::string tsv = "order\t" + order.str() + "\nweakly_polymatroidal\t" +
                      (r.weakly_polymatroidal ? "true" : "false") + "\nwitnesses\t" +
                      std::to_string(r.witnesses.size()) + "\n";
    emit(wp_result_to_json(r), c, tsv);
    return r.weakly_polymatroidal ? 0 : 1;
  }
  if (verb == "search") {
    auto order = find_wp_order(a, c.cap_ambient);
    if (!order) {
      emit(json{{"schema", kSchemaTag}, {"found", false}}, c, "found\tfalse\n");
      return 1;
    }
    WpResult r = is_weakly_polymatroidal(a, *order);
    json out{{"schema", kSchemaTag},
             {"found", true},
             {"order", order->str()},
             {"certificate", wp_result_to_json(r)}};
    emit(out, c, "found\ttrue\norder\t" + order->str() + "\n");
    return 0;
  }
  throw po::error("wp verb must be check, search, or scan");
}

int cmd_vdec(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("graph", po::value<std::string>(), "graph file, independence complex is used")
      ("ideal", po::value<std::string>(), "squarefree ideal file, dual complex is used");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  SimplicialComplex d;
  if (vm->count("graph"))
    d = independence_complex(load_graph((*vm)["graph"].as<std::string>()));
  else if (vm->count("ideal"))
    d = complex_of_dual(load_ideal((*vm)["ideal"].as<std::string>()));
  else
    throw po::error("need --graph or --ideal");
  auto tree = vertex_decomposition(d);
  json out{{"schema", kSchemaTag}, {"vertex_decomposable", tree.has_value()}};
  out["shedding_tree"] = tree ? shedding_tree_to_json(*tree) : json();
  emit(out, c,
       tree ? "vertex_decomposable\ttrue\n" : "vertex_decomposable\tfalse\n");
  return tree ? 0 : 1;
}

int cmd_odd_cycle(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("n", po::value<std::vector<int>>()->multitoken(), "odd cycle lengths")
      ("smax", po::value<int>()->default_value(2), "largest power");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  std::vector<int> n_list =
      vm->count("n") ? (*vm)["n"].as<std::vector<int>>() : std::vector<int>{5};
  return finish_report(cmd_odd_cycle_regularity(n_list, (*vm)["smax"].as<int>(), c.res), c);
}

int cmd_deg(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("max", po::value<int>()->default_value(15), "largest odd length");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  return finish_report(cmd_deg_formula((*vm)["max"].as<int>()), c);
}

int cmd_whiskers(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("smax", po::value<int>()->default_value(2), "largest power")
      ("graph", po::value<std::string>(), "run one custom base graph")
      ("partition", po::value<std::string>(), "clique partition for the custom graph");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  Common c = common_of(*vm);
  std::vector<Graph> graphs;
  std::vector<CliquePartition> partitions;
  if (vm->count("graph")) {
    graphs.push_back(load_graph((*vm)["graph"].as<std::string>()));
    if (vm->count("partition"))
      partitions.push_back(
          partition_from_json(load_json_file((*vm)["partition"].as<std::string>())));
    else
      partitions.push_back(singleton_partition(graphs.back()));
  } else {
    default_whisker_instances(graphs, partitions);
  }
  return finish_report(cmd_whisker_suite(graphs, partitions, (*vm)["smax"].as<int>(), c.res), c);
}

int cmd_example(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  auto vm = parse(args, desc);
  if (!vm) return 0;
  return finish_report(cmd_example_5_1(), common_of(*vm));
}

int cmd_scan_top(const std::vector<std::string>& args) {
  po::options_description desc;
  add_common(desc);
  desc.add_options()("max-n", po::value<int>()->default_value(6), "largest vertex count");
  auto vm = parse(args, desc);
  if (!vm) return 0;
  return run_scan((*vm)["max-n"].as<int>(), common_of(*vm));
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << kUsage;
    return 2;
  }
  std::string cmd = argv[1];
  std::vector<std::string> args(argv + 2, argv + argc);
  try {
    if (cmd == "ideal") return cmd_ideal(args);
    if (cmd == "graph") return cmd_graph(args);
    if (cmd == "symbolic") return cmd_symbolic(args);
    if (cmd == "herzog") return cmd_herzog(args);
    if (cmd == "lideal") return cmd_lideal(args);
    if (cmd == "truncation-check") return cmd_truncation(args);
    if (cmd == "reg") return cmd_reg(args);
    if (cmd == "betti") return cmd_betti(args);
    if (cmd == "wp") return cmd_wp(args);
    if (cmd == "vdec") return cmd_vdec(args);
    if (cmd == "odd-cycle") return cmd_odd_cycle(args);
    if (cmd == "deg-formula") return cmd_deg(args);
    if (cmd == "whisker-suite") return cmd_whiskers(args);
    if (cmd == "example-5-1") return cmd_example(args);
    if (cmd == "scan") return cmd_scan_top(args);
    if (cmd == "--help" || cmd == "help") {
      std::cout << kUsage;
      return 0;
    }
    std::cerr << "unknown command: " << cmd << "\n\n" << kUsage;
    return 2;
  } catch (const po::error& e) {
    std::cerr << "error: " << e.what() << "\n\n" << kUsage;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
