// Serialization: JSON and plain-text round trips for ideals, graphs,
// partitions, Betti tables, and the certificate types, plus small file
// helpers for the command-line driver.
//
// Emitted documents carry a "schema" tag; parsers accept documents with or
// without it. Text formats: one generator per line ("x1^2*x3", "1" for the
// unit monomial), one edge "i j" per line for graphs.

#ifndef COVERIDEAL_IO_HPP
#define COVERIDEAL_IO_HPP

#include <string>

#include <nlohmann/json.hpp>

#include "coverideal/graph.hpp"
#include "coverideal/monomial.hpp"
#include "coverideal/resolution.hpp"
#include "coverideal/simplicial.hpp"
#include "coverideal/structure.hpp"
#include "coverideal/symbolic.hpp"

namespace coverideal {

inline constexpr const char* kSchemaTag = "coverideal/1";

nlohmann::json ideal_to_json(const MonomialIdeal& a);
MonomialIdeal ideal_from_json(const nlohmann::json& j);
std::string ideal_to_text(const MonomialIdeal& a);
// ambient 0 infers the smallest ambient covering every mentioned variable
MonomialIdeal ideal_from_text(const std::string& text, int ambient = 0);

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);
std::string graph_to_text(const Graph& g);
// n = 0 infers the vertex count from the largest endpoint
Graph graph_from_text(const std::string& text, int n = 0);

nlohmann::json partition_to_json(const CliquePartition& pi);
CliquePartition partition_from_json(const nlohmann::json& j);

nlohmann::json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const nlohmann::json& j);
// coarse table, rows j - i, columns i, "." for absent entries
std::string betti_to_text(const BettiTable& t);

nlohmann::json wp_result_to_json(const WpResult& r);
nlohmann::json shedding_tree_to_json(const SheddingTree& t);
nlohmann::json symbolic_report_to_json(const SymbolicPowerReport& r);

nlohmann::json load_json_file(const std::string& path);
std::string load_text_file(const std::string& path);

}  // namespace coverideal

#endif
