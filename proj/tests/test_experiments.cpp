#include <catch2/catch.hpp>

#include <sstream>

#include "coverideal/experiments.hpp"
#include "coverideal/graph.hpp"
#include "coverideal/io.hpp"

using namespace coverideal;
using nlohmann::json;

TEST_CASE("odd cycle regularity suite") {
  ExperimentReport r = cmd_odd_cycle_regularity({3, 5}, 2);
  REQUIRE(r.rows.size() == 4);
  CHECK(r.all_pass());
  // rows follow input order: n-major, s-minor
  CHECK(r.rows[0].inputs == json{{"n", 3}, {"s", 1}});
  CHECK(r.rows[3].inputs == json{{"n", 5}, {"s", 2}});
  // the pentagon rows pin the exact value
  CHECK(r.rows[2].computed.at("expected") == 3);
  CHECK(r.rows[3].computed.at("expected") == 6);
  CHECK(r.rows[3].computed.at("reg_ordinary") == 6);
  // the triangle rows assert agreement only
  CHECK_FALSE(r.rows[0].computed.contains("expected"));
  CHECK(r.rows[0].computed.at("reg_ordinary") == r.rows[0].computed.at("reg_symbolic"));

  CHECK_THROWS_AS(cmd_odd_cycle_regularity({4}, 2), std::invalid_argument);
  CHECK_THROWS_AS(cmd_odd_cycle_regularity({11}, 2), std::invalid_argument);
  CHECK_THROWS_AS(cmd_odd_cycle_regularity({5}, 4), std::invalid_argument);
}

TEST_CASE("degree formula suite") {
  ExperimentReport r = cmd_deg_formula(15);
  REQUIRE(r.rows.size() == 7);
  CHECK(r.all_pass());
  auto row = [&](int n) -> const ExperimentRow& {
    return r.rows[(n - 3) / 2];
  };
  CHECK(row(3).computed.at("deg_max") == 2);
  CHECK(row(5).computed.at("deg_max") == 3);
  CHECK(row(9).computed.at("deg_max") == 6);
  CHECK(row(13).computed.at("deg_max") == 8);
  CHECK(row(5).computed.at("deg_min") == 3);
  CHECK(row(15).computed.at("deg_min") == 8);

  CHECK_THROWS_AS(cmd_deg_formula(17), std::invalid_argument);
  CHECK_THROWS_AS(cmd_deg_formula(2), std::invalid_argument);
}

TEST_CASE("whisker suite built-in instances") {
  std::vector<Graph> graphs;
  std::vector<CliquePartition> partitions;
  default_whisker_instances(graphs, partitions);
  REQUIRE(graphs.size() >= 10);
  REQUIRE(graphs.size() == partitions.size());

  ExperimentReport r = cmd_whisker_suite(graphs, partitions, 2);
  CHECK(r.all_pass());
  int exchange_rows = 0, reg_rows = 0;
  for (const ExperimentRow& row : r.rows) {
    if (row.claim == "whisker-power-exchange-order") ++exchange_rows;
    if (row.claim == "whisker-power-regularity") ++reg_rows;
  }
  CHECK(exchange_rows >= 20);
  CHECK(reg_rows >= 10);

  // the first instance whiskers an edge into a triangle: reg of the square is 4
  REQUIRE(r.rows[0].claim == "whisker-power-exchange-order");
  REQUIRE(r.rows[1].claim == "whisker-power-regularity");
  CHECK(r.rows[1].inputs.at("s") == 1);
  CHECK(r.rows[1].computed.at("expected") == 2);
  CHECK(r.rows[3].inputs.at("s") == 2);
  CHECK(r.rows[3].computed.at("expected") == 4);
  CHECK(r.rows[3].computed.at("reg_ordinary") == 4);

  CHECK_THROWS_AS(cmd_whisker_suite(graphs, {}, 2), std::invalid_argument);
  CHECK_THROWS_AS(cmd_whisker_suite(graphs, partitions, 3), std::invalid_argument);
}

TEST_CASE("whiskered pentagon regularity appears at first power") {
  // one expensive row on its own: reg(J(whisker C5)) = 5 both ways
  std::vector<Graph> graphs{cycle_graph(5)};
  std::vector<CliquePartition> partitions{singleton_partition(cycle_graph(5))};
  ExperimentReport r = cmd_whisker_suite(graphs, partitions, 1);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.all_pass());
  CHECK(r.rows[1].claim == "whisker-power-regularity");
  CHECK(r.rows[1].computed.at("expected") == 5);
  CHECK(r.rows[1].computed.at("reg_symbolic") == 5);
}

TEST_CASE("caps fail their row without stopping the suite") {
  std::vector<Graph> graphs{complete_graph(2)};
  std::vector<CliquePartition> partitions{CliquePartition{{{1, 2}}}};
  ResolutionOptions tiny;
  tiny.lattice_cap = 2;
  ExperimentReport r = cmd_whisker_suite(graphs, partitions, 1, tiny);
  REQUIRE(r.rows.size() == 2);
  CHECK(r.rows[0].pass);
  CHECK_FALSE(r.rows[1].pass);
  CHECK(r.rows[1].error.rfind("cap:", 0) == 0);
  CHECK_FALSE(r.all_pass());
}

TEST_CASE("appendix suite rows") {
  ExperimentReport r = cmd_example_5_1();
  REQUIRE(r.rows.size() == 5);
  CHECK(r.all_pass());
  CHECK(r.rows[0].claim == "appendix-pair-minimal-generators");
  CHECK(r.rows[1].claim == "appendix-pair-degree-profile");
  CHECK(r.rows[2].claim == "appendix-drop-cover-nonmember");
  CHECK(r.rows[3].claim == "appendix-old-trade-fails");
  CHECK(r.rows[4].claim == "appendix-new-trade-lands");
  CHECK(r.rows[3].computed.at("monomial") == json::array({1, 1, 2, 2, 0}));
  CHECK(r.rows[4].computed.at("monomial") == json::array({1, 1, 2, 1, 1}));
}

TEST_CASE("report serialization") {
  ExperimentReport r = cmd_deg_formula(5);
  json j = report_to_json(r);
  CHECK(j.at("id") == "deg-formula");
  CHECK(j.at("all_pass") == true);
  CHECK(j.at("rows").size() == 2);
  CHECK(j.at("rows")[0].at("claim") == "cycle-cover-degree-extremes");
  CHECK(j.at("rows")[0].at("millis").is_number());

  std::istringstream tsv(report_to_tsv(r));
  std::string line;
  REQUIRE(std::getline(tsv, line));
  CHECK(line == "claim\tinputs\tcomputed\tpass\tmillis\terror");
  int rows = 0;
  while (std::getline(tsv, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), '\t') == 5);
    CHECK(line.find("\tpass\t") != std::string::npos);
  }
  CHECK(rows == 2);
}
