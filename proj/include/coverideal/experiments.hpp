// Experiment suites: each command builds a report of independently
// recomputable rows (inputs, computed invariants, pass/fail, timing).
// Resource caps mark their row failed without stopping the suite.

#ifndef COVERIDEAL_EXPERIMENTS_HPP
#define COVERIDEAL_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coverideal/graph.hpp"
#include "coverideal/resolution.hpp"

namespace coverideal {

struct ExperimentRow {
  std::string claim;        // stable identifier of the asserted fact
  nlohmann::json inputs;    // enough to recompute the row from scratch
  nlohmann::json computed;  // invariants found during the run
  bool pass = false;
  std::string error;        // cap or precondition message, empty otherwise
  double millis = 0.0;
};

struct ExperimentReport {
  std::string id;
  nlohmann::json parameters;
  std::vector<ExperimentRow> rows;

  bool all_pass() const;
};

nlohmann::json report_to_json(const ExperimentReport& r);
std::string report_to_tsv(const ExperimentReport& r);

// regularity of ordinary vs symbolic powers of odd cycles; odd n <= 9,
// s_max <= 3; for n = 5 the common value must be 3s
ExperimentReport cmd_odd_cycle_regularity(const std::vector<int>& n_list, int s_max,
                                          const ResolutionOptions& opts = {});

// extreme generator degrees of odd cycle cover ideals against the closed
// formulas; odd n from 3 to n_max <= 15
ExperimentReport cmd_deg_formula(int n_max);

// exchange order and regularity of powers of clique-whiskered cover ideals;
// graphs and partitions run in parallel order
ExperimentReport cmd_whisker_suite(const std::vector<Graph>& graphs,
                                   const std::vector<CliquePartition>& partitions, int s_max,
                                   const ResolutionOptions& opts = {});
// built-in instance list for the suite above
void default_whisker_instances(std::vector<Graph>& graphs,
                               std::vector<CliquePartition>& partitions);

// the five membership facts of the appendix pentagon pair
ExperimentReport cmd_example_5_1();

}  // namespace coverideal

#endif
