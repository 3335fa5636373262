// This file is part of mcpart.
//
// MIT License
//
// Copyright (c) 2026 mcpart contributors
//
// Permission is hereby granted, free of charge, to any person obtaining a copy
// of this software and associated documentation files (the "Software"), to deal
// in the Software without restriction, including without limitation the rights
// to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
// copies of the Software, and to permit persons to whom the Software is
// furnished to do so, subject to the following conditions:
//
// The above copyright notice and this permission notice shall be included in all
// copies or substantial portions of the Software.
//
// THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
// IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
// FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
// AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
// LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
// OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
// SOFTWARE.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using mcpart::cli::CliConfig;

void addCommon(CLI::App* app, CliConfig& config) {
  app->add_option("--epsilon", config.epsilon, "Allowed imbalance")->capture_default_str();
  app->add_option("--seed", config.seed, "Random seed (default: MCPART_SEED or 0)");
  app->add_option("--weights", config.weights,
                  "unit | degree | file | file:PATH | rand:D:LO:HI, joined by ','")
      ->capture_default_str();
  app->add_option("--t", config.t, "Weight threshold for the imbalance bound")
      ->capture_default_str();
  app->add_option("--fallback-rating", config.fallbackRating, "Fallback score, e.g. r1a1b3")
      ->capture_default_str();
  app->add_flag("--no-fallback", [&](std::int64_t) { config.fallbackEnabled = false; },
                "Disable the fallback heuristic");
  app->add_option("--max-rounds", config.maxRounds, "Greedy round limit")->capture_default_str();
  app->add_option("--rebalancer", config.rebalancer, "l1u | baseline")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mcpart: multi-constraint hypergraph partitioner"};
  app.require_subcommand(1);
  CliConfig config;
  config.seed = mcpart::cli::seedFromEnvironment();
  std::string u_override;

  auto* partition = app.add_subcommand("partition", "Partition a hypergraph");
  partition->add_option("instance", config.inputs, "Hypergraph or .graph file")->required();
  partition->add_option("--k", config.k, "Number of blocks")->required();
  partition->add_option("--lp-mode", config.lpMode, "constrained | unconstrained")
      ->capture_default_str();
  partition->add_option("--out", config.out, "Partition output file");
  partition->add_option("--csv", config.csv, "Append a run record to this CSV");
  partition->add_option("--algorithm", config.algorithm, "Algorithm name for the CSV")
      ->capture_default_str();
  partition->add_flag("--no-timings", [&](std::int64_t) { config.printTimings = false; },
                      "Omit timings from the report");
  addCommon(partition, config);

  auto* evaluate = app.add_subcommand("evaluate", "Evaluate a partition from scratch");
  evaluate->add_option("files", config.inputs, "Instance and partition file")
      ->required()
      ->expected(2);
  evaluate->add_option("--k", config.k, "Number of blocks")->required();
  evaluate->add_option("--u-override", u_override, "Comma-separated bound vector u");
  addCommon(evaluate, config);

  auto* rebalance = app.add_subcommand("rebalance", "Rebalance an existing partition");
  rebalance->add_option("files", config.inputs, "Instance and partition file")
      ->required()
      ->expected(2);
  rebalance->add_option("--k", config.k, "Number of blocks")->required();
  rebalance->add_option("--u-override", u_override, "Comma-separated bound vector u");
  rebalance->add_flag("--unbounded-rounds", config.unboundedRounds,
                      "Run greedy rounds until balanced or stalled");
  rebalance->add_flag("--trace", config.trace, "Print rounds, moves and fallback selections");
  rebalance->add_option("--out", config.out, "Partition output file");
  addCommon(rebalance, config);

  auto* bench = app.add_subcommand("bench", "Sweep instances x k x seeds");
  bench->add_option("instances", config.inputs, "Instance files")->required();
  bench->add_option("--k", config.kList, "Block counts")->delimiter(',')->capture_default_str();
  bench->add_option("--seeds", config.seeds, "Seeds per (instance, k)")->capture_default_str();
  bench->add_option("--lp-mode", config.lpMode, "constrained | unconstrained")
      ->capture_default_str();
  bench->add_option("--heavy-threshold", config.heavyThreshold,
                    "Skip (instance, k) with a heavier normalized vertex")
      ->capture_default_str();
  bench->add_option("--algorithm", config.algorithm, "Algorithm name for the CSV")
      ->capture_default_str();
  bench->add_option("--csv", config.csv, "Append run records to this CSV");
  bench->add_flag("--no-timings", [&](std::int64_t) { config.printTimings = false; },
                  "Omit timings from the summary");
  addCommon(bench, config);

  auto* profile = app.add_subcommand("profile-data", "Performance profile table from run CSVs");
  profile->add_option("csv", config.inputs, "Run CSV files")->required();
  profile->add_option("--tau", config.taus, "Tau grid")->delimiter(',');
  profile->add_option("--out", config.out, "Output CSV (default: stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help exits with 0; every other parse error is an input error.
    return app.exit(e) == 0 ? mcpart::cli::kExitOk : mcpart::cli::kExitInputError;
  }

  if (!u_override.empty()) {
    std::vector<double> u;
    std::stringstream parts(u_override);
    std::string item;
    try {
      while (std::getline(parts, item, ',')) u.push_back(std::stod(item));
    } catch (const std::exception&) {
      std::cerr << "error: --u-override expects comma-separated numbers\n";
      return mcpart::cli::kExitInputError;
    }
    config.uOverride = std::move(u);
  }

  if (partition->parsed()) return mcpart::cli::cmdPartition(config, std::cout, std::cerr);
  if (evaluate->parsed()) return mcpart::cli::cmdEvaluate(config, std::cout, std::cerr);
  if (rebalance->parsed()) return mcpart::cli::cmdRebalance(config, std::cout, std::cerr);
  if (bench->parsed()) return mcpart::cli::cmdBench(config, std::cout, std::cerr);
  return mcpart::cli::cmdProfileData(config, std::cout, std::cerr);
}
