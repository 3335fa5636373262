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

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mcpart/evaluation.h"
#include "mcpart/harness.h"
#include "mcpart/io.h"
#include "mcpart/multilevel.h"
#include "mcpart/rebalancer.h"

namespace mcpart::cli {

// Exit codes shared by all commands.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;

struct CliConfig {
  std::vector<std::filesystem::path> inputs;
  std::filesystem::path partitionFile;
  std::size_t k = 2;
  std::vector<std::size_t> kList{2, 5, 8, 11, 16, 27, 32};
  double epsilon = 0.03;
  std::uint64_t seed = 0;
  std::size_t seeds = 5;
  std::string weights = "file";
  double t = kDefaultWeightThreshold;
  std::string fallbackRating = "r1a1b3";
  bool fallbackEnabled = true;
  std::optional<std::vector<double>> uOverride;
  bool unboundedRounds = false;
  std::size_t maxRounds = 10;
  // rebalance: print every round, move and fallback selection.
  bool trace = false;
  // Timings are the only output that differs between identical runs.
  bool printTimings = true;
  std::string lpMode = "unconstrained";
  std::string rebalancer = "l1u";
  double heavyThreshold = kHeavyVertexThreshold;
  std::string algorithm = "mcpart";
  std::vector<double> taus = defaultTauGrid();
  std::filesystem::path out;
  std::filesystem::path csv;
};

// Seed from MCPART_SEED, or 0 if unset or unparsable.
std::uint64_t seedFromEnvironment();

// Reads an instance and applies the weight spec (random columns use `seed`).
Hypergraph loadInstance(const std::filesystem::path& path, const std::string& weights,
                        std::uint64_t seed, std::vector<std::string>* warnings = nullptr);

PartitionConfig partitionConfig(const CliConfig& config);
RebalancerConfig rebalancerConfig(const Hypergraph& hg, const NormalizationContext& ctx,
                                  const CliConfig& config);

// What the rebalance command computes, minus file handling.
struct RebalanceOutcome {
  RebalanceResult result;
  std::vector<BlockId> assignment;
  Evaluation evaluation;
};

RebalanceOutcome rebalanceAssignment(const Hypergraph& hg, std::vector<BlockId> assignment,
                                     const CliConfig& config);

// One pipeline run turned into a CSV row.
RunRecord runPartition(const Hypergraph& hg, const std::string& instance, std::size_t k,
                       std::uint64_t seed, const CliConfig& config,
                       std::vector<BlockId>* assignment = nullptr);

int cmdPartition(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmdEvaluate(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmdRebalance(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmdBench(const CliConfig& config, std::ostream& out, std::ostream& err);
int cmdProfileData(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace mcpart::cli
