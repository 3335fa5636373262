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

#include <map>
#include <ostream>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "mcpart/hypergraph.h"
#include "mcpart/io.h"

namespace mcpart {

inline constexpr double kHeavyVertexThreshold = 0.7;

// Geometric mean; values below `floor` are raised to it first so that a zero
// objective does not collapse the mean. Empty input gives 0.
double geometricMean(std::span<const double> values, double floor = 1.0);

// True if some vertex has a normalized weight above `threshold` for k blocks.
bool hasHeavyVertex(const Hypergraph& hg, std::size_t k, double threshold = kHeavyVertexThreshold);

struct InstanceKey {
  std::string instance;
  std::size_t k = 0;

  auto operator<=>(const InstanceKey&) const = default;
};

// Seeds of one (algorithm, instance, k) combined.
struct InstanceResult {
  InstanceKey key;
  std::size_t seeds = 0;
  double meanConnectivity = 0.0;
  double meanTime = 0.0;
  // Balanced if at least one seed produced a balanced partition.
  bool balanced = false;
};

// algorithm -> results ordered by key.
using AggregatedRuns = std::map<std::string, std::vector<InstanceResult>>;

AggregatedRuns aggregateRuns(std::span<const RunRecord> records);

struct AlgorithmSummary {
  std::string algorithm;
  std::size_t instances = 0;
  double geoMeanConnectivity = 0.0;
  double geoMeanTime = 0.0;
  double balancedFraction = 0.0;
};

std::vector<AlgorithmSummary> summarize(const AggregatedRuns& runs);

struct ProfilePoint {
  std::string algorithm;
  double tau = 1.0;
  // Share of instances with a feasible result within tau of the best
  // feasible result of any algorithm.
  double fraction = 0.0;
  // Share of instances where this algorithm's result is infeasible.
  double infeasibleFraction = 0.0;
};

std::vector<double> defaultTauGrid();

// Every algorithm must report the same set of instances; throws
// std::invalid_argument otherwise.
std::vector<ProfilePoint> performanceProfile(const AggregatedRuns& runs,
                                             std::span<const double> taus);

// CSV with header algorithm,tau,fraction,infeasible_fraction.
void writeProfileTable(std::span<const ProfilePoint> points, std::ostream& out);

}  // namespace mcpart
