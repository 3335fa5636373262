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
#include <span>
#include <string>
#include <vector>

#include "mcpart/coarsening.h"
#include "mcpart/initial_partitioning.h"
#include "mcpart/rebalancer.h"
#include "mcpart/refinement.h"

namespace mcpart {

struct PartitionConfig {
  std::uint64_t seed = 0;
  double threshold = kDefaultWeightThreshold;
  std::size_t maxRounds = 10;
  bool fallbackEnabled = true;
  FallbackRating fallbackRating;
  RebalanceStrategy strategy = RebalanceStrategy::kL1u;
  CoarseningConfig coarsening;
  InitialPartitioningConfig initial;
  RefinementConfig refinement;
};

struct PhaseTimings {
  double total = 0.0;
  double coarsening = 0.0;
  double initialPartitioning = 0.0;
  double refinement = 0.0;
  double rebalancing = 0.0;
};

struct PartitionReport {
  double connectivity = 0.0;
  std::vector<double> maxBlockWeight;
  bool balanced = false;
  std::size_t levels = 0;
  std::size_t removedDegreeZero = 0;
  PhaseTimings timings;
  RebalanceTally rebalance;
  std::vector<std::string> warnings;
};

struct PartitionResult {
  std::vector<BlockId> assignment;
  PartitionReport report;
};

struct DegreeZeroRemoval {
  Hypergraph reduced;
  // Reduced vertex -> original vertex.
  std::vector<VertexId> kept;
  // Original ids of the removed vertices.
  std::vector<VertexId> removed;
};

DegreeZeroRemoval removeDegreeZero(const Hypergraph& hg);

// Places the `removed` vertices of a full-size state, heaviest (L1) first,
// each into the block maximizing c(v)^T (1 - c(V_i)) where c(V_i) counts only
// the vertices placed so far (ties: lower block id). The current blocks of the
// removed vertices are ignored. Rebalances afterwards if the state became
// unbalanced and a rebalancer config is given.
void reinsertDegreeZero(PartitionState& state, std::span<const VertexId> removed,
                        const RebalancerConfig* rebalancer, RebalanceTally& tally);

// Projects a partition of the coarsest level back to the input hypergraph,
// rebalancing and refining on every level including the coarsest. `hg` is the
// finest hypergraph the hierarchy was built from.
std::vector<BlockId> uncoarsenAndRefine(const Hypergraph& hg, const Hierarchy& hierarchy,
                                        std::vector<BlockId> coarseAssignment,
                                        const NormalizationContext& ctx, double epsilon,
                                        const PartitionConfig& config, RebalanceTally& tally,
                                        double* refinementSeconds = nullptr);

// Full multilevel pipeline. Throws std::invalid_argument if k < 2 or a weight
// dimension sums to zero.
PartitionResult partition(const Hypergraph& hg, std::size_t k, double epsilon,
                          const PartitionConfig& config);

}  // namespace mcpart
