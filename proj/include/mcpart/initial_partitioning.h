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
#include <vector>

#include "mcpart/hypergraph.h"
#include "mcpart/rebalancer.h"
#include "mcpart/refinement.h"

namespace mcpart {

struct InitialPartitioningConfig {
  // Number of portfolio repetitions per bisection; each runs every algorithm.
  std::size_t portfolioSeeds = 4;
  double threshold = kDefaultWeightThreshold;
  bool fallbackEnabled = true;
  FallbackRating fallbackRating;
  RebalanceStrategy strategy = RebalanceStrategy::kL1u;
  std::size_t fmMaxNegativeStreak = 100;
};

// Epsilon used per bisection so that the imbalance compounded over
// ceil(log2 k) levels stays within epsilon.
double adaptiveBisectionEpsilon(double epsilon, std::size_t k);

// Recursive bipartitioning into k blocks. Uneven block counts get
// proportional weight targets. Each bisection picks the best of a small
// portfolio (random balanced assignment, greedy hyperedge growing), each
// rebalanced and refined with FM; balanced results win over unbalanced ones,
// then lower connectivity. The result may be unbalanced.
std::vector<BlockId> initialPartition(const Hypergraph& hg, std::size_t k, double epsilon,
                                      const InitialPartitioningConfig& config,
                                      std::uint64_t seed, RebalanceTally& tally);

}  // namespace mcpart
