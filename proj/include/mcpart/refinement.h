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

#include "mcpart/partition.h"
#include "mcpart/rebalancer.h"

namespace mcpart {

enum class LpMode { kConstrained, kUnconstrained };

struct RefinementConfig {
  bool lpEnabled = true;
  std::size_t lpRounds = 5;
  LpMode lpMode = LpMode::kUnconstrained;
  bool fmEnabled = true;
  std::size_t fmMaxNegativeStreak = 100;
  std::size_t fmMaxPasses = 10;
  std::uint64_t seed = 0;
};

// Connectivity gain of moving v to every block (entry of v's own block is 0).
void computeGains(const PartitionState& state, VertexId v, std::vector<double>& gains);

// Label propagation that only applies positive-gain moves keeping every
// dimension of the target within 1 + epsilon. Returns the number of moves.
std::size_t refineLPConstrained(PartitionState& state, double epsilon,
                                const RefinementConfig& config);

// Alternates label propagation passes that ignore the balance constraint
// (capped at u + max vertex weight per dimension) with rebalancing. The
// result is the best balanced state seen, or the last state if none was
// balanced.
std::size_t refineLPUnconstrained(PartitionState& state, const RefinementConfig& config,
                                  const RebalancerConfig& rebalancer, RebalanceTally& tally);

// k-way FM with moves restricted to balanced targets. Each pass moves every
// vertex at most once, stops after fmMaxNegativeStreak non-improving moves and
// rolls back to the best prefix. Does nothing on an unbalanced input. Returns
// the connectivity improvement.
double refineFMConstrained(PartitionState& state, double epsilon, const RefinementConfig& config);

}  // namespace mcpart
