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

#include <span>
#include <vector>

#include "mcpart/partition.h"

namespace mcpart {

inline constexpr double kDefaultWeightThreshold = 0.0025;

// Per-dimension limits u of the L1^u imbalance.
//
// In default mode u_j = 1 + epsilon - min(t, max_v c(v)_j): ignoring vertices
// heavier than t keeps a few heavy vertices from shrinking u. The override
// mode stores a caller-provided u verbatim.
struct ImbalanceBound {
  std::vector<double> u;
  double epsilon = 0.0;
  double threshold = kDefaultWeightThreshold;
  std::vector<double> maxWeight;             // delta_j
  std::vector<double> thresholdedMaxWeight;  // delta'_j
  bool overridden = false;

  std::size_t dimension() const { return u.size(); }

  static ImbalanceBound fromOverride(std::vector<double> u, double epsilon);
};

// Throws std::invalid_argument if epsilon <= 0, t <= 0, or some u_j <= 0.
ImbalanceBound makeBound(const Hypergraph& hg, const NormalizationContext& ctx, double epsilon,
                         double threshold = kDefaultWeightThreshold);

// sum_j max(w_j - u_j, 0)
double l1uBlock(std::span<const double> blockWeight, const ImbalanceBound& bound);
double l1uTotal(const PartitionState& state, const ImbalanceBound& bound);

// L1^u(before) - L1^u(after) for moving v to target, evaluated from the two
// affected block rows only. Positive means the imbalance decreases.
double balanceGain(const PartitionState& state, VertexId v, BlockId target,
                   const ImbalanceBound& bound);

// (lambda-1)(before) - (lambda-1)(after) for moving v to target.
double connectivityGain(const PartitionState& state, VertexId v, BlockId target);

struct GainPair {
  double connectivityGain = 0.0;
  double balanceGain = 0.0;
};

// Greedy rebalancing rating, higher is better:
//   g_conn / g_bal   if g_conn < 0
//   g_conn * g_bal   otherwise.
// Requires balanceGain > 0; throws std::invalid_argument otherwise.
double rating(const GainPair& gains);

}  // namespace mcpart
