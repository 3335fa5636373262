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

#include "mcpart/hypergraph.h"

namespace mcpart {

// From-scratch evaluation of a k-way assignment. Shares no code with the
// incremental bookkeeping in PartitionState.
struct Evaluation {
  double connectivity = 0.0;
  // k rows of d normalized weights.
  std::vector<std::vector<double>> blockWeight;
  // Total L1^u imbalance; 0 when no bound vector was given.
  double l1uTotal = 0.0;
  std::vector<double> maxBlockWeight;

  bool balanced(double epsilon) const;
};

// Throws std::invalid_argument if the assignment has the wrong length or a
// block id >= k.
Evaluation recomputeAll(const Hypergraph& hg, const NormalizationContext& ctx, std::size_t k,
                        std::span<const BlockId> assignment, std::span<const double> u = {});

}  // namespace mcpart
