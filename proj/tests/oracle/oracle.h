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

#include <cstddef>
#include <span>
#include <vector>

#include "mcpart/hypergraph.h"

namespace mcpart::oracle {

// Largest k^n bruteForceOptimal accepts.
inline constexpr double kMaxAssignments = 1e7;

struct OptimalResult {
  bool feasible = false;
  double connectivity = 0.0;
  std::vector<BlockId> assignment;
};

// Minimum connectivity over all epsilon-balanced assignments, by enumeration.
// Throws std::invalid_argument if k^n exceeds kMaxAssignments.
OptimalResult bruteForceOptimal(const Hypergraph& hg, std::size_t k, double epsilon);

struct ImprovingMove {
  VertexId vertex = 0;
  BlockId target = 0;
  double balanceGain = 0.0;
};

// Every single move whose L1^u gain is positive (> 1e-12), each evaluated by
// recomputing the whole partition before and after.
std::vector<ImprovingMove> enumerateImprovingMoves(const Hypergraph& hg,
                                                   const NormalizationContext& ctx, std::size_t k,
                                                   std::span<const BlockId> assignment,
                                                   std::span<const double> u);

// True iff some single move has positive L1^u gain (> 1e-12). Every
// candidate is scored by summing all block loads from scratch; stops at the
// first hit.
bool hasImprovingMove(const Hypergraph& hg, std::size_t k, std::span<const BlockId> assignment,
                      std::span<const double> u);

// Plain (lambda - 1) by set counting, sharing nothing with the library.
double connectivityOf(const Hypergraph& hg, std::span<const BlockId> assignment);

}  // namespace mcpart::oracle
