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

#include "mcpart/evaluation.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "mcpart/partition.h"

namespace mcpart {

bool Evaluation::balanced(double epsilon) const {
  return std::all_of(maxBlockWeight.begin(), maxBlockWeight.end(),
                     [&](double w) { return w <= 1.0 + epsilon + kBalanceTolerance; });
}

Evaluation recomputeAll(const Hypergraph& hg, const NormalizationContext& ctx, std::size_t k,
                        std::span<const BlockId> assignment, std::span<const double> u) {
  if (assignment.size() != hg.numVertices()) {
    throw std::invalid_argument("assignment size does not match vertex count");
  }
  const std::size_t d = hg.dimension();
  Evaluation result;
  result.blockWeight.assign(k, std::vector<double>(d, 0.0));
  for (VertexId v = 0; v < hg.numVertices(); ++v) {
    if (assignment[v] >= k) {
      throw std::invalid_argument("block id out of range");
    }
    for (std::size_t j = 0; j < d; ++j) {
      result.blockWeight[assignment[v]][j] += ctx.normalized(hg, v, j);
    }
  }
  for (EdgeId e = 0; e < hg.numEdges(); ++e) {
    std::set<BlockId> blocks;
    for (VertexId v : hg.pins(e)) {
      blocks.insert(assignment[v]);
    }
    result.connectivity += static_cast<double>(blocks.size() - 1) * hg.edgeWeight(e);
  }
  result.maxBlockWeight.assign(d, 0.0);
  for (const auto& row : result.blockWeight) {
    for (std::size_t j = 0; j < d; ++j) {
      result.maxBlockWeight[j] = std::max(result.maxBlockWeight[j], row[j]);
      if (!u.empty()) {
        result.l1uTotal += std::max(row[j] - u[j], 0.0);
      }
    }
  }
  return result;
}

}  // namespace mcpart
