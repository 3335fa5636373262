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

#include "mcpart/objective.h"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace mcpart {

ImbalanceBound ImbalanceBound::fromOverride(std::vector<double> u, double epsilon) {
  ImbalanceBound bound;
  bound.u = std::move(u);
  bound.epsilon = epsilon;
  bound.overridden = true;
  return bound;
}

ImbalanceBound makeBound(const Hypergraph& hg, const NormalizationContext& ctx, double epsilon,
                         double threshold) {
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  if (!(threshold > 0.0)) {
    throw std::invalid_argument("weight threshold t must be positive");
  }
  ImbalanceBound bound;
  bound.epsilon = epsilon;
  bound.threshold = threshold;
  bound.maxWeight = maxNormalizedWeight(hg, ctx);
  const std::size_t d = hg.dimension();
  bound.thresholdedMaxWeight.resize(d);
  bound.u.resize(d);
  for (std::size_t j = 0; j < d; ++j) {
    bound.thresholdedMaxWeight[j] = std::min(threshold, bound.maxWeight[j]);
    bound.u[j] = 1.0 + epsilon - bound.thresholdedMaxWeight[j];
    if (!(bound.u[j] > 0.0)) {
      throw std::invalid_argument("imbalance bound u_" + std::to_string(j) +
                                  " is not positive; use a smaller threshold t");
    }
  }
  return bound;
}

double l1uBlock(std::span<const double> blockWeight, const ImbalanceBound& bound) {
  double sum = 0.0;
  for (std::size_t j = 0; j < blockWeight.size(); ++j) {
    sum += std::max(blockWeight[j] - bound.u[j], 0.0);
  }
  return sum;
}

double l1uTotal(const PartitionState& state, const ImbalanceBound& bound) {
  double sum = 0.0;
  for (BlockId b = 0; b < state.k(); ++b) {
    sum += l1uBlock(state.blockWeight(b), bound);
  }
  return sum;
}

double balanceGain(const PartitionState& state, VertexId v, BlockId target,
                   const ImbalanceBound& bound) {
  const BlockId source = state.block(v);
  double gain = 0.0;
  for (std::size_t j = 0; j < state.dimension(); ++j) {
    const double uj = bound.u[j];
    const double ws = state.blockWeight(source, j);
    const double wt = state.blockWeight(target, j);
    const double ws_after = ws - state.vertexWeightIn(v, source, j);
    const double wt_after = wt + state.vertexWeightIn(v, target, j);
    gain += std::max(ws - uj, 0.0) + std::max(wt - uj, 0.0);
    gain -= std::max(ws_after - uj, 0.0) + std::max(wt_after - uj, 0.0);
  }
  return gain;
}

double connectivityGain(const PartitionState& state, VertexId v, BlockId target) {
  const BlockId source = state.block(v);
  const Hypergraph& hg = state.hypergraph();
  double gain = 0.0;
  for (EdgeId e : hg.incidentEdges(v)) {
    if (state.pinCount(e, source) == 1) gain += hg.edgeWeight(e);
    if (state.pinCount(e, target) == 0) gain -= hg.edgeWeight(e);
  }
  return gain;
}

double rating(const GainPair& gains) {
  if (!(gains.balanceGain > 0.0)) {
    throw std::invalid_argument("rating requires a positive balance gain");
  }
  if (gains.connectivityGain < 0.0) {
    return gains.connectivityGain / gains.balanceGain;
  }
  return gains.connectivityGain * gains.balanceGain;
}

}  // namespace mcpart
