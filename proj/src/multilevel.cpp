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

#include "mcpart/multilevel.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

namespace mcpart {

namespace {

using Clock = std::chrono::steady_clock;

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

RebalancerConfig rebalancerFor(const Hypergraph& hg, const NormalizationContext& ctx,
                               double epsilon, const PartitionConfig& config) {
  RebalancerConfig rebalancer;
  rebalancer.bound = makeBound(hg, ctx, epsilon, config.threshold);
  rebalancer.maxRounds = config.maxRounds;
  rebalancer.fallbackEnabled = config.fallbackEnabled;
  rebalancer.fallbackRating = config.fallbackRating;
  rebalancer.strategy = config.strategy;
  return rebalancer;
}

void refineLevel(PartitionState& state, double epsilon, const PartitionConfig& config,
                 std::uint64_t seed, RebalanceTally& tally) {
  const RebalancerConfig rebalancer =
      rebalancerFor(state.hypergraph(), state.context(), epsilon, config);
  if (!state.isBalanced(epsilon)) {
    rebalanceCounted(state, rebalancer, tally);
  }
  RefinementConfig refinement = config.refinement;
  refinement.seed = seed;
  if (refinement.lpEnabled) {
    if (refinement.lpMode == LpMode::kConstrained) {
      refineLPConstrained(state, epsilon, refinement);
    } else {
      refineLPUnconstrained(state, refinement, rebalancer, tally);
    }
  }
  if (refinement.fmEnabled) {
    refineFMConstrained(state, epsilon, refinement);
  }
}

}  // namespace

DegreeZeroRemoval removeDegreeZero(const Hypergraph& hg) {
  DegreeZeroRemoval result;
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> local(hg.numVertices(), kAbsent);
  for (VertexId v = 0; v < hg.numVertices(); ++v) {
    if (hg.degree(v) == 0) {
      result.removed.push_back(v);
    } else {
      local[v] = static_cast<VertexId>(result.kept.size());
      result.kept.push_back(v);
    }
  }
  const std::size_t d = hg.dimension();
  std::vector<double> weights;
  weights.reserve(result.kept.size() * d);
  for (VertexId v : result.kept) {
    auto w = hg.weight(v);
    weights.insert(weights.end(), w.begin(), w.end());
  }
  auto pins = hg.pinLists();
  for (auto& edge : pins) {
    for (VertexId& p : edge) p = local[p];
  }
  result.reduced =
      Hypergraph::fromFlat(result.kept.size(), d, pins, std::move(weights), hg.edgeWeights());
  return result;
}

void reinsertDegreeZero(PartitionState& state, std::span<const VertexId> removed,
                        const RebalancerConfig* rebalancer, RebalanceTally& tally) {
  const std::size_t d = state.dimension();
  const std::size_t k = state.k();
  std::vector<double> base(k * d);
  for (BlockId b = 0; b < k; ++b) {
    for (std::size_t j = 0; j < d; ++j) base[b * d + j] = state.blockWeight(b, j);
  }
  for (VertexId v : removed) {
    for (std::size_t j = 0; j < d; ++j) {
      base[state.block(v) * d + j] -= state.vertexWeightIn(v, state.block(v), j);
    }
  }

  std::vector<VertexId> order(removed.begin(), removed.end());
  std::stable_sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
    const double wa = state.vertexWeightL1(a);
    const double wb = state.vertexWeightL1(b);
    if (wa != wb) return wa > wb;
    return a < b;
  });
  for (VertexId v : order) {
    BlockId best = 0;
    double best_score = 0.0;
    for (BlockId b = 0; b < k; ++b) {
      double score = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        score += state.vertexWeightIn(v, b, j) * (1.0 - base[b * d + j]);
      }
      if (b == 0 || score > best_score) {
        best = b;
        best_score = score;
      }
    }
    for (std::size_t j = 0; j < d; ++j) base[best * d + j] += state.vertexWeightIn(v, best, j);
    state.applyMove(v, best);
  }
  if (rebalancer != nullptr && !state.isBalanced(rebalancer->bound.epsilon)) {
    rebalanceCounted(state, *rebalancer, tally);
  }
}

std::vector<BlockId> uncoarsenAndRefine(const Hypergraph& hg, const Hierarchy& hierarchy,
                                        std::vector<BlockId> coarseAssignment,
                                        const NormalizationContext& ctx, double epsilon,
                                        const PartitionConfig& config, RebalanceTally& tally,
                                        double* refinementSeconds) {
  const std::size_t k = ctx.k();
  std::vector<BlockId> assignment = std::move(coarseAssignment);
  const std::size_t num_levels = hierarchy.levels.size();
  // Level i (0 = input) refines on hypergraph i and projects from level i + 1.
  for (std::size_t step = 0; step <= num_levels; ++step) {
    const std::size_t level = num_levels - step;
    const Hypergraph& current = level == 0 ? hg : hierarchy.levels[level - 1].hypergraph;
    if (step > 0) {
      const auto& projection = hierarchy.levels[level].projection;
      std::vector<BlockId> fine(projection.size());
      for (VertexId v = 0; v < projection.size(); ++v) fine[v] = assignment[projection[v]];
      assignment = std::move(fine);
    }
    const auto start = Clock::now();
    PartitionState state(current, ctx, k, assignment);
    refineLevel(state, epsilon, config, config.seed + 7919 * (level + 1), tally);
    assignment = state.assignment();
    if (refinementSeconds != nullptr) *refinementSeconds += secondsSince(start);
  }
  return assignment;
}

PartitionResult partition(const Hypergraph& hg, std::size_t k, double epsilon,
                          const PartitionConfig& config) {
  const auto start = Clock::now();
  const NormalizationContext ctx = normalize(hg, k);
  if (!(epsilon > 0.0)) {
    throw std::invalid_argument("epsilon must be positive");
  }
  PartitionResult result;
  PartitionReport& report = result.report;

  const auto heaviest = maxNormalizedWeight(hg, ctx);
  for (std::size_t j = 0; j < heaviest.size(); ++j) {
    if (heaviest[j] > 1.0 + epsilon) {
      std::ostringstream msg;
      msg << "vertex weight " << heaviest[j] << " in dimension " << j
          << " exceeds the block limit; no balanced partition exists";
      report.warnings.push_back(msg.str());
    }
  }

  const DegreeZeroRemoval removal = removeDegreeZero(hg);
  report.removedDegreeZero = removal.removed.size();
  RebalanceTally tally;
  std::vector<BlockId> reduced_assignment;

  if (removal.reduced.numVertices() > 0) {
    auto phase = Clock::now();
    const Hierarchy hierarchy =
        coarsen(removal.reduced, ctx, k, config.coarsening, config.seed);
    report.levels = hierarchy.levels.size();
    report.timings.coarsening = secondsSince(phase);

    phase = Clock::now();
    const Hypergraph& coarsest =
        hierarchy.levels.empty() ? removal.reduced : hierarchy.levels.back().hypergraph;
    std::vector<BlockId> coarse =
        initialPartition(coarsest, k, epsilon, config.initial, config.seed + 1, tally);
    report.timings.initialPartitioning = secondsSince(phase);

    reduced_assignment = uncoarsenAndRefine(removal.reduced, hierarchy, std::move(coarse), ctx,
                                            epsilon, config, tally, &report.timings.refinement);
  }

  std::vector<BlockId> full(hg.numVertices(), 0);
  for (VertexId i = 0; i < removal.kept.size(); ++i) full[removal.kept[i]] = reduced_assignment[i];
  PartitionState state(hg, ctx, k, full);
  const RebalancerConfig rebalancer = rebalancerFor(hg, ctx, epsilon, config);
  reinsertDegreeZero(state, removal.removed, &rebalancer, tally);
  if (!state.isBalanced(epsilon)) {
    rebalanceCounted(state, rebalancer, tally);
  }

  result.assignment = state.assignment();
  report.connectivity = state.connectivity();
  report.maxBlockWeight = state.maxBlockWeight();
  report.balanced = state.isBalanced(epsilon);
  report.rebalance = tally;
  report.timings.rebalancing = tally.seconds;
  report.timings.total = secondsSince(start);
  return result;
}

}  // namespace mcpart
