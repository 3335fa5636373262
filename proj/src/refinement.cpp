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

#include "mcpart/refinement.h"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>

namespace mcpart {

void computeGains(const PartitionState& state, VertexId v, std::vector<double>& gains) {
  const Hypergraph& hg = state.hypergraph();
  const BlockId source = state.block(v);
  gains.assign(state.k(), 0.0);
  double benefit = 0.0;
  double incident = 0.0;
  for (EdgeId e : hg.incidentEdges(v)) {
    const double w = hg.edgeWeight(e);
    incident += w;
    if (state.pinCount(e, source) == 1) benefit += w;
    for (BlockId t = 0; t < state.k(); ++t) {
      if (t != source && state.pinCount(e, t) > 0) gains[t] += w;
    }
  }
  // gain(t) = benefit - sum of edges without pins in t
  for (BlockId t = 0; t < state.k(); ++t) {
    gains[t] = t == source ? 0.0 : benefit - (incident - gains[t]);
  }
}

namespace {

bool fitsUnder(const PartitionState& state, VertexId v, BlockId t, std::span<const double> cap) {
  for (std::size_t j = 0; j < state.dimension(); ++j) {
    if (state.blockWeight(t, j) + state.vertexWeightIn(v, t, j) > cap[j] + kBalanceTolerance) {
      return false;
    }
  }
  return true;
}

// One label propagation pass; moves each vertex to its best positive-gain
// block among those where it fits under `cap`.
std::size_t lpPass(PartitionState& state, std::span<const VertexId> order,
                   std::span<const double> cap, std::vector<double>& gains) {
  std::size_t moves = 0;
  for (VertexId v : order) {
    if (state.hypergraph().degree(v) == 0) continue;
    computeGains(state, v, gains);
    BlockId best = kInvalidBlock;
    double best_gain = 0.0;
    for (BlockId t = 0; t < state.k(); ++t) {
      if (t == state.block(v) || !(gains[t] > best_gain)) continue;
      if (fitsUnder(state, v, t, cap)) {
        best = t;
        best_gain = gains[t];
      }
    }
    if (best != kInvalidBlock) {
      state.applyMove(v, best);
      ++moves;
    }
  }
  return moves;
}

std::vector<VertexId> visitOrder(std::size_t n, std::mt19937_64& rng) {
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::shuffle(order.begin(), order.end(), rng);
  return order;
}

}  // namespace

std::size_t refineLPConstrained(PartitionState& state, double epsilon,
                                const RefinementConfig& config) {
  std::mt19937_64 rng(config.seed);
  const std::vector<double> cap(state.dimension(), 1.0 + epsilon);
  std::vector<double> gains;
  std::size_t total = 0;
  for (std::size_t round = 0; round < config.lpRounds; ++round) {
    const auto order = visitOrder(state.hypergraph().numVertices(), rng);
    const std::size_t moves = lpPass(state, order, cap, gains);
    total += moves;
    if (moves == 0) break;
  }
  return total;
}

std::size_t refineLPUnconstrained(PartitionState& state, const RefinementConfig& config,
                                  const RebalancerConfig& rebalancer, RebalanceTally& tally) {
  const double epsilon = rebalancer.bound.epsilon;
  std::mt19937_64 rng(config.seed);
  std::vector<double> cap(state.dimension());
  for (std::size_t j = 0; j < state.dimension(); ++j) {
    double heaviest = 0.0;
    for (VertexId v = 0; v < state.hypergraph().numVertices(); ++v) {
      heaviest = std::max(heaviest, state.vertexWeight(v, j));
    }
    cap[j] = rebalancer.bound.u[j] + heaviest;
  }

  std::vector<BlockId> best;
  double best_connectivity = 0.0;
  if (state.isBalanced(epsilon)) {
    best = state.assignment();
    best_connectivity = state.connectivity();
  }

  std::vector<double> gains;
  std::size_t total = 0;
  for (std::size_t round = 0; round < config.lpRounds; ++round) {
    const auto order = visitOrder(state.hypergraph().numVertices(), rng);
    const std::size_t moves = lpPass(state, order, cap, gains);
    total += moves;
    if (!state.isBalanced(epsilon)) {
      rebalanceCounted(state, rebalancer, tally);
    }
    if (state.isBalanced(epsilon) && (best.empty() || state.connectivity() < best_connectivity)) {
      best = state.assignment();
      best_connectivity = state.connectivity();
    }
    if (moves == 0) break;
  }
  if (!best.empty() && (!state.isBalanced(epsilon) || state.connectivity() > best_connectivity)) {
    state.assign(best);
  }
  return total;
}

namespace {

struct FmEntry {
  double gain;
  VertexId vertex;
  BlockId target;
  std::uint32_t stamp;
};

struct FmOrder {
  bool operator()(const FmEntry& a, const FmEntry& b) const {
    if (a.gain != b.gain) return a.gain < b.gain;
    if (a.vertex != b.vertex) return a.vertex > b.vertex;
    return a.target > b.target;
  }
};

}  // namespace

double refineFMConstrained(PartitionState& state, double epsilon, const RefinementConfig& config) {
  if (!state.isBalanced(epsilon)) return 0.0;
  const Hypergraph& hg = state.hypergraph();
  const std::size_t n = hg.numVertices();
  const std::vector<double> cap(state.dimension(), 1.0 + epsilon);
  const double initial = state.connectivity();
  std::vector<double> gains;

  auto best_move = [&](VertexId v, FmEntry& out) {
    computeGains(state, v, gains);
    bool found = false;
    for (BlockId t = 0; t < state.k(); ++t) {
      if (t == state.block(v)) continue;
      if (found && !(gains[t] > out.gain)) continue;
      if (!fitsUnder(state, v, t, cap)) continue;
      out.gain = gains[t];
      out.target = t;
      found = true;
    }
    out.vertex = v;
    return found;
  };

  for (std::size_t pass = 0; pass < config.fmMaxPasses; ++pass) {
    const double pass_start = state.connectivity();
    std::vector<bool> moved(n, false);
    std::vector<std::uint32_t> stamp(n, 0);
    std::vector<std::size_t> touched(n, 0);
    std::priority_queue<FmEntry, std::vector<FmEntry>, FmOrder> queue;
    auto insert = [&](VertexId v) {
      FmEntry entry{0.0, v, kInvalidBlock, ++stamp[v]};
      if (best_move(v, entry)) queue.push(entry);
    };
    for (VertexId v = 0; v < n; ++v) {
      for (EdgeId e : hg.incidentEdges(v)) {
        if (state.lambda(e) > 1) {
          insert(v);
          break;
        }
      }
    }

    std::vector<MoveDelta> moves;
    std::size_t best_prefix = 0;
    double best_connectivity = pass_start;
    std::size_t streak = 0;
    while (!queue.empty()) {
      const FmEntry entry = queue.top();
      queue.pop();
      const VertexId v = entry.vertex;
      if (moved[v] || entry.stamp != stamp[v]) continue;
      FmEntry fresh{0.0, v, kInvalidBlock, entry.stamp};
      if (!best_move(v, fresh)) continue;
      if (fresh.gain != entry.gain || fresh.target != entry.target) {
        fresh.stamp = ++stamp[v];
        queue.push(fresh);
        continue;
      }
      moves.push_back(state.applyMove(v, fresh.target));
      moved[v] = true;
      if (state.connectivity() < best_connectivity) {
        best_connectivity = state.connectivity();
        best_prefix = moves.size();
        streak = 0;
      } else if (++streak >= config.fmMaxNegativeStreak) {
        break;
      }
      for (EdgeId e : hg.incidentEdges(v)) {
        for (VertexId u : hg.pins(e)) {
          if (moved[u] || touched[u] == moves.size()) continue;
          touched[u] = moves.size();
          insert(u);
        }
      }
    }
    while (moves.size() > best_prefix) {
      state.applyMove(moves.back().vertex, moves.back().from);
      moves.pop_back();
    }
    if (!(state.connectivity() < pass_start)) break;
  }
  return initial - state.connectivity();
}

}  // namespace mcpart
