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

#include "mcpart/initial_partitioning.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <random>

#include "mcpart/objective.h"

namespace mcpart {

double adaptiveBisectionEpsilon(double epsilon, std::size_t k) {
  if (k <= 2) return epsilon;
  const double levels = std::ceil(std::log2(static_cast<double>(k)));
  return std::pow(1.0 + epsilon, 1.0 / levels) - 1.0;
}

namespace {

struct SubHypergraph {
  Hypergraph hg;
  std::vector<VertexId> global;  // local -> global vertex id
};

SubHypergraph extract(const Hypergraph& hg, const std::vector<VertexId>& vertices) {
  constexpr VertexId kAbsent = static_cast<VertexId>(-1);
  std::vector<VertexId> local(hg.numVertices(), kAbsent);
  for (VertexId i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;

  std::vector<bool> seen(hg.numEdges(), false);
  std::vector<std::vector<VertexId>> pins;
  std::vector<double> edge_weights;
  for (VertexId v : vertices) {
    for (EdgeId e : hg.incidentEdges(v)) {
      if (seen[e]) continue;
      seen[e] = true;
      std::vector<VertexId> p;
      for (VertexId u : hg.pins(e)) {
        if (local[u] != kAbsent) p.push_back(local[u]);
      }
      if (p.size() >= 2) {
        pins.push_back(std::move(p));
        edge_weights.push_back(hg.edgeWeight(e));
      }
    }
  }
  const std::size_t d = hg.dimension();
  std::vector<double> weights;
  weights.reserve(vertices.size() * d);
  for (VertexId v : vertices) {
    auto w = hg.weight(v);
    weights.insert(weights.end(), w.begin(), w.end());
  }
  return {Hypergraph::fromFlat(vertices.size(), d, pins, std::move(weights), std::move(edge_weights)),
          vertices};
}

// Scale so that the average weight per final block of this subproblem is 1.
NormalizationContext subContext(const Hypergraph& hg, std::size_t blocks) {
  std::vector<double> scale(hg.dimension(), 1.0);
  for (std::size_t j = 0; j < hg.dimension(); ++j) {
    if (hg.totalWeight(j) > 0.0) scale[j] = static_cast<double>(blocks) / hg.totalWeight(j);
  }
  return NormalizationContext(blocks, std::move(scale));
}

std::vector<BlockId> randomBalanced(const PartitionState& empty, std::mt19937_64& rng) {
  const std::size_t n = empty.hypergraph().numVertices();
  const std::size_t d = empty.dimension();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<double> load(2 * d, 0.0);
  std::vector<BlockId> assignment(n, 0);
  for (VertexId v : order) {
    double fill[2];
    for (BlockId b = 0; b < 2; ++b) {
      fill[b] = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        fill[b] = std::max(fill[b], load[b * d + j] + empty.vertexWeightIn(v, b, j));
      }
    }
    const BlockId side = fill[1] < fill[0] ? 1 : 0;
    assignment[v] = side;
    for (std::size_t j = 0; j < d; ++j) load[side * d + j] += empty.vertexWeightIn(v, side, j);
  }
  return assignment;
}

// Grows block 0 from a random seed vertex, always adding the vertex with the
// best connectivity gain that still fits, until every dimension of block 0
// reaches its target or nothing fits.
std::vector<BlockId> greedyGrowing(PartitionState state, double epsilon, std::mt19937_64& rng) {
  const Hypergraph& hg = state.hypergraph();
  const std::size_t n = hg.numVertices();
  const std::size_t d = state.dimension();
  std::vector<BlockId> ones(n, 1);
  state.assign(ones);
  if (n == 0) return ones;

  auto fits = [&](VertexId v) {
    for (std::size_t j = 0; j < d; ++j) {
      if (state.blockWeight(0, j) + state.vertexWeightIn(v, 0, j) > 1.0 + epsilon) return false;
    }
    return true;
  };
  auto full = [&] {
    for (std::size_t j = 0; j < d; ++j) {
      if (state.blockWeight(0, j) < 1.0) return false;
    }
    return true;
  };

  using Entry = std::pair<double, VertexId>;
  auto order = [](const Entry& a, const Entry& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(order)> queue(order);
  std::vector<bool> rejected(n, false);
  std::vector<VertexId> touched(n, kInvalidBlock);
  std::vector<double> gains;
  auto push = [&](VertexId v) {
    computeGains(state, v, gains);
    queue.push({gains[0], v});
  };

  std::uniform_int_distribution<VertexId> pick(0, static_cast<VertexId>(n - 1));
  VertexId next_seed = pick(rng);
  while (!full()) {
    if (queue.empty()) {
      // Start (or restart, for disconnected inputs) from an unassigned vertex.
      VertexId start = kInvalidBlock;
      for (VertexId i = 0; i < n; ++i) {
        const VertexId v = (next_seed + i) % n;
        if (state.block(v) == 1 && !rejected[v]) {
          start = v;
          break;
        }
      }
      if (start == kInvalidBlock) break;
      next_seed = start;
      push(start);
    }
    const auto [gain, v] = queue.top();
    queue.pop();
    if (state.block(v) == 0 || rejected[v]) continue;
    computeGains(state, v, gains);
    if (gains[0] != gain) {
      queue.push({gains[0], v});
      continue;
    }
    if (!fits(v)) {
      rejected[v] = true;
      continue;
    }
    state.applyMove(v, 0);
    for (EdgeId e : hg.incidentEdges(v)) {
      for (VertexId u : hg.pins(e)) {
        if (state.block(u) != 1 || rejected[u] || touched[u] == v) continue;
        touched[u] = v;
        push(u);
      }
    }
  }
  return state.assignment();
}

struct Candidate {
  std::vector<BlockId> assignment;
  bool balanced = false;
  double connectivity = 0.0;
  double imbalance = 0.0;
};

bool better(const Candidate& a, const Candidate& b) {
  if (a.balanced != b.balanced) return a.balanced;
  if (a.balanced) return a.connectivity < b.connectivity;
  if (a.imbalance != b.imbalance) return a.imbalance < b.imbalance;
  return a.connectivity < b.connectivity;
}

class RecursiveBipartitioner {
 public:
  RecursiveBipartitioner(const Hypergraph& hg, std::size_t k, double epsilon,
                         const InitialPartitioningConfig& config, std::uint64_t seed,
                         RebalanceTally& tally)
      : hg_(hg), epsilon_(adaptiveBisectionEpsilon(epsilon, k)), config_(config), rng_(seed),
        tally_(tally), result_(hg.numVertices(), 0) {
    std::vector<VertexId> all(hg.numVertices());
    std::iota(all.begin(), all.end(), VertexId{0});
    split(all, 0, k);
  }

  std::vector<BlockId> result() && { return std::move(result_); }

 private:
  void split(const std::vector<VertexId>& vertices, BlockId first, std::size_t blocks) {
    if (blocks == 1 || vertices.empty()) {
      for (VertexId v : vertices) result_[v] = first;
      return;
    }
    const std::size_t left = (blocks + 1) / 2;
    const std::size_t right = blocks - left;
    const SubHypergraph sub = extract(hg_, vertices);
    const std::vector<BlockId> sides = bisect(sub.hg, left, right);

    std::vector<VertexId> part[2];
    for (VertexId i = 0; i < sides.size(); ++i) part[sides[i]].push_back(sub.global[i]);
    split(part[0], first, left);
    split(part[1], first + static_cast<BlockId>(left), right);
  }

  std::vector<BlockId> bisect(const Hypergraph& sub, std::size_t left, std::size_t right) {
    const NormalizationContext ctx = subContext(sub, left + right);
    const std::vector<double> shares{static_cast<double>(left), static_cast<double>(right)};
    RebalancerConfig rebalancer;
    rebalancer.bound = makeBound(sub, ctx, epsilon_, config_.threshold);
    rebalancer.fallbackEnabled = config_.fallbackEnabled;
    rebalancer.fallbackRating = config_.fallbackRating;
    rebalancer.strategy = config_.strategy;
    RefinementConfig fm;
    fm.fmMaxNegativeStreak = config_.fmMaxNegativeStreak;

    PartitionState state(sub, ctx, 2, shares);
    Candidate best;
    bool have_best = false;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(config_.portfolioSeeds, 1); ++rep) {
      for (int algorithm = 0; algorithm < 2; ++algorithm) {
        state.assign(algorithm == 0 ? randomBalanced(state, rng_)
                                    : greedyGrowing(state, epsilon_, rng_));
        if (!state.isBalanced(epsilon_)) {
          rebalanceCounted(state, rebalancer, tally_);
        }
        refineFMConstrained(state, epsilon_, fm);
        Candidate c{state.assignment(), state.isBalanced(epsilon_), state.connectivity(),
                    l1uTotal(state, rebalancer.bound)};
        if (!have_best || better(c, best)) {
          best = std::move(c);
          have_best = true;
        }
      }
    }
    return best.assignment;
  }

  const Hypergraph& hg_;
  double epsilon_;
  const InitialPartitioningConfig& config_;
  std::mt19937_64 rng_;
  RebalanceTally& tally_;
  std::vector<BlockId> result_;
};

}  // namespace

std::vector<BlockId> initialPartition(const Hypergraph& hg, std::size_t k, double epsilon,
                                      const InitialPartitioningConfig& config,
                                      std::uint64_t seed, RebalanceTally& tally) {
  if (k == 0) {
    throw std::invalid_argument("k must be at least 1");
  }
  return RecursiveBipartitioner(hg, k, epsilon, config, seed, tally).result();
}

}  // namespace mcpart
