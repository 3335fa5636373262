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
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "mcpart/objective.h"
#include "mcpart/partition.h"

namespace mcpart {

// Moves whose balance gain does not exceed this are treated as non-improving.
inline constexpr double kMinBalanceGain = 1e-12;

// Fallback score s'(v, t) = rho(v) * alpha(v) * beta(v, t).
//   rho1 = 1/|c(v)|_1              rho2 = 1
//   alpha1 = c(v)_l / sum_{j!=l} c(v)_j   alpha2 = c(v)^T c(V_i)
//   beta1 = sum_{j!=l} c(V_t)_j / c(V_t)_l
//   beta2 = c(v)^T (1 - c(V_t))
//   beta3 = 1 + g(v, V_t) / |c(v)|_1   with g the L1^u balance gain
// where l is the heaviest dimension of the source block V_i.
struct FallbackRating {
  enum class Penalty { kInverseWeight, kNone };
  enum class Source { kDominantShare, kAlignment };
  enum class Target { kFreeShare, kFreeAlignment, kBalanceGain };

  Penalty penalty = Penalty::kInverseWeight;
  Source source = Source::kDominantShare;
  Target target = Target::kBalanceGain;

  // Parses selectors like "r1a1b3". Throws std::invalid_argument.
  static FallbackRating parse(std::string_view text);
  std::string name() const;

  bool operator==(const FallbackRating&) const = default;
};

enum class RebalanceStrategy {
  // Greedy L1^u rounds with rollback and the fallback heuristic.
  kL1u,
  // Moves only into targets that stay within 1 + epsilon; no fallback.
  kBaseline,
};

struct RebalancerConfig {
  std::size_t maxRounds = 10;
  ImbalanceBound bound;
  bool fallbackEnabled = true;
  FallbackRating fallbackRating;
  bool unboundedRounds = false;
  RebalanceStrategy strategy = RebalanceStrategy::kL1u;
  // Keep per-round move logs and fallback plans in the result.
  bool recordTrace = false;
};

struct Candidate {
  VertexId vertex = 0;
  BlockId target = kInvalidBlock;  // kInvalidBlock: no improving target
  double rating = -std::numeric_limits<double>::infinity();
  double balanceGain = 0.0;
  double connectivityGain = 0.0;
  // |c(v)|_1, normalized.
  double weight = 0.0;

  bool hasTarget() const { return target != kInvalidBlock; }
};

// Total order used by the greedy queue: higher rating, then lighter vertex,
// then higher balance gain, then lower vertex id, then lower target id.
bool betterCandidate(const Candidate& a, const Candidate& b);

// Best improving target of v by rating; the result has no target if no move
// of v reduces the L1^u imbalance.
Candidate bestTarget(const PartitionState& state, VertexId v, const ImbalanceBound& bound);

struct MoveCandidateSet {
  // Vertices of blocks with positive L1^u imbalance, in increasing id order.
  std::vector<Candidate> members;
};

MoveCandidateSet collectCandidates(const PartitionState& state, const ImbalanceBound& bound);

struct LoggedMove {
  VertexId vertex = 0;
  BlockId from = kInvalidBlock;
  BlockId to = kInvalidBlock;
  double balanceGain = 0.0;
  double connectivityGain = 0.0;
  // Values after this move.
  double imbalance = 0.0;
  double connectivity = 0.0;
};

// Sequential record of applied moves with prefix values, supporting rollback
// to the prefix with the lowest L1^u imbalance.
class MoveLog {
 public:
  void begin(const PartitionState& state, const ImbalanceBound& bound);
  void record(const MoveDelta& delta, double balanceGain, const PartitionState& state,
              const ImbalanceBound& bound);

  // Number of moves to keep: minimal imbalance, then minimal connectivity,
  // then the longest prefix.
  std::size_t bestPrefix() const;
  // Reverts every move after bestPrefix() and truncates the log.
  void rollback(PartitionState& state);

  double startImbalance() const { return start_imbalance_; }
  double startConnectivity() const { return start_connectivity_; }
  const std::vector<LoggedMove>& moves() const { return moves_; }

 private:
  double start_imbalance_ = 0.0;
  double start_connectivity_ = 0.0;
  std::vector<LoggedMove> moves_;
};

struct RoundResult {
  double imbalanceBefore = 0.0;
  double imbalanceAfter = 0.0;
  std::size_t movesApplied = 0;
  std::size_t movesKept = 0;
  // After the round no vertex of an overloaded block has an improving move.
  bool stalled = false;
  // Kept moves, only filled when tracing.
  std::vector<LoggedMove> moves;
};

// One round of greedy L1^u rebalancing over a candidate set collected at the
// start of the round, followed by rollback to the best prefix.
RoundResult greedyRound(PartitionState& state, const RebalancerConfig& config);

struct ScoredVertex {
  VertexId vertex = 0;
  BlockId target = kInvalidBlock;
  double score = 0.0;
  double balanceGain = 0.0;
};

struct BlockFallbackPlan {
  BlockId block = kInvalidBlock;
  std::size_t heaviestDimension = 0;
  // Every scored vertex of the block in descending score order; the first
  // `selected` entries are moved.
  std::vector<ScoredVertex> ranked;
  std::size_t selected = 0;
  // False if even moving every scored vertex does not balance the block.
  bool feasible = true;
};

struct FallbackPlan {
  std::vector<BlockFallbackPlan> blocks;
  std::size_t movedVertices = 0;
};

// Scores and selects the vertices to evict from one overloaded block.
BlockFallbackPlan planBlockFallback(const PartitionState& state, BlockId block,
                                    const RebalancerConfig& config);

// Evicts a vertex set from every block overloaded w.r.t. 1 + epsilon, worst
// block first, even if the L1^u imbalance increases.
FallbackPlan applyFallback(PartitionState& state, const RebalancerConfig& config);

enum class RebalanceStatus { kBalanced, kStalled, kRoundLimit };

std::string_view toString(RebalanceStatus status);

struct RebalanceResult {
  RebalanceStatus status = RebalanceStatus::kBalanced;
  std::size_t greedyRounds = 0;
  std::size_t fallbackCalls = 0;
  std::size_t movesApplied = 0;
  double finalImbalance = 0.0;
  std::vector<RoundResult> rounds;        // tracing only
  std::vector<FallbackPlan> fallbacks;    // tracing only
};

// Restores 1 + epsilon balance (epsilon taken from config.bound).
RebalanceResult rebalance(PartitionState& state, const RebalancerConfig& config);

// Running totals over many rebalance() calls.
struct RebalanceTally {
  std::size_t calls = 0;
  std::size_t greedyRounds = 0;
  std::size_t fallbackCalls = 0;
  std::size_t failures = 0;
  double seconds = 0.0;

  void add(const RebalanceResult& result, double elapsedSeconds);
  RebalanceTally& operator+=(const RebalanceTally& other);
};

// rebalance() plus bookkeeping in `tally`.
RebalanceResult rebalanceCounted(PartitionState& state, const RebalancerConfig& config,
                                 RebalanceTally& tally);

}  // namespace mcpart
