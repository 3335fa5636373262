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

#include "mcpart/rebalancer.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace mcpart {

FallbackRating FallbackRating::parse(std::string_view text) {
  if (text.size() != 6 || text[0] != 'r' || text[2] != 'a' || text[4] != 'b') {
    throw std::invalid_argument("fallback rating must look like r1a1b3, got '" +
                                std::string(text) + "'");
  }
  FallbackRating rating;
  switch (text[1]) {
    case '1': rating.penalty = Penalty::kInverseWeight; break;
    case '2': rating.penalty = Penalty::kNone; break;
    default: throw std::invalid_argument("unknown rho variant in '" + std::string(text) + "'");
  }
  switch (text[3]) {
    case '1': rating.source = Source::kDominantShare; break;
    case '2': rating.source = Source::kAlignment; break;
    default: throw std::invalid_argument("unknown alpha variant in '" + std::string(text) + "'");
  }
  switch (text[5]) {
    case '1': rating.target = Target::kFreeShare; break;
    case '2': rating.target = Target::kFreeAlignment; break;
    case '3': rating.target = Target::kBalanceGain; break;
    default: throw std::invalid_argument("unknown beta variant in '" + std::string(text) + "'");
  }
  return rating;
}

std::string FallbackRating::name() const {
  std::string s = "r1a1b1";
  s[1] = penalty == Penalty::kInverseWeight ? '1' : '2';
  s[3] = source == Source::kDominantShare ? '1' : '2';
  s[5] = target == Target::kFreeShare ? '1' : (target == Target::kFreeAlignment ? '2' : '3');
  return s;
}

bool betterCandidate(const Candidate& a, const Candidate& b) {
  if (a.rating != b.rating) return a.rating > b.rating;
  if (a.weight != b.weight) return a.weight < b.weight;
  if (a.balanceGain != b.balanceGain) return a.balanceGain > b.balanceGain;
  if (a.vertex != b.vertex) return a.vertex < b.vertex;
  return a.target < b.target;
}

Candidate bestTarget(const PartitionState& state, VertexId v, const ImbalanceBound& bound) {
  Candidate best;
  best.vertex = v;
  const BlockId source = state.block(v);
  const double weight = state.vertexWeightL1(v);
  for (BlockId t = 0; t < state.k(); ++t) {
    if (t == source) continue;
    const double bg = balanceGain(state, v, t, bound);
    if (!(bg > kMinBalanceGain)) continue;
    Candidate c;
    c.vertex = v;
    c.target = t;
    c.weight = weight;
    c.balanceGain = bg;
    c.connectivityGain = connectivityGain(state, v, t);
    c.rating = rating({c.connectivityGain, c.balanceGain});
    if (!best.hasTarget() || betterCandidate(c, best)) {
      best = c;
    }
  }
  return best;
}

MoveCandidateSet collectCandidates(const PartitionState& state, const ImbalanceBound& bound) {
  std::vector<bool> overloaded(state.k());
  for (BlockId b = 0; b < state.k(); ++b) {
    overloaded[b] = l1uBlock(state.blockWeight(b), bound) > 0.0;
  }
  MoveCandidateSet set;
  for (VertexId v = 0; v < state.hypergraph().numVertices(); ++v) {
    if (overloaded[state.block(v)]) {
      set.members.push_back(bestTarget(state, v, bound));
    }
  }
  return set;
}

void MoveLog::begin(const PartitionState& state, const ImbalanceBound& bound) {
  start_imbalance_ = l1uTotal(state, bound);
  start_connectivity_ = state.connectivity();
  moves_.clear();
}

void MoveLog::record(const MoveDelta& delta, double balanceGain, const PartitionState& state,
                     const ImbalanceBound& bound) {
  moves_.push_back({delta.vertex, delta.from, delta.to, balanceGain, -delta.connectivityDelta,
                    l1uTotal(state, bound), state.connectivity()});
}

std::size_t MoveLog::bestPrefix() const {
  constexpr double kTie = 1e-12;
  std::size_t best = 0;
  double best_imbalance = start_imbalance_;
  double best_connectivity = start_connectivity_;
  for (std::size_t i = 0; i < moves_.size(); ++i) {
    const LoggedMove& m = moves_[i];
    const bool lower = m.imbalance < best_imbalance - kTie;
    const bool tied = std::abs(m.imbalance - best_imbalance) <= kTie;
    if (lower || (tied && m.connectivity <= best_connectivity)) {
      best = i + 1;
      best_imbalance = m.imbalance;
      best_connectivity = m.connectivity;
    }
  }
  return best;
}

void MoveLog::rollback(PartitionState& state) {
  const std::size_t keep = bestPrefix();
  while (moves_.size() > keep) {
    const LoggedMove& m = moves_.back();
    state.applyMove(m.vertex, m.from);
    moves_.pop_back();
  }
}

namespace {

struct QueueEntry {
  Candidate candidate;
  std::uint32_t stamp = 0;
};

struct QueueOrder {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    return betterCandidate(b.candidate, a.candidate);
  }
};

bool sameRating(const Candidate& a, const Candidate& b) {
  return a.target == b.target && a.rating == b.rating && a.balanceGain == b.balanceGain;
}

bool anyImprovingMove(const PartitionState& state, const ImbalanceBound& bound) {
  for (const Candidate& c : collectCandidates(state, bound).members) {
    if (c.hasTarget()) return true;
  }
  return false;
}

// Baseline from single-constraint partitioning: only moves into blocks that
// stay within 1 + epsilon, rated by connectivity gain relative to weight.
Candidate bestFeasibleTarget(const PartitionState& state, VertexId v, double epsilon) {
  Candidate best;
  best.vertex = v;
  const BlockId source = state.block(v);
  const double weight = state.vertexWeightL1(v);
  for (BlockId t = 0; t < state.k(); ++t) {
    if (t == source) continue;
    bool fits = true;
    for (std::size_t j = 0; j < state.dimension() && fits; ++j) {
      fits = state.blockWeight(t, j) + state.vertexWeightIn(v, t, j) <=
             1.0 + epsilon + kBalanceTolerance;
    }
    if (!fits) continue;
    Candidate c;
    c.vertex = v;
    c.target = t;
    c.weight = weight;
    c.connectivityGain = connectivityGain(state, v, t);
    c.balanceGain = weight;
    c.rating = weight > 0.0 ? rating({c.connectivityGain, weight}) : c.connectivityGain;
    if (!best.hasTarget() || betterCandidate(c, best)) {
      best = c;
    }
  }
  return best;
}

RoundResult baselineRound(PartitionState& state, const RebalancerConfig& config) {
  const double epsilon = config.bound.epsilon;
  RoundResult result;
  result.imbalanceBefore = l1uTotal(state, config.bound);
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue;
  for (VertexId v = 0; v < state.hypergraph().numVertices(); ++v) {
    if (!state.isBlockOverloaded(state.block(v), epsilon) || state.vertexWeightL1(v) <= 0.0) continue;
    Candidate c = bestFeasibleTarget(state, v, epsilon);
    if (c.hasTarget()) queue.push({c, 0});
  }
  std::vector<bool> moved(state.hypergraph().numVertices(), false);
  while (!queue.empty()) {
    const Candidate stored = queue.top().candidate;
    queue.pop();
    const VertexId v = stored.vertex;
    if (moved[v] || !state.isBlockOverloaded(state.block(v), epsilon)) continue;
    const Candidate fresh = bestFeasibleTarget(state, v, epsilon);
    if (!fresh.hasTarget()) continue;
    if (!sameRating(fresh, stored)) {
      queue.push({fresh, 0});
      continue;
    }
    const MoveDelta delta = state.applyMove(v, fresh.target);
    moved[v] = true;
    ++result.movesApplied;
    if (config.recordTrace) {
      result.moves.push_back({v, delta.from, delta.to, 0.0, -delta.connectivityDelta,
                              l1uTotal(state, config.bound), state.connectivity()});
    }
  }
  result.movesKept = result.movesApplied;
  result.imbalanceAfter = l1uTotal(state, config.bound);
  result.stalled = result.movesApplied == 0;
  return result;
}

}  // namespace

RoundResult greedyRound(PartitionState& state, const RebalancerConfig& config) {
  const ImbalanceBound& bound = config.bound;
  const Hypergraph& hg = state.hypergraph();
  const std::size_t n = hg.numVertices();

  MoveLog log;
  log.begin(state, bound);
  RoundResult result;
  result.imbalanceBefore = log.startImbalance();

  const MoveCandidateSet candidates = collectCandidates(state, bound);
  std::vector<bool> in_set(n, false);
  std::vector<bool> moved(n, false);
  std::vector<std::uint32_t> stamp(n, 0);
  std::vector<std::vector<VertexId>> by_block(state.k());
  std::vector<std::vector<VertexId>> targetless(state.k());
  std::priority_queue<QueueEntry, std::vector<QueueEntry>, QueueOrder> queue;

  for (const Candidate& c : candidates.members) {
    in_set[c.vertex] = true;
    by_block[state.block(c.vertex)].push_back(c.vertex);
    if (c.hasTarget()) {
      queue.push({c, 0});
    } else {
      targetless[state.block(c.vertex)].push_back(c.vertex);
    }
  }

  auto rerate = [&](VertexId u) {
    if (!in_set[u] || moved[u]) return;
    const Candidate c = bestTarget(state, u, bound);
    ++stamp[u];
    if (c.hasTarget()) {
      queue.push({c, stamp[u]});
    }
  };

  double imbalance = result.imbalanceBefore;
  while (!queue.empty() && imbalance > 0.0) {
    const QueueEntry entry = queue.top();
    queue.pop();
    const VertexId v = entry.candidate.vertex;
    if (moved[v] || entry.stamp != stamp[v]) continue;

    const Candidate fresh = bestTarget(state, v, bound);
    if (!fresh.hasTarget()) {
      ++stamp[v];
      targetless[state.block(v)].push_back(v);
      continue;
    }
    if (!sameRating(fresh, entry.candidate)) {
      ++stamp[v];
      queue.push({fresh, stamp[v]});
      continue;
    }

    const MoveDelta delta = state.applyMove(v, fresh.target);
    moved[v] = true;
    ++result.movesApplied;
    log.record(delta, fresh.balanceGain, state, bound);
    imbalance = log.moves().back().imbalance;

    // The target block got heavier, so leaving it became more attractive.
    for (VertexId u : by_block[delta.to]) rerate(u);
    for (BlockId b : {delta.from, delta.to}) {
      std::vector<VertexId> waiting;
      waiting.swap(targetless[b]);
      for (VertexId u : waiting) rerate(u);
    }
    for (EdgeId e : hg.incidentEdges(v)) {
      for (VertexId u : hg.pins(e)) {
        if (u != v) rerate(u);
      }
    }
  }

  log.rollback(state);
  result.movesKept = log.moves().size();
  result.imbalanceAfter = log.moves().empty() ? log.startImbalance() : log.moves().back().imbalance;
  result.stalled = !anyImprovingMove(state, bound);
  if (config.recordTrace) {
    result.moves = log.moves();
  }
  return result;
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) s += a[j] * b[j];
  return s;
}

}  // namespace

BlockFallbackPlan planBlockFallback(const PartitionState& state, BlockId block,
                                    const RebalancerConfig& config) {
  const ImbalanceBound& bound = config.bound;
  const FallbackRating& rating_kind = config.fallbackRating;
  const std::size_t d = state.dimension();
  const double limit = 1.0 + bound.epsilon + kBalanceTolerance;
  constexpr double kInf = std::numeric_limits<double>::infinity();

  BlockFallbackPlan plan;
  plan.block = block;
  const auto block_weight = state.blockWeight(block);
  plan.heaviestDimension = static_cast<std::size_t>(
      std::max_element(block_weight.begin(), block_weight.end()) - block_weight.begin());
  const std::size_t heavy = plan.heaviestDimension;

  std::vector<double> weight(d);
  for (VertexId v : state.members(block)) {
    double norm = 0.0;
    for (std::size_t j = 0; j < d; ++j) {
      weight[j] = state.vertexWeightIn(v, block, j);
      norm += weight[j];
    }
    if (!(norm > 0.0)) continue;

    const double rho = rating_kind.penalty == FallbackRating::Penalty::kInverseWeight ? 1.0 / norm : 1.0;
    double alpha = 0.0;
    if (rating_kind.source == FallbackRating::Source::kDominantShare) {
      const double rest = norm - weight[heavy];
      if (rest > 0.0) {
        alpha = weight[heavy] / rest;
      } else {
        alpha = weight[heavy] > 0.0 ? kInf : 0.0;
      }
    } else {
      alpha = dot(weight, block_weight);
    }

    auto beta = [&](BlockId t, double gain) {
      const auto tw = state.blockWeight(t);
      switch (rating_kind.target) {
        case FallbackRating::Target::kFreeShare: {
          double rest = 0.0;
          for (std::size_t j = 0; j < d; ++j) {
            if (j != heavy) rest += tw[j];
          }
          return tw[heavy] > 0.0 ? rest / tw[heavy] : kInf;
        }
        case FallbackRating::Target::kFreeAlignment: {
          double s = 0.0;
          for (std::size_t j = 0; j < d; ++j) s += weight[j] * (1.0 - tw[j]);
          return s;
        }
        case FallbackRating::Target::kBalanceGain:
          break;
      }
      return 1.0 + gain / norm;
    };
    auto score = [&](double b) {
      if (alpha == kInf || b == kInf) return kInf;
      return rho * alpha * b;
    };

    ScoredVertex scored;
    scored.vertex = v;
    if (rating_kind.target == FallbackRating::Target::kBalanceGain) {
      // Fix the least-worsening target first, then score.
      double best_gain = -kInf;
      for (BlockId t = 0; t < state.k(); ++t) {
        if (t == block) continue;
        const double g = balanceGain(state, v, t, bound);
        if (g > best_gain) {
          best_gain = g;
          scored.target = t;
        }
      }
      scored.balanceGain = best_gain;
      scored.score = score(beta(scored.target, best_gain));
    } else {
      double best_score = -kInf;
      for (BlockId t = 0; t < state.k(); ++t) {
        if (t == block) continue;
        const double g = balanceGain(state, v, t, bound);
        const double s = score(beta(t, g));
        if (scored.target == kInvalidBlock || s > best_score) {
          best_score = s;
          scored.target = t;
          scored.balanceGain = g;
        }
      }
      scored.score = best_score;
    }
    if (scored.target != kInvalidBlock) {
      plan.ranked.push_back(scored);
    }
  }

  std::stable_sort(plan.ranked.begin(), plan.ranked.end(),
                   [](const ScoredVertex& a, const ScoredVertex& b) {
                     if (a.score != b.score) return a.score > b.score;
                     return a.vertex < b.vertex;
                   });

  std::vector<double> remaining(block_weight.begin(), block_weight.end());
  auto fits = [&] {
    return std::all_of(remaining.begin(), remaining.end(), [&](double w) { return w <= limit; });
  };
  plan.feasible = fits();
  while (!plan.feasible && plan.selected < plan.ranked.size()) {
    const VertexId v = plan.ranked[plan.selected].vertex;
    for (std::size_t j = 0; j < d; ++j) {
      remaining[j] -= state.vertexWeightIn(v, block, j);
    }
    ++plan.selected;
    plan.feasible = fits();
  }
  return plan;
}

FallbackPlan applyFallback(PartitionState& state, const RebalancerConfig& config) {
  const double epsilon = config.bound.epsilon;
  std::vector<std::pair<double, BlockId>> order;
  for (BlockId b = 0; b < state.k(); ++b) {
    if (state.isBlockOverloaded(b, epsilon)) {
      order.emplace_back(l1uBlock(state.blockWeight(b), config.bound), b);
    }
  }
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  FallbackPlan result;
  for (const auto& [imbalance, b] : order) {
    if (!state.isBlockOverloaded(b, epsilon)) continue;
    BlockFallbackPlan plan = planBlockFallback(state, b, config);
    for (std::size_t i = 0; i < plan.selected; ++i) {
      state.applyMove(plan.ranked[i].vertex, plan.ranked[i].target);
      ++result.movedVertices;
    }
    result.blocks.push_back(std::move(plan));
  }
  return result;
}

std::string_view toString(RebalanceStatus status) {
  switch (status) {
    case RebalanceStatus::kBalanced: return "Balanced";
    case RebalanceStatus::kStalled: return "Stalled";
    case RebalanceStatus::kRoundLimit: return "RoundLimit";
  }
  return "Unknown";
}

RebalanceResult rebalance(PartitionState& state, const RebalancerConfig& config) {
  if (config.maxRounds < 1) {
    throw std::invalid_argument("maxRounds must be at least 1");
  }
  if (config.bound.dimension() != state.dimension()) {
    throw std::invalid_argument("imbalance bound dimension mismatch");
  }
  const double epsilon = config.bound.epsilon;
  const bool baseline = config.strategy == RebalanceStrategy::kBaseline;
  // The fallback needs a second dimension to fix internal imbalance.
  const bool fallback = !baseline && config.fallbackEnabled && state.dimension() >= 2;

  RebalanceResult result;
  bool after_fallback = false;
  while (true) {
    if (state.isBalanced(epsilon)) {
      result.status = RebalanceStatus::kBalanced;
      break;
    }
    if (!config.unboundedRounds && result.greedyRounds >= config.maxRounds) {
      result.status = RebalanceStatus::kRoundLimit;
      break;
    }
    RoundResult round = baseline ? baselineRound(state, config) : greedyRound(state, config);
    ++result.greedyRounds;
    result.movesApplied += round.movesKept;
    const bool stalled = round.stalled;
    if (config.recordTrace) {
      result.rounds.push_back(std::move(round));
    }
    if (state.isBalanced(epsilon)) {
      result.status = RebalanceStatus::kBalanced;
      break;
    }
    if (!stalled) {
      after_fallback = false;
      continue;
    }
    // Unbounded runs still cap the number of fallbacks so cycles terminate.
    if (!fallback || after_fallback || result.fallbackCalls >= config.maxRounds) {
      result.status = RebalanceStatus::kStalled;
      break;
    }
    FallbackPlan plan = applyFallback(state, config);
    ++result.fallbackCalls;
    result.movesApplied += plan.movedVertices;
    after_fallback = true;
    const bool moved = plan.movedVertices > 0;
    if (config.recordTrace) {
      result.fallbacks.push_back(std::move(plan));
    }
    if (!moved) {
      result.status = RebalanceStatus::kStalled;
      break;
    }
  }
  result.finalImbalance = l1uTotal(state, config.bound);
  return result;
}

void RebalanceTally::add(const RebalanceResult& result, double elapsedSeconds) {
  ++calls;
  greedyRounds += result.greedyRounds;
  fallbackCalls += result.fallbackCalls;
  if (result.status != RebalanceStatus::kBalanced) ++failures;
  seconds += elapsedSeconds;
}

RebalanceTally& RebalanceTally::operator+=(const RebalanceTally& other) {
  calls += other.calls;
  greedyRounds += other.greedyRounds;
  fallbackCalls += other.fallbackCalls;
  failures += other.failures;
  seconds += other.seconds;
  return *this;
}

RebalanceResult rebalanceCounted(PartitionState& state, const RebalancerConfig& config,
                                 RebalanceTally& tally) {
  const auto start = std::chrono::steady_clock::now();
  RebalanceResult result = rebalance(state, config);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  tally.add(result, elapsed.count());
  return result;
}

}  // namespace mcpart
