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

#include <gtest/gtest.h>

#include <random>

#include "mcpart/evaluation.h"
#include "mcpart/partition.h"
#include "oracle.h"
#include "support.h"

namespace mcpart {
namespace {

using testing::makeR1;
using testing::r1Start;

TEST(Hypergraph, SmallestInstance) {
  const Hypergraph hg = Hypergraph::build({{0, 1}}, {{1}, {1}}, {1});
  EXPECT_EQ(hg.numVertices(), 2u);
  EXPECT_EQ(hg.numEdges(), 1u);
  EXPECT_EQ(hg.dimension(), 1u);
  EXPECT_EQ(hg.numPins(), 2u);
}

TEST(Hypergraph, RejectsDuplicatePin) {
  EXPECT_THROW(Hypergraph::build({{0, 0}}, {{1}, {1}}, {1}), std::invalid_argument);
}

TEST(Hypergraph, RejectsBadInput) {
  EXPECT_THROW(Hypergraph::build({{0, 2}}, {{1}, {1}}, {1}), std::invalid_argument);
  EXPECT_THROW(Hypergraph::build({{}}, {{1}, {1}}, {1}), std::invalid_argument);
  EXPECT_THROW(Hypergraph::build({{0, 1}}, {{1}, {1}}, {0}), std::invalid_argument);
  EXPECT_THROW(Hypergraph::build({{0, 1}}, {{1}, {-1}}, {1}), std::invalid_argument);
  EXPECT_THROW(Hypergraph::build({{0, 1}}, {{1, 2}, {1}}, {1}), std::invalid_argument);
  EXPECT_THROW(Hypergraph::build({{0, 1}}, {{1}, {1}}, {1, 1}), std::invalid_argument);
}

TEST(Hypergraph, ZeroDimensionAcceptedUntilNormalization) {
  const Hypergraph hg = Hypergraph::build({{0, 1}}, {{1, 0}, {1, 0}}, {1});
  EXPECT_EQ(hg.totalWeight(1), 0.0);
  EXPECT_THROW(normalize(hg, 2), std::invalid_argument);
}

TEST(Hypergraph, R1Incidence) {
  const Hypergraph hg = makeR1();
  const auto inc = hg.incidentEdges(1);
  ASSERT_EQ(inc.size(), 2u);
  EXPECT_EQ(inc[0], 0u);
  EXPECT_EQ(inc[1], 1u);
  EXPECT_EQ(hg.degree(3), 1u);
  EXPECT_DOUBLE_EQ(hg.weight(0, 0), 0.9);
  EXPECT_DOUBLE_EQ(hg.edgeWeight(1), 2.0);
}

TEST(Hypergraph, IncidenceIsTransposeOfPins) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Hypergraph hg = testing::randomHypergraph(rng, {});
    std::size_t total = 0;
    for (VertexId v = 0; v < hg.numVertices(); ++v) {
      for (EdgeId e : hg.incidentEdges(v)) {
        const auto pins = hg.pins(e);
        EXPECT_NE(std::find(pins.begin(), pins.end(), v), pins.end());
      }
      total += hg.degree(v);
    }
    EXPECT_EQ(total, hg.numPins());
  }
}

TEST(Normalization, R1ScaleIsOne) {
  const auto ctx = normalize(makeR1(), 2);
  EXPECT_NEAR(ctx.scale(0), 1.0, 1e-12);
  EXPECT_NEAR(ctx.scale(1), 1.0, 1e-12);
}

TEST(Normalization, UnitWeights) {
  std::vector<std::vector<VertexId>> pins{{0, 1}};
  const Hypergraph hg = Hypergraph::build(pins, std::vector<std::vector<double>>(8, {1.0}), {1});
  EXPECT_DOUBLE_EQ(normalize(hg, 2).scale(0), 0.25);
}

TEST(Normalization, Errors) {
  EXPECT_THROW(normalize(makeR1(), 1), std::invalid_argument);
  EXPECT_THROW(NormalizationContext(2, {1.0, 0.0}), std::invalid_argument);
}

TEST(Normalization, TotalsEqualK) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph hg = testing::randomHypergraph(rng, {.dimension = 3});
    const std::size_t k = 2 + trial % 5;
    const auto ctx = normalize(hg, k);
    for (std::size_t j = 0; j < hg.dimension(); ++j) {
      double total = 0.0;
      for (VertexId v = 0; v < hg.numVertices(); ++v) total += ctx.normalized(hg, v, j);
      EXPECT_NEAR(total, static_cast<double>(k), 1e-9 * static_cast<double>(k));
    }
  }
}

TEST(PartitionState, ConnectivityExamples) {
  const Hypergraph r1 = makeR1();
  const auto ctx = normalize(r1, 2);
  EXPECT_EQ(PartitionState(r1, ctx, 2, std::vector<BlockId>{0, 0, 0, 0}).connectivity(), 0.0);
  EXPECT_EQ(PartitionState(r1, ctx, 2, r1Start()).connectivity(), 3.0);

  const Hypergraph edge = Hypergraph::build({{0, 1, 2}}, {{1}, {1}, {1}}, {2});
  const auto ectx = normalize(edge, 2);
  EXPECT_EQ(PartitionState(edge, ectx, 2, std::vector<BlockId>{0, 1, 1}).connectivity(), 2.0);
}

TEST(PartitionState, MoveDeltas) {
  const Hypergraph r1 = makeR1();
  const auto ctx = normalize(r1, 2);
  PartitionState state(r1, ctx, 2, r1Start());
  EXPECT_EQ(state.applyMove(3, 1).connectivityDelta, 0.0);
  state.applyMove(3, 0);
  EXPECT_EQ(state.applyMove(2, 1).connectivityDelta, 1.0);
  EXPECT_THROW(state.applyMove(0, 2), std::invalid_argument);
}

TEST(PartitionState, MoveThenInverseRestoresState) {
  const Hypergraph r1 = makeR1();
  const auto ctx = normalize(r1, 2);
  PartitionState state(r1, ctx, 2, r1Start());
  const PartitionState before = state;
  state.applyMove(2, 1);
  state.applyMove(2, 0);
  EXPECT_EQ(state.assignment(), before.assignment());
  for (EdgeId e = 0; e < r1.numEdges(); ++e) {
    for (BlockId b = 0; b < 2; ++b) EXPECT_EQ(state.pinCount(e, b), before.pinCount(e, b));
  }
  for (BlockId b = 0; b < 2; ++b) {
    for (std::size_t j = 0; j < 2; ++j) {
      EXPECT_NEAR(state.blockWeight(b, j), before.blockWeight(b, j), 1e-9);
    }
  }
  EXPECT_EQ(state.connectivity(), before.connectivity());
}

TEST(PartitionState, BalanceExamples) {
  const Hypergraph r1 = makeR1();
  const auto ctx = normalize(r1, 2);
  const PartitionState p0(r1, ctx, 2, r1Start());
  EXPECT_NEAR(p0.blockWeight(0, 0), 1.7, 1e-12);
  EXPECT_NEAR(p0.blockWeight(0, 1), 1.1, 1e-12);
  EXPECT_FALSE(p0.isBalanced(0.2));

  // v1 + v2 versus v3 + v4 gives (1.2, 1.2) / (0.8, 0.8).
  const PartitionState split(r1, ctx, 2, std::vector<BlockId>{1, 1, 0, 0});
  EXPECT_TRUE(split.isBalanced(0.2));
  EXPECT_FALSE(split.isBalanced(0.19));

  // Exactly (1.0, 1.0) per block at epsilon 0.
  const Hypergraph even = Hypergraph::build({{0, 1}}, {{1, 1}, {1, 1}}, {1});
  const PartitionState halves(even, normalize(even, 2), 2, std::vector<BlockId>{0, 1});
  EXPECT_TRUE(halves.isBalanced(0.0));
}

TEST(PartitionState, SparsePinCountsForLargeK) {
  std::mt19937_64 rng(3);
  const Hypergraph hg = testing::randomHypergraph(rng, {.minVertices = 80, .maxVertices = 100,
                                                        .minEdges = 40, .maxEdges = 60,
                                                        .maxEdgeSize = 8});
  const std::size_t k = 70;
  const auto ctx = normalize(hg, k);
  PartitionState state(hg, ctx, k, testing::randomAssignment(rng, hg.numVertices(), k));
  for (int step = 0; step < 500; ++step) {
    const auto v = static_cast<VertexId>(rng() % hg.numVertices());
    const auto t = static_cast<BlockId>(rng() % k);
    state.applyMove(v, t);
  }
  EXPECT_EQ(state.connectivity(), oracle::connectivityOf(hg, state.assignment()));
  for (EdgeId e = 0; e < hg.numEdges(); ++e) {
    std::uint32_t total = 0;
    for (BlockId b = 0; b < k; ++b) total += state.pinCount(e, b);
    EXPECT_EQ(total, hg.edgeSize(e));
  }
}

// Random move sequences on small instances: every cached quantity equals its
// from-scratch value after every move.
TEST(PartitionState, IncrementalMatchesRecomputation) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    testing::RandomSpec spec;
    spec.dimension = 1 + trial % 3;
    const Hypergraph hg = testing::randomHypergraph(rng, spec);
    const std::size_t k = 2 + trial % 3;
    const auto ctx = normalize(hg, k);
    PartitionState state(hg, ctx, k, testing::randomAssignment(rng, hg.numVertices(), k));
    for (int step = 0; step < 30; ++step) {
      const auto v = static_cast<VertexId>(rng() % hg.numVertices());
      const auto t = static_cast<BlockId>(rng() % k);
      std::vector<std::uint32_t> lambda_before(hg.numEdges());
      for (EdgeId e = 0; e < hg.numEdges(); ++e) lambda_before[e] = state.lambda(e);
      state.applyMove(v, t);
      const Evaluation eval = recomputeAll(hg, ctx, k, state.assignment());
      ASSERT_EQ(state.connectivity(), eval.connectivity);
      for (BlockId b = 0; b < k; ++b) {
        for (std::size_t j = 0; j < hg.dimension(); ++j) {
          ASSERT_NEAR(state.blockWeight(b, j), eval.blockWeight[b][j], 1e-9);
        }
      }
      for (EdgeId e = 0; e < hg.numEdges(); ++e) {
        ASSERT_GE(state.lambda(e), 1u);
        const int change = static_cast<int>(state.lambda(e)) - static_cast<int>(lambda_before[e]);
        ASSERT_LE(std::abs(change), 1);
      }
    }
  }
}

TEST(Evaluation, R1StartValues) {
  const Hypergraph r1 = makeR1();
  const auto ctx = normalize(r1, 2);
  const std::vector<double> u{1.1, 1.1};
  const Evaluation eval = recomputeAll(r1, ctx, 2, r1Start(), u);
  EXPECT_EQ(eval.connectivity, 3.0);
  EXPECT_NEAR(eval.blockWeight[0][0], 1.7, 1e-12);
  EXPECT_NEAR(eval.blockWeight[0][1], 1.1, 1e-12);
  EXPECT_NEAR(eval.blockWeight[1][0], 0.3, 1e-12);
  EXPECT_NEAR(eval.blockWeight[1][1], 0.9, 1e-12);
  EXPECT_NEAR(eval.l1uTotal, 0.6, 1e-12);
}

TEST(Evaluation, SingleVertex) {
  const Hypergraph one = Hypergraph::build({}, {{1}}, {});
  const Evaluation eval = recomputeAll(one, normalize(one, 2), 2, std::vector<BlockId>{0});
  EXPECT_EQ(eval.connectivity, 0.0);
}

TEST(Evaluation, RejectsBadAssignment) {
  const Hypergraph r1 = makeR1();
  const auto ctx = normalize(r1, 2);
  EXPECT_THROW(recomputeAll(r1, ctx, 2, std::vector<BlockId>{0, 1}), std::invalid_argument);
  EXPECT_THROW(recomputeAll(r1, ctx, 2, std::vector<BlockId>{0, 1, 2, 0}), std::invalid_argument);
}

}  // namespace
}  // namespace mcpart
