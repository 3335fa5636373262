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
#include "mcpart/objective.h"
#include "support.h"

namespace mcpart {
namespace {

using testing::makeR1;
using testing::r1Start;

ImbalanceBound r1Bound() { return ImbalanceBound::fromOverride({1.1, 1.1}, 0.2); }

TEST(MakeBound, ThresholdCapsHeavyDimension) {
  // Dimension 0: one vertex carries a quarter of the total (normalized 0.5).
  // Dimension 1: 2000 equal vertices (normalized 0.001).
  std::vector<std::vector<double>> weights(2000, {1.0, 1.0});
  weights[0][0] = 1999.0 / 3.0;
  const Hypergraph big = Hypergraph::build({{0, 1}}, weights, {1});
  const auto ctx = normalize(big, 2);
  const ImbalanceBound bound = makeBound(big, ctx, 0.03, 0.0025);
  EXPECT_NEAR(bound.maxWeight[0], 0.5, 1e-12);
  EXPECT_NEAR(bound.maxWeight[1], 0.001, 1e-12);
  EXPECT_NEAR(bound.thresholdedMaxWeight[0], 0.0025, 1e-15);
  EXPECT_NEAR(bound.thresholdedMaxWeight[1], 0.001, 1e-12);
  EXPECT_NEAR(bound.u[0], 1.0275, 1e-12);
  EXPECT_NEAR(bound.u[1], 1.029, 1e-12);
}

TEST(MakeBound, VanishingThreshold) {
  const Hypergraph r1 = makeR1();
  const ImbalanceBound bound = makeBound(r1, normalize(r1, 2), 0.03, 1e-15);
  EXPECT_NEAR(bound.u[0], 1.03, 1e-12);
  EXPECT_NEAR(bound.u[1], 1.03, 1e-12);
}

TEST(MakeBound, OverrideStoredVerbatim) {
  const ImbalanceBound bound = ImbalanceBound::fromOverride({1.9, 1.9}, 0.5);
  EXPECT_EQ(bound.u, (std::vector<double>{1.9, 1.9}));
  EXPECT_TRUE(bound.overridden);
}

TEST(MakeBound, Errors) {
  const Hypergraph r1 = makeR1();
  const auto ctx = normalize(r1, 2);
  EXPECT_THROW(makeBound(r1, ctx, 0.0), std::invalid_argument);
  EXPECT_THROW(makeBound(r1, ctx, 0.03, 0.0), std::invalid_argument);
  // Normalized weights 1.5 and 0.5: u = 1 + eps - min(t, 1.5) <= 0.
  const Hypergraph heavy = Hypergraph::build({{0, 1}}, {{3}, {1}}, {1});
  EXPECT_THROW(makeBound(heavy, normalize(heavy, 2), 0.03, 1.5), std::invalid_argument);
  EXPECT_NO_THROW(makeBound(heavy, normalize(heavy, 2), 0.03, 1.0));
}

TEST(MakeBound, InvariantsOnRandomInstances) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Hypergraph hg = testing::randomHypergraph(rng, {.dimension = 3});
    const auto ctx = normalize(hg, 2 + trial % 4);
    const ImbalanceBound b = makeBound(hg, ctx, 0.03, 0.01 * (1 + trial % 5));
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_LE(b.thresholdedMaxWeight[j], b.maxWeight[j]);
      EXPECT_LE(b.thresholdedMaxWeight[j], b.threshold);
      EXPECT_NEAR(b.u[j], 1.03 - b.thresholdedMaxWeight[j], 1e-15);
      EXPECT_GT(b.u[j], 0.0);
    }
  }
}

TEST(L1u, BlockExamples) {
  const ImbalanceBound b = r1Bound();
  EXPECT_NEAR(l1uBlock(std::vector<double>{1.7, 1.1}, b), 0.6, 1e-12);
  EXPECT_EQ(l1uBlock(std::vector<double>{1.0, 0.5}, b), 0.0);
  EXPECT_NEAR(l1uBlock(std::vector<double>{1.3, 0.9}, b), 0.2, 1e-12);
}

TEST(L1u, TotalExamples) {
  const Hypergraph r1 = makeR1();
  const auto ctx = normalize(r1, 2);
  EXPECT_NEAR(l1uTotal(PartitionState(r1, ctx, 2, r1Start()), r1Bound()), 0.6, 1e-12);
  const PartitionState balanced(r1, ctx, 2, std::vector<BlockId>{1, 1, 0, 0});
  EXPECT_EQ(l1uTotal(balanced, ImbalanceBound::fromOverride({1.2, 1.2}, 0.2)), 0.0);
}

TEST(L1u, ZeroIffWithinBound) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const Hypergraph hg = testing::randomHypergraph(rng, {});
    const std::size_t k = 2 + trial % 3;
    const auto ctx = normalize(hg, k);
    const PartitionState state(hg, ctx, k, testing::randomAssignment(rng, hg.numVertices(), k));
    const ImbalanceBound b = ImbalanceBound::fromOverride({1.3, 1.3}, 0.3);
    bool within = true;
    for (BlockId i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < 2; ++j) within = within && state.blockWeight(i, j) <= 1.3;
    }
    EXPECT_EQ(l1uTotal(state, b) == 0.0, within);
  }
}

TEST(Gains, R1Examples) {
  const Hypergraph r1 = makeR1();
  const auto ctx = normalize(r1, 2);
  const PartitionState p0(r1, ctx, 2, r1Start());
  const ImbalanceBound b = r1Bound();
  EXPECT_NEAR(balanceGain(p0, 3, 1, b), 0.2, 1e-12);
  EXPECT_NEAR(balanceGain(p0, 2, 1, b), 0.2, 1e-12);
  // v1 to V2 leaves (0.8, 0.8) / (1.2, 1.2): 0.6 -> 0.2.
  EXPECT_NEAR(balanceGain(p0, 0, 1, b), 0.4, 1e-12);
  EXPECT_EQ(connectivityGain(p0, 3, 1), 0.0);
  EXPECT_EQ(connectivityGain(p0, 2, 1), -1.0);
}

TEST(Gains, ZeroWeightAndIsolatedVertex) {
  const Hypergraph hg = Hypergraph::build({{0, 1}}, {{1, 1}, {1, 1}, {0, 0}}, {1});
  const auto ctx = normalize(hg, 2);
  const PartitionState s(hg, ctx, 2, std::vector<BlockId>{0, 0, 0});
  const ImbalanceBound b = ImbalanceBound::fromOverride({1.0, 1.0}, 0.1);
  EXPECT_EQ(balanceGain(s, 2, 1, b), 0.0);
  EXPECT_EQ(connectivityGain(s, 2, 1), 0.0);
}

TEST(Gains, MatchRecomputationOnRandomMoves) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    testing::RandomSpec spec;
    spec.dimension = 1 + trial % 3;
    const Hypergraph hg = testing::randomHypergraph(rng, spec);
    const std::size_t k = 2 + trial % 3;
    const auto ctx = normalize(hg, k);
    PartitionState state(hg, ctx, k, testing::randomAssignment(rng, hg.numVertices(), k));
    const ImbalanceBound b = makeBound(hg, ctx, 0.1);
    for (int step = 0; step < 10; ++step) {
      const auto v = static_cast<VertexId>(rng() % hg.numVertices());
      auto t = static_cast<BlockId>(rng() % k);
      if (t == state.block(v)) t = (t + 1) % k;
      const double bg = balanceGain(state, v, t, b);
      const double cg = connectivityGain(state, v, t);
      const double before = recomputeAll(hg, ctx, k, state.assignment(), b.u).l1uTotal;
      const MoveDelta delta = state.applyMove(v, t);
      const double after = recomputeAll(hg, ctx, k, state.assignment(), b.u).l1uTotal;
      ASSERT_NEAR(bg, before - after, 1e-9);
      ASSERT_EQ(cg, -delta.connectivityDelta);
    }
  }
}

TEST(Rating, Examples) {
  EXPECT_NEAR(rating({-1.0, 0.2}), -5.0, 1e-12);
  EXPECT_EQ(rating({0.0, 0.2}), 0.0);
  EXPECT_DOUBLE_EQ(rating({2.0, 0.5}), 1.0);
  EXPECT_THROW(rating({1.0, 0.0}), std::invalid_argument);
  EXPECT_THROW(rating({1.0, -0.1}), std::invalid_argument);
}

TEST(Rating, MonotoneInConnectivityGain) {
  for (double bg : {0.01, 0.2, 1.0, 3.0}) {
    double previous = -std::numeric_limits<double>::infinity();
    for (int i = -50; i <= 50; ++i) {
      const double r = rating({0.5 * i, bg});
      EXPECT_GT(r, previous);
      previous = r;
    }
  }
}

}  // namespace
}  // namespace mcpart
