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
#include "mcpart/multilevel.h"
#include "oracle.h"
#include "support.h"

namespace mcpart {
namespace {

Hypergraph path4() {
  return Hypergraph::build({{0, 1}, {1, 2}, {2, 3}}, std::vector<std::vector<double>>(4, {1.0}),
                           {1, 1, 1});
}

TEST(DegreeZero, RemoveKeepsEdgesAndOrder) {
  const Hypergraph hg = Hypergraph::build({{1, 3}}, {{1}, {2}, {3}, {4}}, {7});
  const DegreeZeroRemoval r = removeDegreeZero(hg);
  EXPECT_EQ(r.kept, (std::vector<VertexId>{1, 3}));
  EXPECT_EQ(r.removed, (std::vector<VertexId>{0, 2}));
  ASSERT_EQ(r.reduced.numVertices(), 2u);
  EXPECT_EQ(r.reduced.weight(1, 0), 4.0);
  EXPECT_EQ(r.reduced.edgeWeight(0), 7.0);
}

// Blocks (0.8, 1.0) and (1.0, 0.6), removed vertex (0.5, 0.1):
// 0.5 * 0.2 + 0.1 * 0 = 0.1 against 0.5 * 0 + 0.1 * 0.4 = 0.04.
TEST(DegreeZero, ReinsertPicksLargestFreeAlignment) {
  const Hypergraph hg =
      Hypergraph::build({{0, 1}}, {{0.8, 1.0}, {1.0, 0.6}, {0.5, 0.1}}, {1});
  const NormalizationContext unit(2, {1.0, 1.0});
  PartitionState s(hg, unit, 2, std::vector<BlockId>{0, 1, 1});
  RebalanceTally tally;
  const std::vector<VertexId> removed{2};
  reinsertDegreeZero(s, removed, nullptr, tally);
  EXPECT_EQ(s.block(2), 0u);
}

TEST(DegreeZero, ReinsertTiesAndZeroWeight) {
  const Hypergraph hg =
      Hypergraph::build({{0, 1}}, {{0.5, 0.5}, {0.5, 0.5}, {0.2, 0.2}, {0.0, 0.0}}, {1});
  const NormalizationContext unit(2, {1.0, 1.0});
  PartitionState s(hg, unit, 2, std::vector<BlockId>{0, 1, 1, 1});
  RebalanceTally tally;
  const std::vector<VertexId> removed{3, 2};
  reinsertDegreeZero(s, removed, nullptr, tally);
  EXPECT_EQ(s.block(2), 0u);
  // Placed after v2 (lighter); scores are 0 everywhere.
  EXPECT_EQ(s.block(3), 0u);
}

TEST(Partition, TwoCliquesGiveZero) {
  const Hypergraph hg = testing::twoCliques(6);
  ASSERT_EQ(oracle::bruteForceOptimal(hg, 2, 0.03).connectivity, 0.0);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    PartitionConfig config;
    config.seed = seed;
    const PartitionResult r = partition(hg, 2, 0.03, config);
    EXPECT_EQ(r.report.connectivity, 0.0);
    EXPECT_TRUE(r.report.balanced);
  }
}

TEST(Partition, PathOfFourCutsOnce) {
  const Hypergraph hg = path4();
  ASSERT_EQ(oracle::bruteForceOptimal(hg, 2, 0.03).connectivity, 1.0);
  const PartitionResult r = partition(hg, 2, 0.03, PartitionConfig{});
  EXPECT_EQ(r.report.connectivity, 1.0);
  EXPECT_TRUE(r.report.balanced);
}

TEST(Partition, ReportMatchesEvaluation) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 40; ++trial) {
    const Hypergraph hg = testing::randomHypergraph(
        rng, {.minVertices = 30, .maxVertices = 120, .maxEdges = 150, .maxWeight = 3});
    const std::size_t k = 2 + trial % 4;
    PartitionConfig config;
    config.seed = trial;
    const PartitionResult r = partition(hg, k, 0.1, config);
    const Evaluation eval = recomputeAll(hg, normalize(hg, k), k, r.assignment);
    EXPECT_EQ(r.report.connectivity, eval.connectivity);
    EXPECT_EQ(r.report.balanced, eval.balanced(0.1));
    ASSERT_EQ(r.report.maxBlockWeight.size(), hg.dimension());
    for (std::size_t j = 0; j < hg.dimension(); ++j) {
      EXPECT_NEAR(r.report.maxBlockWeight[j], eval.maxBlockWeight[j], 1e-9);
    }
  }
}

TEST(Partition, DegreeZeroVerticesArePlaced) {
  std::vector<std::vector<VertexId>> pins{{0, 1}, {1, 2}, {2, 3}};
  const Hypergraph hg = Hypergraph::build(pins, std::vector<std::vector<double>>(10, {1.0, 2.0}),
                                          {1, 1, 1});
  const PartitionResult r = partition(hg, 2, 0.03, PartitionConfig{});
  EXPECT_EQ(r.report.removedDegreeZero, 6u);
  EXPECT_TRUE(r.report.balanced);
  EXPECT_LE(r.report.connectivity, 1.0);
}

TEST(Partition, Deterministic) {
  const Hypergraph hg = testing::twoCliques(12);
  PartitionConfig config;
  config.seed = 17;
  const PartitionResult a = partition(hg, 3, 0.03, config);
  const PartitionResult b = partition(hg, 3, 0.03, config);
  EXPECT_EQ(a.assignment, b.assignment);
  EXPECT_EQ(a.report.connectivity, b.report.connectivity);
  EXPECT_EQ(a.report.rebalance.greedyRounds, b.report.rebalance.greedyRounds);
}

TEST(Partition, HeavyVertexWarning) {
  const Hypergraph hg =
      Hypergraph::build({{0, 1}, {1, 2}}, {{10}, {1}, {1}}, {1, 1});
  const PartitionResult r = partition(hg, 2, 0.03, PartitionConfig{});
  EXPECT_FALSE(r.report.warnings.empty());
  EXPECT_FALSE(r.report.balanced);
  EXPECT_EQ(r.assignment.size(), 3u);
}

TEST(Partition, Errors) {
  const Hypergraph hg = path4();
  EXPECT_THROW(partition(hg, 1, 0.03, PartitionConfig{}), std::invalid_argument);
  const Hypergraph zero = Hypergraph::build({{0, 1}}, {{1, 0}, {1, 0}}, {1});
  EXPECT_THROW(partition(zero, 2, 0.03, PartitionConfig{}), std::invalid_argument);
}

// Against exhaustive search on tiny instances: never better than the
// optimum, and balanced whenever the pipeline says so.
TEST(Partition, NeverBeatsOptimum) {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 40; ++trial) {
    const Hypergraph hg = testing::randomHypergraph(rng, {.minVertices = 6, .maxVertices = 10});
    const std::size_t k = 2 + trial % 2;
    const auto optimum = oracle::bruteForceOptimal(hg, k, 0.2);
    PartitionConfig config;
    config.seed = trial;
    const PartitionResult r = partition(hg, k, 0.2, config);
    if (r.report.balanced) {
      ASSERT_TRUE(optimum.feasible);
      EXPECT_GE(r.report.connectivity, optimum.connectivity);
    }
    if (!optimum.feasible) EXPECT_FALSE(r.report.balanced);
  }
}

TEST(UncoarsenAndRefine, ProjectionKeepsConnectivityWithoutRefiners) {
  const Hypergraph hg = testing::twoCliques(20);
  const auto ctx = normalize(hg, 2);
  PartitionConfig config;
  config.coarsening.clusterLimit = 0.2;
  config.coarsening.contractionFactor = 4;
  config.refinement.lpEnabled = false;
  config.refinement.fmEnabled = false;
  const Hierarchy h = coarsen(hg, ctx, 2, config.coarsening, 5);
  ASSERT_FALSE(h.levels.empty());
  const Hypergraph& coarsest = h.levels.back().hypergraph;
  std::mt19937_64 rng(5);
  const auto coarse = testing::randomAssignment(rng, coarsest.numVertices(), 2);
  RebalanceTally tally;
  // A huge epsilon keeps the rebalancer out of the way.
  const auto fine = uncoarsenAndRefine(hg, h, coarse, ctx, 10.0, config, tally);
  EXPECT_EQ(oracle::connectivityOf(hg, fine), oracle::connectivityOf(coarsest, coarse));
}

// Coarse vertices are too heavy to balance; their fine halves are not.
TEST(UncoarsenAndRefine, FinerLevelRestoresBalance) {
  std::vector<std::vector<VertexId>> pins;
  for (VertexId v = 0; v + 1 < 8; ++v) pins.push_back({v, v + 1});
  const Hypergraph hg = Hypergraph::build(pins, std::vector<std::vector<double>>(8, {1.0}),
                                          std::vector<double>(7, 1.0));
  const auto ctx = normalize(hg, 2);
  // Clusters {0..4} and {5..7} weigh 1.25 and 0.75; no coarse partition
  // satisfies 1.05.
  const Contraction c = contract(hg, std::vector<VertexId>{0, 0, 0, 0, 0, 5, 5, 5});
  Hierarchy h;
  h.levels.push_back({c.coarse, c.projection});
  PartitionConfig config;
  RebalanceTally tally;
  const auto fine = uncoarsenAndRefine(hg, h, {0, 1}, ctx, 0.05, config, tally);
  EXPECT_TRUE(recomputeAll(hg, ctx, 2, fine).balanced(0.05));
}

}  // namespace
}  // namespace mcpart
