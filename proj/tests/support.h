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

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "mcpart/hypergraph.h"

namespace mcpart::testing {

// Four vertices, three hyperedges, two weight dimensions with total (2, 2).
inline Hypergraph makeR1() {
  return Hypergraph::build({{0, 1}, {1, 2, 3}, {0, 2}},
                           {{0.9, 0.3}, {0.3, 0.9}, {0.5, 0.5}, {0.3, 0.3}}, {1, 2, 1});
}

// P0: V1 = {v1, v3, v4}, V2 = {v2}.
inline std::vector<BlockId> r1Start() { return {0, 1, 0, 0}; }

struct RandomSpec {
  std::size_t minVertices = 4;
  std::size_t maxVertices = 12;
  std::size_t minEdges = 1;
  std::size_t maxEdges = 10;
  std::size_t maxEdgeSize = 4;
  std::size_t dimension = 2;
  int minWeight = 1;
  int maxWeight = 10;
  int maxEdgeWeight = 3;
};

// Random hypergraph with integer weights; every dimension has positive total.
inline Hypergraph randomHypergraph(std::mt19937_64& rng, const RandomSpec& spec) {
  std::uniform_int_distribution<std::size_t> nd(spec.minVertices, spec.maxVertices);
  const std::size_t n = nd(rng);
  std::uniform_int_distribution<std::size_t> md(spec.minEdges, spec.maxEdges);
  const std::size_t m = md(rng);
  std::uniform_int_distribution<std::size_t> sd(2, std::max<std::size_t>(2, std::min(spec.maxEdgeSize, n)));
  std::uniform_int_distribution<int> wd(spec.minWeight, spec.maxWeight);
  std::uniform_int_distribution<int> ed(1, spec.maxEdgeWeight);
  std::vector<std::vector<VertexId>> pins;
  std::vector<double> omega;
  std::vector<VertexId> all(n);
  for (VertexId v = 0; v < n; ++v) all[v] = v;
  for (std::size_t e = 0; e < m; ++e) {
    std::shuffle(all.begin(), all.end(), rng);
    const std::size_t size = std::min(sd(rng), n);
    pins.emplace_back(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
    omega.push_back(ed(rng));
  }
  std::vector<std::vector<double>> weights(n, std::vector<double>(spec.dimension));
  for (auto& w : weights) {
    for (double& x : w) x = wd(rng);
  }
  for (std::size_t j = 0; j < spec.dimension; ++j) {
    double total = 0.0;
    for (const auto& w : weights) total += w[j];
    if (total == 0.0) weights[0][j] = 1.0;
  }
  return Hypergraph::build(pins, weights, omega);
}

inline std::vector<BlockId> randomAssignment(std::mt19937_64& rng, std::size_t n, std::size_t k) {
  std::uniform_int_distribution<BlockId> bd(0, static_cast<BlockId>(k - 1));
  std::vector<BlockId> a(n);
  for (auto& b : a) b = bd(rng);
  return a;
}

// Graph-like instance: two dense clusters joined by one edge, unit+degree
// weights.
inline Hypergraph twoCliques(std::size_t size) {
  std::vector<std::vector<VertexId>> pins;
  for (std::size_t c = 0; c < 2; ++c) {
    const auto base = static_cast<VertexId>(c * size);
    for (VertexId a = 0; a < size; ++a) {
      for (VertexId b = a + 1; b < size; ++b) pins.push_back({base + a, base + b});
    }
  }
  std::vector<std::vector<double>> weights(2 * size, {1.0, static_cast<double>(size - 1)});
  return Hypergraph::build(pins, weights, std::vector<double>(pins.size(), 1.0));
}

}  // namespace mcpart::testing
