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

#include <cstdint>
#include <deque>
#include <span>
#include <vector>

#include "mcpart/hypergraph.h"

namespace mcpart {

struct CoarseningConfig {
  // Normalized per-dimension cap on cluster weight.
  double clusterLimit = 1.0 / 160.0;
  // Coarsening stops once n <= max(contractionFactor * k, contractionFloor).
  std::size_t contractionFactor = 160;
  std::size_t contractionFloor = 0;
  std::size_t maxLevels = 32;
  // A level that keeps more than this fraction of the vertices ends coarsening.
  double minShrink = 0.95;
  // Hyperedges larger than this are ignored when rating clusters.
  std::size_t maxRatedEdgeSize = 1000;
};

// Size-constrained label propagation clustering. Vertices are visited in a
// seeded random order; a singleton vertex joins the neighboring cluster with
// the highest heavy-edge rating sum_e omega(e) / (|e| - 1) whose weight stays
// within clusterLimit in every dimension. Returns a cluster id per vertex
// (the id of a member vertex).
std::vector<VertexId> coarsenLevel(const Hypergraph& hg, const NormalizationContext& ctx,
                                   const CoarseningConfig& config, std::uint64_t seed);

struct Contraction {
  Hypergraph coarse;
  // Fine vertex -> coarse vertex.
  std::vector<VertexId> projection;
};

// Contracts each cluster to one vertex with summed weights. Edges that end up
// with a single pin are dropped, parallel edges are merged with summed weight.
Contraction contract(const Hypergraph& hg, std::span<const VertexId> clustering);

struct HierarchyLevel {
  Hypergraph hypergraph;
  // Vertex of the next finer level -> vertex of this level.
  std::vector<VertexId> projection;
};

// levels.front() is the first contraction of the input, levels.back() the
// coarsest. A deque keeps the hypergraphs at stable addresses.
struct Hierarchy {
  std::deque<HierarchyLevel> levels;
};

Hierarchy coarsen(const Hypergraph& hg, const NormalizationContext& ctx, std::size_t k,
                  const CoarseningConfig& config, std::uint64_t seed);

}  // namespace mcpart
