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

#include "mcpart/coarsening.h"

#include <algorithm>
#include <numeric>
#include <random>

namespace mcpart {

std::vector<VertexId> coarsenLevel(const Hypergraph& hg, const NormalizationContext& ctx,
                                   const CoarseningConfig& config, std::uint64_t seed) {
  const std::size_t n = hg.numVertices();
  const std::size_t d = hg.dimension();
  std::vector<VertexId> cluster(n);
  std::iota(cluster.begin(), cluster.end(), VertexId{0});
  std::vector<std::size_t> cluster_size(n, 1);
  std::vector<double> cluster_weight(n * d);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < d; ++j) {
      cluster_weight[v * d + j] = ctx.normalized(hg, v, j);
    }
  }

  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::mt19937_64 rng(seed);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> score(n, 0.0);
  std::vector<VertexId> touched;
  for (VertexId u : order) {
    if (cluster_size[cluster[u]] > 1) continue;
    touched.clear();
    for (EdgeId e : hg.incidentEdges(u)) {
      const std::size_t size = hg.edgeSize(e);
      if (size < 2 || size > config.maxRatedEdgeSize) continue;
      const double r = hg.edgeWeight(e) / static_cast<double>(size - 1);
      for (VertexId p : hg.pins(e)) {
        if (p == u) continue;
        const VertexId c = cluster[p];
        if (score[c] == 0.0) touched.push_back(c);
        score[c] += r;
      }
    }
    VertexId best = cluster[u];
    double best_score = 0.0;
    for (VertexId c : touched) {
      bool fits = true;
      for (std::size_t j = 0; j < d && fits; ++j) {
        fits = cluster_weight[c * d + j] + ctx.normalized(hg, u, j) <= config.clusterLimit;
      }
      if (fits && (score[c] > best_score || (score[c] == best_score && c < best))) {
        best = c;
        best_score = score[c];
      }
    }
    for (VertexId c : touched) score[c] = 0.0;
    if (best != cluster[u]) {
      const VertexId old = cluster[u];
      for (std::size_t j = 0; j < d; ++j) {
        cluster_weight[best * d + j] += cluster_weight[old * d + j];
        cluster_weight[old * d + j] = 0.0;
      }
      --cluster_size[old];
      ++cluster_size[best];
      cluster[u] = best;
    }
  }
  return cluster;
}

Contraction contract(const Hypergraph& hg, std::span<const VertexId> clustering) {
  const std::size_t n = hg.numVertices();
  const std::size_t d = hg.dimension();
  Contraction result;
  result.projection.assign(n, 0);
  std::vector<VertexId> coarse_id(n, static_cast<VertexId>(-1));
  VertexId next = 0;
  for (VertexId v = 0; v < n; ++v) {
    const VertexId c = clustering[v];
    if (coarse_id[c] == static_cast<VertexId>(-1)) coarse_id[c] = next++;
    result.projection[v] = coarse_id[c];
  }

  std::vector<double> weights(static_cast<std::size_t>(next) * d, 0.0);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < d; ++j) {
      weights[result.projection[v] * d + j] += hg.weight(v, j);
    }
  }

  std::vector<std::vector<VertexId>> edges;
  std::vector<double> edge_weights;
  for (EdgeId e = 0; e < hg.numEdges(); ++e) {
    std::vector<VertexId> pins;
    for (VertexId v : hg.pins(e)) pins.push_back(result.projection[v]);
    std::sort(pins.begin(), pins.end());
    pins.erase(std::unique(pins.begin(), pins.end()), pins.end());
    if (pins.size() < 2) continue;
    edges.push_back(std::move(pins));
    edge_weights.push_back(hg.edgeWeight(e));
  }

  std::vector<std::size_t> order(edges.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return edges[a] < edges[b]; });
  std::vector<std::vector<VertexId>> merged;
  std::vector<double> merged_weights;
  for (std::size_t i : order) {
    if (!merged.empty() && merged.back() == edges[i]) {
      merged_weights.back() += edge_weights[i];
    } else {
      merged.push_back(std::move(edges[i]));
      merged_weights.push_back(edge_weights[i]);
    }
  }
  result.coarse = Hypergraph::fromFlat(next, d, merged, std::move(weights), std::move(merged_weights));
  return result;
}

Hierarchy coarsen(const Hypergraph& hg, const NormalizationContext& ctx, std::size_t k,
                  const CoarseningConfig& config, std::uint64_t seed) {
  Hierarchy hierarchy;
  const std::size_t limit = std::max(config.contractionFactor * k, config.contractionFloor);
  const Hypergraph* current = &hg;
  while (current->numVertices() > limit && hierarchy.levels.size() < config.maxLevels) {
    const auto clustering = coarsenLevel(*current, ctx, config, seed + hierarchy.levels.size());
    Contraction c = contract(*current, clustering);
    if (static_cast<double>(c.coarse.numVertices()) >
        config.minShrink * static_cast<double>(current->numVertices())) {
      break;
    }
    hierarchy.levels.push_back({std::move(c.coarse), std::move(c.projection)});
    current = &hierarchy.levels.back().hypergraph;
  }
  return hierarchy;
}

}  // namespace mcpart
