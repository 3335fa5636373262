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

#include "mcpart/hypergraph.h"

#include <algorithm>
#include <cmath>
#include <string>

namespace mcpart {

Hypergraph Hypergraph::build(const std::vector<std::vector<VertexId>>& pins,
                             const std::vector<std::vector<double>>& weights,
                             const std::vector<double>& edgeWeights) {
  if (weights.empty()) {
    throw std::invalid_argument("hypergraph needs at least one vertex");
  }
  const std::size_t d = weights.front().size();
  std::vector<double> flat;
  flat.reserve(weights.size() * d);
  for (const auto& w : weights) {
    if (w.size() != d) {
      throw std::invalid_argument("inconsistent vertex weight dimensions");
    }
    flat.insert(flat.end(), w.begin(), w.end());
  }
  return fromFlat(weights.size(), d, pins, std::move(flat), edgeWeights);
}

Hypergraph Hypergraph::fromFlat(std::size_t numVertices, std::size_t dimension,
                                const std::vector<std::vector<VertexId>>& pins,
                                std::vector<double> flatWeights,
                                std::vector<double> edgeWeights) {
  if (dimension == 0) {
    throw std::invalid_argument("weight dimension must be at least 1");
  }
  if (flatWeights.size() != numVertices * dimension) {
    throw std::invalid_argument("vertex weight array has wrong size");
  }
  if (edgeWeights.size() != pins.size()) {
    throw std::invalid_argument("edge weight count does not match edge count");
  }
  for (double w : flatWeights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("vertex weights must be finite and nonnegative");
    }
  }

  Hypergraph hg;
  hg.num_vertices_ = numVertices;
  hg.dimension_ = dimension;
  hg.weights_ = std::move(flatWeights);
  hg.edge_weights_ = std::move(edgeWeights);
  hg.edge_offsets_.reserve(pins.size() + 1);

  std::vector<EdgeId> last_seen(numVertices, static_cast<EdgeId>(-1));
  for (std::size_t e = 0; e < pins.size(); ++e) {
    if (!(hg.edge_weights_[e] > 0.0) || !std::isfinite(hg.edge_weights_[e])) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has non-positive weight");
    }
    if (pins[e].empty()) {
      throw std::invalid_argument("edge " + std::to_string(e) + " has no pins");
    }
    for (VertexId v : pins[e]) {
      if (v >= numVertices) {
        throw std::invalid_argument("pin " + std::to_string(v) + " of edge " + std::to_string(e) +
                                    " is out of range");
      }
      if (last_seen[v] == e) {
        throw std::invalid_argument("duplicate pin " + std::to_string(v) + " in edge " +
                                    std::to_string(e));
      }
      last_seen[v] = static_cast<EdgeId>(e);
      hg.pins_.push_back(v);
    }
    hg.edge_offsets_.push_back(hg.pins_.size());
  }

  hg.total_weight_.assign(dimension, 0.0);
  for (std::size_t v = 0; v < numVertices; ++v) {
    for (std::size_t j = 0; j < dimension; ++j) {
      hg.total_weight_[j] += hg.weights_[v * dimension + j];
    }
  }
  hg.computeIncidence();
  return hg;
}

void Hypergraph::computeIncidence() {
  vertex_offsets_.assign(num_vertices_ + 1, 0);
  for (VertexId v : pins_) {
    ++vertex_offsets_[v + 1];
  }
  for (std::size_t v = 0; v < num_vertices_; ++v) {
    vertex_offsets_[v + 1] += vertex_offsets_[v];
  }
  incidence_.resize(pins_.size());
  std::vector<std::size_t> fill(vertex_offsets_.begin(), vertex_offsets_.end() - 1);
  // Edges are visited in increasing order, so each incidence list is sorted.
  for (EdgeId e = 0; e < numEdges(); ++e) {
    for (VertexId v : pins(e)) {
      incidence_[fill[v]++] = e;
    }
  }
}

std::vector<std::vector<VertexId>> Hypergraph::pinLists() const {
  std::vector<std::vector<VertexId>> result;
  result.reserve(numEdges());
  for (EdgeId e = 0; e < numEdges(); ++e) {
    auto p = pins(e);
    result.emplace_back(p.begin(), p.end());
  }
  return result;
}

Hypergraph Hypergraph::withWeights(std::size_t dimension, std::vector<double> flatWeights) const {
  return fromFlat(num_vertices_, dimension, pinLists(), std::move(flatWeights), edge_weights_);
}

NormalizationContext::NormalizationContext(std::size_t k, std::vector<double> scale)
    : k_(k), scale_(std::move(scale)) {
  for (double s : scale_) {
    if (!(s > 0.0) || !std::isfinite(s)) {
      throw std::invalid_argument("normalization scale must be finite and positive");
    }
  }
}

NormalizationContext normalize(const Hypergraph& hg, std::size_t k) {
  if (k < 2) {
    throw std::invalid_argument("normalization needs k >= 2");
  }
  std::vector<double> scale(hg.dimension());
  for (std::size_t j = 0; j < hg.dimension(); ++j) {
    if (!(hg.totalWeight(j) > 0.0)) {
      throw std::invalid_argument("weight dimension " + std::to_string(j) + " has zero total weight");
    }
    scale[j] = static_cast<double>(k) / hg.totalWeight(j);
  }
  return NormalizationContext(k, std::move(scale));
}

std::vector<double> maxNormalizedWeight(const Hypergraph& hg, const NormalizationContext& ctx) {
  std::vector<double> result(hg.dimension(), 0.0);
  for (VertexId v = 0; v < hg.numVertices(); ++v) {
    for (std::size_t j = 0; j < hg.dimension(); ++j) {
      result[j] = std::max(result[j], ctx.normalized(hg, v, j));
    }
  }
  return result;
}

}  // namespace mcpart
