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
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace mcpart {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using BlockId = std::uint32_t;

inline constexpr BlockId kInvalidBlock = static_cast<BlockId>(-1);

// Static hypergraph H = (V, E, c, omega) with d-dimensional raw vertex weights.
// Pins and incidences are stored in CSR form; vertex weights are a flat array
// of n * d entries, d consecutive per vertex.
class Hypergraph {
 public:
  Hypergraph() = default;

  // Validates and builds. Throws std::invalid_argument on duplicate pins,
  // empty edges, out-of-range pins, negative vertex weights, non-positive
  // edge weights or inconsistent dimensions. A dimension whose total is zero
  // is accepted here.
  static Hypergraph build(const std::vector<std::vector<VertexId>>& pins,
                          const std::vector<std::vector<double>>& weights,
                          const std::vector<double>& edgeWeights);

  // Same as build() with an already flattened weight array (n * dimension).
  static Hypergraph fromFlat(std::size_t numVertices, std::size_t dimension,
                             const std::vector<std::vector<VertexId>>& pins,
                             std::vector<double> flatWeights,
                             std::vector<double> edgeWeights);

  std::size_t numVertices() const { return num_vertices_; }
  std::size_t numEdges() const { return edge_offsets_.empty() ? 0 : edge_offsets_.size() - 1; }
  std::size_t numPins() const { return pins_.size(); }
  std::size_t dimension() const { return dimension_; }

  std::span<const VertexId> pins(EdgeId e) const {
    return {pins_.data() + edge_offsets_[e], pins_.data() + edge_offsets_[e + 1]};
  }
  std::size_t edgeSize(EdgeId e) const { return edge_offsets_[e + 1] - edge_offsets_[e]; }
  double edgeWeight(EdgeId e) const { return edge_weights_[e]; }

  std::span<const EdgeId> incidentEdges(VertexId v) const {
    return {incidence_.data() + vertex_offsets_[v], incidence_.data() + vertex_offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const { return vertex_offsets_[v + 1] - vertex_offsets_[v]; }

  // Raw (unnormalized) weight vector of v.
  std::span<const double> weight(VertexId v) const {
    return {weights_.data() + static_cast<std::size_t>(v) * dimension_, dimension_};
  }
  double weight(VertexId v, std::size_t j) const {
    return weights_[static_cast<std::size_t>(v) * dimension_ + j];
  }
  const std::vector<double>& flatWeights() const { return weights_; }
  const std::vector<double>& edgeWeights() const { return edge_weights_; }

  double totalWeight(std::size_t j) const { return total_weight_[j]; }
  std::span<const double> totalWeight() const { return total_weight_; }

  // Pin lists as nested vectors, in stored order.
  std::vector<std::vector<VertexId>> pinLists() const;

  // Returns a copy with the vertex weights replaced.
  Hypergraph withWeights(std::size_t dimension, std::vector<double> flatWeights) const;

  // Structural equality: same pins in the same order, same weights.
  bool operator==(const Hypergraph&) const = default;

 private:
  std::size_t num_vertices_ = 0;
  std::size_t dimension_ = 1;
  std::vector<std::size_t> edge_offsets_{0};
  std::vector<VertexId> pins_;
  std::vector<std::size_t> vertex_offsets_{0};
  std::vector<EdgeId> incidence_;
  std::vector<double> weights_;
  std::vector<double> edge_weights_;
  std::vector<double> total_weight_;

  void computeIncidence();
};

// Per-dimension scaling such that the average block weight is 1 in every
// dimension. Raw weights stay untouched; callers scale on access.
class NormalizationContext {
 public:
  NormalizationContext() = default;
  NormalizationContext(std::size_t k, std::vector<double> scale);

  std::size_t k() const { return k_; }
  std::size_t dimension() const { return scale_.size(); }
  double scale(std::size_t j) const { return scale_[j]; }
  std::span<const double> scale() const { return scale_; }

  double normalized(const Hypergraph& hg, VertexId v, std::size_t j) const {
    return hg.weight(v, j) * scale_[j];
  }

 private:
  std::size_t k_ = 0;
  std::vector<double> scale_;
};

// scale_j = k / sum_v c(v)_j. Throws std::invalid_argument if k < 2 or some
// dimension has zero total weight.
NormalizationContext normalize(const Hypergraph& hg, std::size_t k);

// Largest normalized weight per dimension.
std::vector<double> maxNormalizedWeight(const Hypergraph& hg, const NormalizationContext& ctx);

}  // namespace mcpart
