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

#include "mcpart/partition.h"

#include <algorithm>
#include <string>

namespace mcpart {

PinCountTable::PinCountTable(std::size_t numEdges, std::size_t k) : k_(k), dense_(k <= kDenseLimit) {
  if (dense_) {
    counts_.assign(numEdges * k, 0);
  } else {
    sparse_.resize(numEdges);
  }
}

std::uint32_t PinCountTable::increment(EdgeId e, BlockId b) {
  if (dense_) {
    return ++counts_[static_cast<std::size_t>(e) * k_ + b];
  }
  for (auto& [block, count] : sparse_[e]) {
    if (block == b) return ++count;
  }
  sparse_[e].emplace_back(b, 1);
  return 1;
}

std::uint32_t PinCountTable::decrement(EdgeId e, BlockId b) {
  if (dense_) {
    return --counts_[static_cast<std::size_t>(e) * k_ + b];
  }
  auto& list = sparse_[e];
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (list[i].first == b) {
      const std::uint32_t remaining = --list[i].second;
      if (remaining == 0) {
        list[i] = list.back();
        list.pop_back();
      }
      return remaining;
    }
  }
  throw std::logic_error("pin count underflow");
}

PartitionState::PartitionState(const Hypergraph& hg, NormalizationContext ctx, std::size_t k,
                               std::vector<double> blockShare)
    : hg_(&hg), ctx_(std::move(ctx)), k_(k), block_share_(std::move(blockShare)) {
  if (k_ == 0) {
    throw std::invalid_argument("partition needs at least one block");
  }
  if (ctx_.dimension() != hg.dimension()) {
    throw std::invalid_argument("normalization context dimension mismatch");
  }
  if (block_share_.empty()) {
    block_share_.assign(k_, 1.0);
  }
  if (block_share_.size() != k_) {
    throw std::invalid_argument("block share vector must have k entries");
  }
  std::vector<BlockId> zero(hg.numVertices(), 0);
  assign(zero);
}

PartitionState::PartitionState(const Hypergraph& hg, NormalizationContext ctx, std::size_t k,
                               std::span<const BlockId> assignment, std::vector<double> blockShare)
    : PartitionState(hg, std::move(ctx), k, std::move(blockShare)) {
  assign(assignment);
}

void PartitionState::assign(std::span<const BlockId> assignment) {
  const Hypergraph& hg = *hg_;
  if (assignment.size() != hg.numVertices()) {
    throw std::invalid_argument("assignment size does not match vertex count");
  }
  for (BlockId b : assignment) {
    if (b >= k_) {
      throw std::invalid_argument("block id " + std::to_string(b) + " out of range");
    }
  }
  assignment_.assign(assignment.begin(), assignment.end());
  const std::size_t d = dimension();
  block_weight_.assign(k_ * d, 0.0);
  for (VertexId v = 0; v < hg.numVertices(); ++v) {
    const BlockId b = assignment_[v];
    for (std::size_t j = 0; j < d; ++j) {
      block_weight_[static_cast<std::size_t>(b) * d + j] += vertexWeightIn(v, b, j);
    }
  }
  pin_count_ = PinCountTable(hg.numEdges(), k_);
  lambda_.assign(hg.numEdges(), 0);
  connectivity_ = 0.0;
  for (EdgeId e = 0; e < hg.numEdges(); ++e) {
    for (VertexId v : hg.pins(e)) {
      if (pin_count_.increment(e, assignment_[v]) == 1) {
        ++lambda_[e];
      }
    }
    connectivity_ += static_cast<double>(lambda_[e] - 1) * hg.edgeWeight(e);
  }
}

double PartitionState::vertexWeightL1(VertexId v) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < dimension(); ++j) {
    sum += vertexWeight(v, j);
  }
  return sum;
}

MoveDelta PartitionState::applyMove(VertexId v, BlockId target) {
  if (target >= k_) {
    throw std::invalid_argument("target block " + std::to_string(target) + " out of range");
  }
  const BlockId source = assignment_[v];
  MoveDelta delta{v, source, target, 0.0};
  if (source == target) {
    return delta;
  }
  const std::size_t d = dimension();
  for (std::size_t j = 0; j < d; ++j) {
    block_weight_[static_cast<std::size_t>(source) * d + j] -= vertexWeightIn(v, source, j);
    block_weight_[static_cast<std::size_t>(target) * d + j] += vertexWeightIn(v, target, j);
  }
  assignment_[v] = target;
  for (EdgeId e : hg_->incidentEdges(v)) {
    const double w = hg_->edgeWeight(e);
    if (pin_count_.decrement(e, source) == 0) {
      --lambda_[e];
      delta.connectivityDelta -= w;
    }
    if (pin_count_.increment(e, target) == 1) {
      ++lambda_[e];
      delta.connectivityDelta += w;
    }
  }
  connectivity_ += delta.connectivityDelta;
  return delta;
}

bool PartitionState::isBlockOverloaded(BlockId b, double epsilon) const {
  for (double w : blockWeight(b)) {
    if (w > 1.0 + epsilon + kBalanceTolerance) return true;
  }
  return false;
}

bool PartitionState::isBalanced(double epsilon) const {
  for (BlockId b = 0; b < k_; ++b) {
    if (isBlockOverloaded(b, epsilon)) return false;
  }
  return true;
}

std::vector<double> PartitionState::maxBlockWeight() const {
  std::vector<double> result(dimension(), 0.0);
  for (BlockId b = 0; b < k_; ++b) {
    for (std::size_t j = 0; j < dimension(); ++j) {
      result[j] = std::max(result[j], blockWeight(b, j));
    }
  }
  return result;
}

std::vector<VertexId> PartitionState::members(BlockId b) const {
  std::vector<VertexId> result;
  for (VertexId v = 0; v < assignment_.size(); ++v) {
    if (assignment_[v] == b) result.push_back(v);
  }
  return result;
}

}  // namespace mcpart
