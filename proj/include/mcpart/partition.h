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
#include <span>
#include <utility>
#include <vector>

#include "mcpart/hypergraph.h"

namespace mcpart {

// Slack used by balance comparisons so that sums like 0.9 + 0.3 do not flip a
// block that sits exactly on the limit.
inline constexpr double kBalanceTolerance = 1e-9;

struct MoveDelta {
  VertexId vertex = 0;
  BlockId from = kInvalidBlock;
  BlockId to = kInvalidBlock;
  // Realized change of the connectivity objective (negative is better).
  double connectivityDelta = 0.0;
};

// Number of pins of each hyperedge per block. Dense (m x k) for k <= 64,
// otherwise one small (block, count) list per edge.
class PinCountTable {
 public:
  static constexpr std::size_t kDenseLimit = 64;

  PinCountTable() = default;
  PinCountTable(std::size_t numEdges, std::size_t k);

  std::uint32_t get(EdgeId e, BlockId b) const {
    if (dense_) return counts_[static_cast<std::size_t>(e) * k_ + b];
    for (const auto& [block, count] : sparse_[e]) {
      if (block == b) return count;
    }
    return 0;
  }
  // Both return the count after the update.
  std::uint32_t increment(EdgeId e, BlockId b);
  std::uint32_t decrement(EdgeId e, BlockId b);
  bool dense() const { return dense_; }

  bool operator==(const PinCountTable&) const = default;

 private:
  std::size_t k_ = 0;
  bool dense_ = true;
  std::vector<std::uint32_t> counts_;
  std::vector<std::vector<std::pair<BlockId, std::uint32_t>>> sparse_;
};

// A k-way partition with incrementally maintained block weights, pin counts
// and connectivity. All mutation goes through applyMove().
//
// Block weights are stored normalized and divided by the block's share, i.e.
// the number of final blocks it stands for (1 unless the state is a
// bisection inside recursive bipartitioning). With unit shares a block is
// balanced iff every entry is at most 1 + epsilon.
class PartitionState {
 public:
  PartitionState(const Hypergraph& hg, NormalizationContext ctx, std::size_t k,
                 std::vector<double> blockShare = {});
  PartitionState(const Hypergraph& hg, NormalizationContext ctx, std::size_t k,
                 std::span<const BlockId> assignment, std::vector<double> blockShare = {});

  // Replaces the whole assignment and recomputes every derived quantity.
  void assign(std::span<const BlockId> assignment);

  const Hypergraph& hypergraph() const { return *hg_; }
  const NormalizationContext& context() const { return ctx_; }
  std::size_t k() const { return k_; }
  std::size_t dimension() const { return hg_->dimension(); }

  BlockId block(VertexId v) const { return assignment_[v]; }
  const std::vector<BlockId>& assignment() const { return assignment_; }

  std::span<const double> blockWeight(BlockId b) const {
    return {block_weight_.data() + static_cast<std::size_t>(b) * dimension(), dimension()};
  }
  double blockWeight(BlockId b, std::size_t j) const {
    return block_weight_[static_cast<std::size_t>(b) * dimension() + j];
  }
  double blockShare(BlockId b) const { return block_share_[b]; }

  // Normalized weight of v, independent of any block.
  double vertexWeight(VertexId v, std::size_t j) const { return ctx_.normalized(*hg_, v, j); }
  // Contribution of v to the stored weight of block b.
  double vertexWeightIn(VertexId v, BlockId b, std::size_t j) const {
    return vertexWeight(v, j) / block_share_[b];
  }
  // L1 norm of the normalized weight of v.
  double vertexWeightL1(VertexId v) const;

  std::uint32_t pinCount(EdgeId e, BlockId b) const { return pin_count_.get(e, b); }
  std::uint32_t lambda(EdgeId e) const { return lambda_[e]; }
  double connectivity() const { return connectivity_; }

  MoveDelta applyMove(VertexId v, BlockId target);

  // True iff every block weight is at most 1 + epsilon in every dimension.
  bool isBalanced(double epsilon) const;
  bool isBlockOverloaded(BlockId b, double epsilon) const;
  std::vector<double> maxBlockWeight() const;

  std::vector<VertexId> members(BlockId b) const;

 private:
  const Hypergraph* hg_;
  NormalizationContext ctx_;
  std::size_t k_;
  std::vector<double> block_share_;
  std::vector<BlockId> assignment_;
  std::vector<double> block_weight_;
  PinCountTable pin_count_;
  std::vector<std::uint32_t> lambda_;
  double connectivity_ = 0.0;
};

}  // namespace mcpart
