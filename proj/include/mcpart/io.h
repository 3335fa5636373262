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
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcpart/hypergraph.h"

namespace mcpart {

// Malformed input file.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A file could not be opened or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// hMetis-style hypergraph file, extended with multi-dimensional weights:
//   m n [fmt [ncon]]        fmt in {0, 1, 10, 11}; ncon only with fmt 10/11
//   m edge lines: [omega] pin...   (pins 1-indexed, omega with fmt 1/11)
//   n weight lines of ncon integers (fmt 10/11)
// Lines starting with '%' are comments. Duplicate pins are dropped with a
// warning.
Hypergraph parseHypergraph(std::istream& in, std::vector<std::string>* warnings = nullptr);
Hypergraph readHypergraph(const std::filesystem::path& path,
                          std::vector<std::string>* warnings = nullptr);
// Requires integral weights; throws std::invalid_argument otherwise.
void writeHypergraph(const Hypergraph& hg, std::ostream& out);
void writeHypergraph(const Hypergraph& hg, const std::filesystem::path& path);

// Metis graph file with ncon vertex weights; every undirected edge becomes a
// 2-pin hyperedge, created when its smaller endpoint is read.
//   n m [fmt [ncon]]        fmt in {0, 1, 10, 11} (also 3-digit 000..011)
//   n vertex lines: [ncon weights] (neighbor [edge weight])...
Hypergraph parseGraph(std::istream& in, std::vector<std::string>* warnings = nullptr);
Hypergraph readGraph(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr);
// Requires every hyperedge to have exactly two pins and no parallel edges.
void writeGraph(const Hypergraph& hg, std::ostream& out);
void writeGraph(const Hypergraph& hg, const std::filesystem::path& path);

// Picks the reader by extension: .graph / .metis -> graph, anything else ->
// hypergraph.
Hypergraph readInstance(const std::filesystem::path& path,
                        std::vector<std::string>* warnings = nullptr);

// Vertex weight selection for benchmark runs:
//   unit          one unit-weight dimension
//   degree        unit weights plus vertex degree (two dimensions)
//   file          the weights stored in the instance file
//   file:PATH     weights from a sidecar file, n lines of integers
//   rand:D:LO:HI  D extra dimensions of uniform integers in [LO, HI]
// Components can be joined with ',' (e.g. "degree,rand:3:1:100"). A lone rand
// component extends the degree weighting.
struct WeightSpec {
  enum class Base { kFile, kUnit, kDegree, kSidecar };
  Base base = Base::kFile;
  std::filesystem::path sidecar;
  std::size_t randomDimensions = 0;
  std::int64_t randomLow = 1;
  std::int64_t randomHigh = 100;

  static WeightSpec parse(const std::string& text);
};

Hypergraph deriveWeights(const Hypergraph& hg, const WeightSpec& spec, std::uint64_t seed);

// One 0-indexed block id per line, in vertex order.
void writePartition(std::span<const BlockId> assignment, const std::filesystem::path& path);
std::vector<BlockId> readPartition(const std::filesystem::path& path, std::size_t numVertices,
                                   std::size_t k);

struct RunRecord {
  std::string algorithm;
  std::string instance;
  std::size_t k = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  std::size_t d = 0;
  double connectivity = 0.0;
  std::vector<double> maxBlockWeight;
  bool balanced = false;
  double timeTotal = 0.0;
  double timeCoarsening = 0.0;
  double timeInitial = 0.0;
  double timeRefinement = 0.0;
  double timeRebalancing = 0.0;
  std::size_t rebalanceCalls = 0;
  std::size_t greedyRounds = 0;
  std::size_t fallbackCalls = 0;
};

// Column header of the run CSV.
const std::string& runRecordHeader();
std::string formatRunRecord(const RunRecord& record);
RunRecord parseRunRecord(const std::string& line);

// Appends one row, writing the header first if the file is new or empty.
void appendRunRecord(const std::filesystem::path& path, const RunRecord& record);
std::vector<RunRecord> readRunRecords(const std::filesystem::path& path);

}  // namespace mcpart
