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

#include "mcpart/io.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>

namespace mcpart {

namespace {

// Line reader that skips '%' comments and tracks line numbers for messages.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-comment line; false at end of input.
  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      const auto first = line.find_first_not_of(" \t");
      if (first != std::string::npos && line[first] == '%') continue;
      return true;
    }
    return false;
  }

  // Next line that is neither a comment nor blank.
  bool nextNonBlank(std::string& line) {
    while (next(line)) {
      if (line.find_first_not_of(" \t") != std::string::npos) return true;
    }
    return false;
  }

  std::size_t number() const { return number_; }

  [[noreturn]] void fail(const std::string& what) const {
    throw FormatError("line " + std::to_string(number_) + ": " + what);
  }

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::vector<std::int64_t> integers(const std::string& line, const LineReader& reader) {
  std::vector<std::int64_t> values;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line[pos] == ' ' || line[pos] == '\t') {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < line.size() && line[end] != ' ' && line[end] != '\t') ++end;
    std::int64_t value = 0;
    const char* first = line.data() + pos;
    const char* last = line.data() + end;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      reader.fail("expected an integer, got '" + std::string(first, last) + "'");
    }
    values.push_back(value);
    pos = end;
  }
  return values;
}

struct FormatFlags {
  bool edgeWeights = false;
  bool vertexWeights = false;
  std::size_t ncon = 1;
};

FormatFlags parseFormat(const std::vector<std::int64_t>& header, std::size_t countFields,
                        const LineReader& reader) {
  FormatFlags flags;
  if (header.size() < countFields || header.size() > countFields + 2) {
    reader.fail("malformed header");
  }
  if (header.size() > countFields) {
    const std::int64_t fmt = header[countFields];
    // Metis allows a leading vertex-size digit; it is not supported here.
    if (fmt != 0 && fmt != 1 && fmt != 10 && fmt != 11) {
      reader.fail("unsupported format code " + std::to_string(fmt));
    }
    flags.edgeWeights = fmt % 10 == 1;
    flags.vertexWeights = fmt / 10 == 1;
  }
  if (header.size() == countFields + 2) {
    if (!flags.vertexWeights) reader.fail("ncon given without vertex weights");
    if (header[countFields + 1] < 1) reader.fail("ncon must be at least 1");
    flags.ncon = static_cast<std::size_t>(header[countFields + 1]);
  }
  return flags;
}

std::ifstream openRead(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return in;
}

std::ofstream openWrite(const std::filesystem::path& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream out(path, mode);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

bool isIntegral(double x) { return std::isfinite(x) && x == std::floor(x); }

std::int64_t asInteger(double x, const char* what) {
  if (!isIntegral(x)) {
    throw std::invalid_argument(std::string("non-integral ") + what + " cannot be written");
  }
  return static_cast<std::int64_t>(x);
}

bool hasUnitVertexWeights(const Hypergraph& hg) {
  return hg.dimension() == 1 &&
         std::all_of(hg.flatWeights().begin(), hg.flatWeights().end(),
                     [](double w) { return w == 1.0; });
}

bool hasUnitEdgeWeights(const Hypergraph& hg) {
  return std::all_of(hg.edgeWeights().begin(), hg.edgeWeights().end(),
                     [](double w) { return w == 1.0; });
}

std::vector<double> readWeightLine(LineReader& reader, std::size_t ncon) {
  std::string line;
  if (!reader.next(line)) reader.fail("missing vertex weight line");
  const auto values = integers(line, reader);
  if (values.size() != ncon) {
    reader.fail("expected " + std::to_string(ncon) + " vertex weights");
  }
  std::vector<double> weights;
  for (std::int64_t w : values) {
    if (w < 0) reader.fail("negative vertex weight");
    weights.push_back(static_cast<double>(w));
  }
  return weights;
}

void expectEnd(LineReader& reader) {
  std::string line;
  if (reader.nextNonBlank(line)) reader.fail("unexpected trailing content");
}

}  // namespace

Hypergraph parseHypergraph(std::istream& in, std::vector<std::string>* warnings) {
  LineReader reader(in);
  std::string line;
  if (!reader.nextNonBlank(line)) throw FormatError("empty input");
  const auto header = integers(line, reader);
  const FormatFlags flags = parseFormat(header, 2, reader);
  if (header[0] < 0 || header[1] < 0) reader.fail("negative count in header");
  const auto m = static_cast<std::size_t>(header[0]);
  const auto n = static_cast<std::size_t>(header[1]);

  std::vector<std::vector<VertexId>> pins(m);
  std::vector<double> edge_weights(m, 1.0);
  for (std::size_t e = 0; e < m; ++e) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(m) + " hyperedges");
    auto values = integers(line, reader);
    std::size_t first = 0;
    if (flags.edgeWeights) {
      if (values.empty()) reader.fail("missing hyperedge weight");
      if (values[0] <= 0) reader.fail("hyperedge weight must be positive");
      edge_weights[e] = static_cast<double>(values[0]);
      first = 1;
    }
    if (values.size() == first) reader.fail("empty hyperedge");
    std::unordered_set<std::int64_t> seen;
    bool duplicate = false;
    for (std::size_t i = first; i < values.size(); ++i) {
      if (values[i] < 1 || static_cast<std::size_t>(values[i]) > n) {
        reader.fail("pin " + std::to_string(values[i]) + " out of range");
      }
      if (!seen.insert(values[i]).second) {
        duplicate = true;
        continue;
      }
      pins[e].push_back(static_cast<VertexId>(values[i] - 1));
    }
    if (duplicate && warnings != nullptr) {
      warnings->push_back("line " + std::to_string(reader.number()) +
                          ": duplicate pins removed from hyperedge " + std::to_string(e + 1));
    }
  }

  std::vector<double> weights;
  if (flags.vertexWeights) {
    weights.reserve(n * flags.ncon);
    for (std::size_t v = 0; v < n; ++v) {
      const auto w = readWeightLine(reader, flags.ncon);
      weights.insert(weights.end(), w.begin(), w.end());
    }
  } else {
    weights.assign(n, 1.0);
  }
  expectEnd(reader);
  return Hypergraph::fromFlat(n, flags.vertexWeights ? flags.ncon : 1, pins, std::move(weights),
                              std::move(edge_weights));
}

Hypergraph readHypergraph(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  auto in = openRead(path);
  return parseHypergraph(in, warnings);
}

void writeHypergraph(const Hypergraph& hg, std::ostream& out) {
  const bool edge_weights = !hasUnitEdgeWeights(hg);
  const bool vertex_weights = !hasUnitVertexWeights(hg);
  out << hg.numEdges() << ' ' << hg.numVertices();
  if (vertex_weights) {
    out << ' ' << (edge_weights ? 11 : 10) << ' ' << hg.dimension();
  } else if (edge_weights) {
    out << " 1";
  }
  out << '\n';
  for (EdgeId e = 0; e < hg.numEdges(); ++e) {
    bool first = true;
    if (edge_weights) {
      out << asInteger(hg.edgeWeight(e), "edge weight");
      first = false;
    }
    for (VertexId p : hg.pins(e)) {
      if (!first) out << ' ';
      out << p + 1;
      first = false;
    }
    out << '\n';
  }
  if (vertex_weights) {
    for (VertexId v = 0; v < hg.numVertices(); ++v) {
      for (std::size_t j = 0; j < hg.dimension(); ++j) {
        if (j > 0) out << ' ';
        out << asInteger(hg.weight(v, j), "vertex weight");
      }
      out << '\n';
    }
  }
}

void writeHypergraph(const Hypergraph& hg, const std::filesystem::path& path) {
  auto out = openWrite(path);
  writeHypergraph(hg, out);
  if (!out) throw IoError("write failed: " + path.string());
}

Hypergraph parseGraph(std::istream& in, std::vector<std::string>* warnings) {
  (void)warnings;
  LineReader reader(in);
  std::string line;
  if (!reader.nextNonBlank(line)) throw FormatError("empty input");
  const auto header = integers(line, reader);
  const FormatFlags flags = parseFormat(header, 2, reader);
  if (header[0] < 0 || header[1] < 0) reader.fail("negative count in header");
  const auto n = static_cast<std::size_t>(header[0]);
  const auto m = static_cast<std::size_t>(header[1]);

  struct Arc {
    VertexId target;
    std::int64_t weight;
  };
  std::vector<std::vector<Arc>> adjacency(n);
  std::vector<double> weights;
  weights.reserve(n * flags.ncon);
  const std::size_t stride = flags.edgeWeights ? 2 : 1;
  for (std::size_t v = 0; v < n; ++v) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(n) + " vertex lines");
    const auto values = integers(line, reader);
    std::size_t pos = 0;
    if (flags.vertexWeights) {
      if (values.size() < flags.ncon) reader.fail("missing vertex weights");
      for (std::size_t j = 0; j < flags.ncon; ++j) {
        if (values[j] < 0) reader.fail("negative vertex weight");
        weights.push_back(static_cast<double>(values[j]));
      }
      pos = flags.ncon;
    } else {
      weights.push_back(1.0);
    }
    if ((values.size() - pos) % stride != 0) reader.fail("neighbor without edge weight");
    for (; pos < values.size(); pos += stride) {
      const std::int64_t u = values[pos];
      if (u < 1 || static_cast<std::size_t>(u) > n) {
        reader.fail("neighbor " + std::to_string(u) + " out of range");
      }
      if (static_cast<std::size_t>(u - 1) == v) reader.fail("self-loop");
      const std::int64_t w = flags.edgeWeights ? values[pos + 1] : 1;
      if (w <= 0) reader.fail("edge weight must be positive");
      adjacency[v].push_back({static_cast<VertexId>(u - 1), w});
    }
  }
  expectEnd(reader);

  // Each arc needs exactly one reverse arc of the same weight.
  std::vector<std::vector<VertexId>> pins;
  std::vector<double> edge_weights;
  std::size_t arcs = 0;
  for (VertexId v = 0; v < n; ++v) {
    std::unordered_set<VertexId> seen;
    for (const Arc& a : adjacency[v]) {
      ++arcs;
      if (!seen.insert(a.target).second) {
        throw FormatError("vertex " + std::to_string(v + 1) + ": parallel edge to " +
                          std::to_string(a.target + 1));
      }
      const auto& back = adjacency[a.target];
      auto it = std::find_if(back.begin(), back.end(), [&](const Arc& b) { return b.target == v; });
      if (it == back.end()) {
        throw FormatError("asymmetric adjacency: " + std::to_string(v + 1) + " -> " +
                          std::to_string(a.target + 1) + " has no reverse entry");
      }
      if (it->weight != a.weight) {
        throw FormatError("edge " + std::to_string(v + 1) + "-" + std::to_string(a.target + 1) +
                          " has different weights in both directions");
      }
      if (v < a.target) {
        pins.push_back({v, a.target});
        edge_weights.push_back(static_cast<double>(a.weight));
      }
    }
  }
  if (arcs != 2 * m) {
    throw FormatError("header announces " + std::to_string(m) + " edges, found " +
                      std::to_string(arcs / 2));
  }
  return Hypergraph::fromFlat(n, flags.vertexWeights ? flags.ncon : 1, pins, std::move(weights),
                              std::move(edge_weights));
}

Hypergraph readGraph(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  auto in = openRead(path);
  return parseGraph(in, warnings);
}

void writeGraph(const Hypergraph& hg, std::ostream& out) {
  std::vector<std::vector<std::pair<VertexId, double>>> adjacency(hg.numVertices());
  for (EdgeId e = 0; e < hg.numEdges(); ++e) {
    if (hg.edgeSize(e) != 2) {
      throw std::invalid_argument("graph output needs hyperedges of size 2");
    }
    const VertexId a = hg.pins(e)[0];
    const VertexId b = hg.pins(e)[1];
    adjacency[a].push_back({b, hg.edgeWeight(e)});
    adjacency[b].push_back({a, hg.edgeWeight(e)});
  }
  const bool edge_weights = !hasUnitEdgeWeights(hg);
  const bool vertex_weights = !hasUnitVertexWeights(hg);
  out << hg.numVertices() << ' ' << hg.numEdges();
  if (vertex_weights) {
    out << ' ' << (edge_weights ? 11 : 10) << ' ' << hg.dimension();
  } else if (edge_weights) {
    out << " 1";
  }
  out << '\n';
  for (VertexId v = 0; v < hg.numVertices(); ++v) {
    bool first = true;
    auto put = [&](std::int64_t x) {
      if (!first) out << ' ';
      out << x;
      first = false;
    };
    if (vertex_weights) {
      for (std::size_t j = 0; j < hg.dimension(); ++j) put(asInteger(hg.weight(v, j), "vertex weight"));
    }
    for (const auto& [u, w] : adjacency[v]) {
      put(static_cast<std::int64_t>(u) + 1);
      if (edge_weights) put(asInteger(w, "edge weight"));
    }
    out << '\n';
  }
}

void writeGraph(const Hypergraph& hg, const std::filesystem::path& path) {
  auto out = openWrite(path);
  writeGraph(hg, out);
  if (!out) throw IoError("write failed: " + path.string());
}

Hypergraph readInstance(const std::filesystem::path& path, std::vector<std::string>* warnings) {
  const auto ext = path.extension().string();
  if (ext == ".graph" || ext == ".metis") return readGraph(path, warnings);
  return readHypergraph(path, warnings);
}

WeightSpec WeightSpec::parse(const std::string& text) {
  WeightSpec spec;
  bool have_base = false;
  bool have_random = false;
  std::stringstream parts(text);
  std::string part;
  auto bad = [&](const std::string& why) {
    throw std::invalid_argument("weight spec '" + text + "': " + why);
  };
  while (std::getline(parts, part, ',')) {
    if (part == "unit" || part == "degree" || part == "file" || part.starts_with("file:")) {
      if (have_base) bad("more than one base weighting");
      have_base = true;
      if (part == "unit") {
        spec.base = Base::kUnit;
      } else if (part == "degree") {
        spec.base = Base::kDegree;
      } else if (part == "file") {
        spec.base = Base::kFile;
      } else {
        spec.base = Base::kSidecar;
        spec.sidecar = part.substr(5);
        if (spec.sidecar.empty()) bad("empty sidecar path");
      }
    } else if (part.starts_with("rand:")) {
      if (have_random) bad("more than one rand component");
      have_random = true;
      long long dims = 0;
      long long lo = 0;
      long long hi = 0;
      char tail = 0;
      if (std::sscanf(part.c_str(), "rand:%lld:%lld:%lld%c", &dims, &lo, &hi, &tail) != 3) {
        bad("expected rand:D:LO:HI");
      }
      if (dims < 1 || lo < 0 || hi < lo) bad("need D >= 1 and 0 <= LO <= HI");
      spec.randomDimensions = static_cast<std::size_t>(dims);
      spec.randomLow = lo;
      spec.randomHigh = hi;
    } else {
      bad("unknown component '" + part + "'");
    }
  }
  if (!have_base && !have_random) bad("empty");
  if (!have_base) spec.base = Base::kDegree;
  return spec;
}

Hypergraph deriveWeights(const Hypergraph& hg, const WeightSpec& spec, std::uint64_t seed) {
  const std::size_t n = hg.numVertices();
  std::vector<std::vector<double>> columns;
  switch (spec.base) {
    case WeightSpec::Base::kFile:
      for (std::size_t j = 0; j < hg.dimension(); ++j) {
        std::vector<double> column(n);
        for (VertexId v = 0; v < n; ++v) column[v] = hg.weight(v, j);
        columns.push_back(std::move(column));
      }
      break;
    case WeightSpec::Base::kUnit:
      columns.emplace_back(n, 1.0);
      break;
    case WeightSpec::Base::kDegree: {
      columns.emplace_back(n, 1.0);
      std::vector<double> degree(n);
      for (VertexId v = 0; v < n; ++v) degree[v] = static_cast<double>(hg.degree(v));
      columns.push_back(std::move(degree));
      break;
    }
    case WeightSpec::Base::kSidecar: {
      auto in = openRead(spec.sidecar);
      LineReader reader(in);
      std::string line;
      std::vector<std::vector<std::int64_t>> rows;
      while (reader.next(line)) {
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        rows.push_back(integers(line, reader));
      }
      if (rows.size() != n) {
        throw FormatError(spec.sidecar.string() + ": expected " + std::to_string(n) +
                          " weight lines, found " + std::to_string(rows.size()));
      }
      const std::size_t d = rows.empty() ? 1 : rows[0].size();
      if (d == 0) throw FormatError(spec.sidecar.string() + ": empty weight line");
      columns.assign(d, std::vector<double>(n));
      for (VertexId v = 0; v < n; ++v) {
        if (rows[v].size() != d) {
          throw FormatError(spec.sidecar.string() + ": inconsistent number of weights");
        }
        for (std::size_t j = 0; j < d; ++j) {
          if (rows[v][j] < 0) throw FormatError(spec.sidecar.string() + ": negative weight");
          columns[j][v] = static_cast<double>(rows[v][j]);
        }
      }
      break;
    }
  }
  if (spec.randomDimensions > 0) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> draw(spec.randomLow, spec.randomHigh);
    for (std::size_t r = 0; r < spec.randomDimensions; ++r) {
      std::vector<double> column(n);
      for (VertexId v = 0; v < n; ++v) column[v] = static_cast<double>(draw(rng));
      columns.push_back(std::move(column));
    }
  }
  const std::size_t d = columns.size();
  std::vector<double> flat(n * d);
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < d; ++j) flat[v * d + j] = columns[j][v];
  }
  return hg.withWeights(d, std::move(flat));
}

void writePartition(std::span<const BlockId> assignment, const std::filesystem::path& path) {
  auto out = openWrite(path);
  for (BlockId b : assignment) out << b << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<BlockId> readPartition(const std::filesystem::path& path, std::size_t numVertices,
                                   std::size_t k) {
  auto in = openRead(path);
  LineReader reader(in);
  std::string line;
  std::vector<BlockId> assignment;
  assignment.reserve(numVertices);
  while (reader.next(line)) {
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const auto values = integers(line, reader);
    if (values.size() != 1) reader.fail("expected one block id");
    if (values[0] < 0 || static_cast<std::size_t>(values[0]) >= k) {
      reader.fail("block id " + std::to_string(values[0]) + " not below k=" + std::to_string(k));
    }
    assignment.push_back(static_cast<BlockId>(values[0]));
  }
  if (assignment.size() != numVertices) {
    throw FormatError(path.string() + ": " + std::to_string(assignment.size()) +
                      " block ids for " + std::to_string(numVertices) + " vertices");
  }
  return assignment;
}

const std::string& runRecordHeader() {
  static const std::string header =
      "algorithm,instance,k,seed,epsilon,d,connectivity,max_block_weight,balanced,time_total,"
      "time_coarsening,time_initial,time_refinement,time_rebalancing,rebalance_calls,"
      "greedy_rounds,fallback_calls";
  return header;
}

namespace {

std::string g6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

void checkField(const std::string& s, const char* name) {
  if (s.find_first_of(",\n\r\"") != std::string::npos) {
    throw std::invalid_argument(std::string(name) + " must not contain ',', quotes or newlines");
  }
}

double toDouble(const std::string& s) {
  std::size_t used = 0;
  double x = 0.0;
  try {
    x = std::stod(s, &used);
  } catch (const std::exception&) {
    throw FormatError("not a number: '" + s + "'");
  }
  if (used != s.size()) throw FormatError("not a number: '" + s + "'");
  return x;
}

std::uint64_t toUnsigned(const std::string& s) {
  std::uint64_t x = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw FormatError("not an unsigned integer: '" + s + "'");
  }
  return x;
}

}  // namespace

std::string formatRunRecord(const RunRecord& r) {
  checkField(r.algorithm, "algorithm");
  checkField(r.instance, "instance");
  std::string weights;
  for (std::size_t j = 0; j < r.maxBlockWeight.size(); ++j) {
    if (j > 0) weights += ';';
    weights += g6(r.maxBlockWeight[j]);
  }
  std::ostringstream row;
  row << r.algorithm << ',' << r.instance << ',' << r.k << ',' << r.seed << ',' << g6(r.epsilon)
      << ',' << r.d << ',' << g6(r.connectivity) << ',' << weights << ',' << (r.balanced ? 1 : 0)
      << ',' << g6(r.timeTotal) << ',' << g6(r.timeCoarsening) << ',' << g6(r.timeInitial) << ','
      << g6(r.timeRefinement) << ',' << g6(r.timeRebalancing) << ',' << r.rebalanceCalls << ','
      << r.greedyRounds << ',' << r.fallbackCalls;
  return row.str();
}

RunRecord parseRunRecord(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream in(line);
  std::string field;
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  if (fields.size() != 17) {
    throw FormatError("run record needs 17 fields, got " + std::to_string(fields.size()));
  }
  RunRecord r;
  r.algorithm = fields[0];
  r.instance = fields[1];
  r.k = toUnsigned(fields[2]);
  r.seed = toUnsigned(fields[3]);
  r.epsilon = toDouble(fields[4]);
  r.d = toUnsigned(fields[5]);
  r.connectivity = toDouble(fields[6]);
  std::stringstream weights(fields[7]);
  while (std::getline(weights, field, ';')) r.maxBlockWeight.push_back(toDouble(field));
  if (fields[8] != "0" && fields[8] != "1") throw FormatError("balanced must be 0 or 1");
  r.balanced = fields[8] == "1";
  r.timeTotal = toDouble(fields[9]);
  r.timeCoarsening = toDouble(fields[10]);
  r.timeInitial = toDouble(fields[11]);
  r.timeRefinement = toDouble(fields[12]);
  r.timeRebalancing = toDouble(fields[13]);
  r.rebalanceCalls = toUnsigned(fields[14]);
  r.greedyRounds = toUnsigned(fields[15]);
  r.fallbackCalls = toUnsigned(fields[16]);
  return r;
}

void appendRunRecord(const std::filesystem::path& path, const RunRecord& record) {
  std::error_code ec;
  const bool fresh = !std::filesystem::exists(path, ec) || std::filesystem::file_size(path, ec) == 0;
  const std::string row = formatRunRecord(record);
  auto out = openWrite(path, std::ios::out | std::ios::app);
  if (fresh) out << runRecordHeader() << '\n';
  out << row << '\n';
  if (!out) throw IoError("write failed: " + path.string());
}

std::vector<RunRecord> readRunRecords(const std::filesystem::path& path) {
  auto in = openRead(path);
  std::string line;
  std::vector<RunRecord> records;
  if (!std::getline(in, line)) return records;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != runRecordHeader()) throw FormatError(path.string() + ": unexpected CSV header");
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    records.push_back(parseRunRecord(line));
  }
  return records;
}

}  // namespace mcpart
