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

#include "commands.h"

#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace mcpart::cli {

namespace {

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x + 0.0);  // no "-0"
  return buf;
}

std::string joined(std::span<const double> values) {
  std::string s;
  for (std::size_t j = 0; j < values.size(); ++j) {
    if (j > 0) s += ' ';
    s += num(values[j]);
  }
  return s;
}

LpMode parseLpMode(const std::string& mode) {
  if (mode == "constrained") return LpMode::kConstrained;
  if (mode == "unconstrained") return LpMode::kUnconstrained;
  throw std::invalid_argument("unknown lp mode '" + mode + "'");
}

RebalanceStrategy parseStrategy(const std::string& name) {
  if (name == "l1u") return RebalanceStrategy::kL1u;
  if (name == "baseline") return RebalanceStrategy::kBaseline;
  throw std::invalid_argument("unknown rebalancer '" + name + "'");
}

void validate(const CliConfig& config) {
  if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  if (config.k < 2) throw std::invalid_argument("k must be at least 2");
}

void requireInputs(const CliConfig& config, std::size_t count, const char* what) {
  if (config.inputs.size() != count) throw std::invalid_argument(std::string("expected ") + what);
}

template <typename F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

void printWarnings(const std::vector<std::string>& warnings, std::ostream& err) {
  for (const auto& w : warnings) err << "warning: " << w << '\n';
}

RunRecord makeRecord(const PartitionReport& report, const Hypergraph& hg,
                     const std::string& instance, std::size_t k, std::uint64_t seed,
                     const CliConfig& config) {
  RunRecord r;
  r.algorithm = config.algorithm;
  r.instance = instance;
  r.k = k;
  r.seed = seed;
  r.epsilon = config.epsilon;
  r.d = hg.dimension();
  r.connectivity = report.connectivity;
  r.maxBlockWeight = report.maxBlockWeight;
  r.balanced = report.balanced;
  r.timeTotal = report.timings.total;
  r.timeCoarsening = report.timings.coarsening;
  r.timeInitial = report.timings.initialPartitioning;
  r.timeRefinement = report.timings.refinement;
  r.timeRebalancing = report.timings.rebalancing;
  r.rebalanceCalls = report.rebalance.calls;
  r.greedyRounds = report.rebalance.greedyRounds;
  r.fallbackCalls = report.rebalance.fallbackCalls;
  return r;
}

}  // namespace

std::uint64_t seedFromEnvironment() {
  const char* value = std::getenv("MCPART_SEED");
  if (value == nullptr) return 0;
  std::uint64_t seed = 0;
  const char* end = value + std::char_traits<char>::length(value);
  auto [ptr, ec] = std::from_chars(value, end, seed);
  if (ec != std::errc() || ptr != end) return 0;
  return seed;
}

Hypergraph loadInstance(const std::filesystem::path& path, const std::string& weights,
                        std::uint64_t seed, std::vector<std::string>* warnings) {
  const WeightSpec spec = WeightSpec::parse(weights);
  Hypergraph hg = readInstance(path, warnings);
  if (spec.base == WeightSpec::Base::kFile && spec.randomDimensions == 0) return hg;
  return deriveWeights(hg, spec, seed);
}

PartitionConfig partitionConfig(const CliConfig& config) {
  PartitionConfig pc;
  pc.seed = config.seed;
  pc.threshold = config.t;
  pc.maxRounds = config.maxRounds;
  pc.fallbackEnabled = config.fallbackEnabled;
  pc.fallbackRating = FallbackRating::parse(config.fallbackRating);
  pc.strategy = parseStrategy(config.rebalancer);
  pc.initial.threshold = pc.threshold;
  pc.initial.fallbackEnabled = pc.fallbackEnabled;
  pc.initial.fallbackRating = pc.fallbackRating;
  pc.initial.strategy = pc.strategy;
  pc.refinement.lpMode = parseLpMode(config.lpMode);
  return pc;
}

RebalancerConfig rebalancerConfig(const Hypergraph& hg, const NormalizationContext& ctx,
                                  const CliConfig& config) {
  RebalancerConfig rc;
  if (config.uOverride) {
    if (config.uOverride->size() != hg.dimension()) {
      throw std::invalid_argument("--u-override needs " + std::to_string(hg.dimension()) +
                                  " values");
    }
    rc.bound = ImbalanceBound::fromOverride(*config.uOverride, config.epsilon);
  } else {
    rc.bound = makeBound(hg, ctx, config.epsilon, config.t);
  }
  rc.maxRounds = config.maxRounds;
  rc.fallbackEnabled = config.fallbackEnabled;
  rc.fallbackRating = FallbackRating::parse(config.fallbackRating);
  rc.unboundedRounds = config.unboundedRounds;
  rc.strategy = parseStrategy(config.rebalancer);
  rc.recordTrace = config.trace;
  return rc;
}

RebalanceOutcome rebalanceAssignment(const Hypergraph& hg, std::vector<BlockId> assignment,
                                     const CliConfig& config) {
  validate(config);
  const NormalizationContext ctx = normalize(hg, config.k);
  const RebalancerConfig rc = rebalancerConfig(hg, ctx, config);
  PartitionState state(hg, ctx, config.k, assignment);
  RebalanceOutcome outcome;
  outcome.result = rebalance(state, rc);
  outcome.assignment = state.assignment();
  outcome.evaluation = recomputeAll(hg, ctx, config.k, outcome.assignment, rc.bound.u);
  return outcome;
}

RunRecord runPartition(const Hypergraph& hg, const std::string& instance, std::size_t k,
                       std::uint64_t seed, const CliConfig& config,
                       std::vector<BlockId>* assignment) {
  PartitionConfig pc = partitionConfig(config);
  pc.seed = seed;
  PartitionResult result = partition(hg, k, config.epsilon, pc);
  RunRecord r = makeRecord(result.report, hg, instance, k, seed, config);
  if (assignment != nullptr) *assignment = std::move(result.assignment);
  return r;
}

int cmdPartition(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    requireInputs(config, 1, "one hypergraph file");
    std::vector<std::string> warnings;
    const Hypergraph hg = loadInstance(config.inputs[0], config.weights, config.seed, &warnings);
    printWarnings(warnings, err);

    PartitionConfig pc = partitionConfig(config);
    const PartitionResult result = partition(hg, config.k, config.epsilon, pc);
    const PartitionReport& report = result.report;
    printWarnings(report.warnings, err);

    std::vector<double> imbalance;
    for (double w : report.maxBlockWeight) imbalance.push_back(w - 1.0);
    out << "vertices: " << hg.numVertices() << "\n";
    out << "hyperedges: " << hg.numEdges() << "\n";
    out << "dimensions: " << hg.dimension() << "\n";
    out << "k: " << config.k << "\n";
    out << "epsilon: " << num(config.epsilon) << "\n";
    out << "connectivity: " << num(report.connectivity) << "\n";
    out << "max_block_weight: " << joined(report.maxBlockWeight) << "\n";
    out << "imbalance: " << joined(imbalance) << "\n";
    out << "balanced: " << (report.balanced ? "yes" : "no") << "\n";
    out << "levels: " << report.levels << "\n";
    out << "rebalance_calls: " << report.rebalance.calls << "\n";
    out << "greedy_rounds: " << report.rebalance.greedyRounds << "\n";
    out << "fallback_calls: " << report.rebalance.fallbackCalls << "\n";
    if (config.printTimings) {
      out << "time_coarsening: " << num(report.timings.coarsening) << "\n";
      out << "time_initial: " << num(report.timings.initialPartitioning) << "\n";
      out << "time_refinement: " << num(report.timings.refinement) << "\n";
      out << "time_rebalancing: " << num(report.timings.rebalancing) << "\n";
      out << "time_total: " << num(report.timings.total) << "\n";
    }

    if (!config.out.empty()) writePartition(result.assignment, config.out);
    if (!config.csv.empty()) {
      const RunRecord r = makeRecord(report, hg, config.inputs[0].filename().string(),
                                     config.k, config.seed, config);
      appendRunRecord(config.csv, r);
    }
    return report.balanced ? kExitOk : kExitInfeasible;
  });
}

int cmdEvaluate(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    requireInputs(config, 2, "a hypergraph file and a partition file");
    std::vector<std::string> warnings;
    const Hypergraph hg = loadInstance(config.inputs[0], config.weights, config.seed, &warnings);
    printWarnings(warnings, err);
    const auto assignment = readPartition(config.inputs[1], hg.numVertices(), config.k);
    const NormalizationContext ctx = normalize(hg, config.k);
    const RebalancerConfig rc = rebalancerConfig(hg, ctx, config);
    const Evaluation eval = recomputeAll(hg, ctx, config.k, assignment, rc.bound.u);
    const bool balanced = eval.balanced(config.epsilon);

    out << "connectivity: " << num(eval.connectivity) << "\n";
    for (BlockId b = 0; b < config.k; ++b) {
      out << "block " << b << ": " << joined(eval.blockWeight[b]) << "\n";
    }
    out << "max_block_weight: " << joined(eval.maxBlockWeight) << "\n";
    out << "u: " << joined(rc.bound.u) << "\n";
    out << "l1u: " << num(eval.l1uTotal) << "\n";
    out << "balanced: " << (balanced ? "yes" : "no") << "\n";
    return balanced ? kExitOk : kExitInfeasible;
  });
}

int cmdRebalance(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    requireInputs(config, 2, "a hypergraph file and a partition file");
    std::vector<std::string> warnings;
    const Hypergraph hg = loadInstance(config.inputs[0], config.weights, config.seed, &warnings);
    printWarnings(warnings, err);
    auto assignment = readPartition(config.inputs[1], hg.numVertices(), config.k);
    const RebalanceOutcome outcome = rebalanceAssignment(hg, std::move(assignment), config);
    const RebalanceResult& result = outcome.result;

    if (config.trace) {
      std::size_t fallback = 0;
      for (std::size_t i = 0; i < result.rounds.size(); ++i) {
        const RoundResult& round = result.rounds[i];
        out << "round " << i + 1 << ": l1u " << num(round.imbalanceBefore) << " -> "
            << num(round.imbalanceAfter) << (round.stalled ? " (stalled)" : "") << "\n";
        for (const LoggedMove& m : round.moves) {
          out << "  move v" << m.vertex << " " << m.from << " -> " << m.to << " balance_gain "
              << num(m.balanceGain) << " connectivity_gain " << num(m.connectivityGain) << "\n";
        }
        if (round.stalled && fallback < result.fallbacks.size()) {
          for (const BlockFallbackPlan& plan : result.fallbacks[fallback].blocks) {
            out << "  fallback block " << plan.block << " dimension " << plan.heaviestDimension
                << ":";
            for (std::size_t s = 0; s < plan.ranked.size(); ++s) {
              const ScoredVertex& sv = plan.ranked[s];
              out << " v" << sv.vertex << "->" << sv.target << "(" << num(sv.score)
                  << (s < plan.selected ? ",moved" : "") << ")";
            }
            out << "\n";
          }
          ++fallback;
        }
      }
    }
    out << "status: " << toString(result.status) << "\n";
    out << "greedy_rounds: " << result.greedyRounds << "\n";
    out << "fallback_calls: " << result.fallbackCalls << "\n";
    out << "moves: " << result.movesApplied << "\n";
    out << "l1u: " << num(result.finalImbalance) << "\n";
    out << "connectivity: " << num(outcome.evaluation.connectivity) << "\n";
    out << "max_block_weight: " << joined(outcome.evaluation.maxBlockWeight) << "\n";
    if (!config.out.empty()) writePartition(outcome.assignment, config.out);
    return result.status == RebalanceStatus::kBalanced ? kExitOk : kExitInfeasible;
  });
}

int cmdBench(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!(config.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (config.inputs.empty()) throw std::invalid_argument("expected instance files");
    if (config.seeds == 0) throw std::invalid_argument("seeds must be at least 1");
    for (std::size_t k : config.kList) {
      if (k < 2) throw std::invalid_argument("k must be at least 2");
    }
    std::vector<RunRecord> records;
    std::size_t excluded = 0;
    for (const auto& path : config.inputs) {
      std::vector<std::string> warnings;
      const Hypergraph hg = loadInstance(path, config.weights, config.seed, &warnings);
      printWarnings(warnings, err);
      const std::string name = path.filename().string();
      for (std::size_t k : config.kList) {
        if (hasHeavyVertex(hg, k, config.heavyThreshold)) {
          err << "note: skipping " << name << " k=" << k << " (heavy vertex)\n";
          ++excluded;
          continue;
        }
        for (std::size_t s = 0; s < config.seeds; ++s) {
          RunRecord r = runPartition(hg, name, k, config.seed + s, config);
          if (!config.csv.empty()) appendRunRecord(config.csv, r);
          records.push_back(std::move(r));
        }
      }
    }
    const auto summaries = summarize(aggregateRuns(records));
    out << "algorithm,instances,excluded,geomean_connectivity,geomean_time,balanced_fraction\n";
    for (const AlgorithmSummary& s : summaries) {
      out << s.algorithm << ',' << s.instances << ',' << excluded << ','
          << num(s.geoMeanConnectivity) << ','
          << (config.printTimings ? num(s.geoMeanTime) : std::string("-")) << ','
          << num(s.balancedFraction) << "\n";
    }
    return kExitOk;
  });
}

int cmdProfileData(const CliConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.inputs.empty()) throw std::invalid_argument("expected run CSV files");
    std::vector<RunRecord> records;
    for (const auto& path : config.inputs) {
      auto part = readRunRecords(path);
      records.insert(records.end(), part.begin(), part.end());
    }
    const auto points = performanceProfile(aggregateRuns(records), config.taus);
    if (config.out.empty()) {
      writeProfileTable(points, out);
    } else {
      std::ofstream file(config.out);
      if (!file) throw IoError("cannot write " + config.out.string());
      writeProfileTable(points, file);
    }
    return kExitOk;
  });
}

}  // namespace mcpart::cli
