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

#include "mcpart/harness.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <set>
#include <stdexcept>

namespace mcpart {

double geometricMean(std::span<const double> values, double floor) {
  if (values.empty()) return 0.0;
  double log_sum = 0.0;
  for (double x : values) log_sum += std::log(std::max(x, floor));
  return std::exp(log_sum / static_cast<double>(values.size()));
}

bool hasHeavyVertex(const Hypergraph& hg, std::size_t k, double threshold) {
  const NormalizationContext ctx = normalize(hg, k);
  const auto heaviest = maxNormalizedWeight(hg, ctx);
  return std::any_of(heaviest.begin(), heaviest.end(), [&](double w) { return w > threshold; });
}

AggregatedRuns aggregateRuns(std::span<const RunRecord> records) {
  struct Sum {
    std::size_t seeds = 0;
    double connectivity = 0.0;
    double time = 0.0;
    bool balanced = false;
  };
  std::map<std::string, std::map<InstanceKey, Sum>> sums;
  for (const RunRecord& r : records) {
    Sum& s = sums[r.algorithm][InstanceKey{r.instance, r.k}];
    ++s.seeds;
    s.connectivity += r.connectivity;
    s.time += r.timeTotal;
    s.balanced = s.balanced || r.balanced;
  }
  AggregatedRuns runs;
  for (const auto& [algorithm, per_key] : sums) {
    auto& list = runs[algorithm];
    for (const auto& [key, s] : per_key) {
      const double n = static_cast<double>(s.seeds);
      list.push_back({key, s.seeds, s.connectivity / n, s.time / n, s.balanced});
    }
  }
  return runs;
}

std::vector<AlgorithmSummary> summarize(const AggregatedRuns& runs) {
  std::vector<AlgorithmSummary> summaries;
  for (const auto& [algorithm, results] : runs) {
    std::vector<double> connectivity;
    std::vector<double> time;
    std::size_t balanced = 0;
    for (const InstanceResult& r : results) {
      connectivity.push_back(r.meanConnectivity);
      time.push_back(r.meanTime);
      balanced += r.balanced ? 1 : 0;
    }
    AlgorithmSummary s;
    s.algorithm = algorithm;
    s.instances = results.size();
    s.geoMeanConnectivity = geometricMean(connectivity);
    // Times are far below one second at desk scale; do not clamp them.
    s.geoMeanTime = geometricMean(time, 1e-9);
    s.balancedFraction =
        results.empty() ? 0.0 : static_cast<double>(balanced) / static_cast<double>(results.size());
    summaries.push_back(std::move(s));
  }
  return summaries;
}

std::vector<double> defaultTauGrid() {
  return {1.0, 1.01, 1.02, 1.05, 1.1, 1.2, 1.5, 2.0, 5.0, 10.0, 100.0};
}

std::vector<ProfilePoint> performanceProfile(const AggregatedRuns& runs,
                                             std::span<const double> taus) {
  std::vector<ProfilePoint> points;
  if (runs.empty()) return points;
  const auto& reference = runs.begin()->second;
  std::set<InstanceKey> keys;
  for (const auto& r : reference) keys.insert(r.key);
  for (const auto& [algorithm, results] : runs) {
    std::set<InstanceKey> own;
    for (const auto& r : results) own.insert(r.key);
    if (own != keys) {
      throw std::invalid_argument("algorithm '" + algorithm +
                                  "' does not cover the same instances as the others");
    }
  }

  std::map<InstanceKey, double> best;
  for (const auto& [algorithm, results] : runs) {
    for (const auto& r : results) {
      if (!r.balanced) continue;
      auto [it, inserted] = best.emplace(r.key, r.meanConnectivity);
      if (!inserted) it->second = std::min(it->second, r.meanConnectivity);
    }
  }

  const double total = static_cast<double>(keys.size());
  for (const auto& [algorithm, results] : runs) {
    std::size_t infeasible = 0;
    for (const auto& r : results) infeasible += r.balanced ? 0 : 1;
    for (double tau : taus) {
      std::size_t within = 0;
      for (const auto& r : results) {
        if (!r.balanced) continue;
        const double limit = tau * best.at(r.key);
        // Relative slack so that tau * best is not lost to rounding.
        if (r.meanConnectivity <= limit * (1.0 + 1e-12)) ++within;
      }
      points.push_back({algorithm, tau, total > 0 ? static_cast<double>(within) / total : 0.0,
                        total > 0 ? static_cast<double>(infeasible) / total : 0.0});
    }
  }
  return points;
}

void writeProfileTable(std::span<const ProfilePoint> points, std::ostream& out) {
  out << "algorithm,tau,fraction,infeasible_fraction\n";
  char buf[128];
  for (const ProfilePoint& p : points) {
    std::snprintf(buf, sizeof buf, ",%.6g,%.6g,%.6g\n", p.tau, p.fraction, p.infeasibleFraction);
    out << p.algorithm << buf;
  }
}

}  // namespace mcpart
