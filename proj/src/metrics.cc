// Copyright 2026 The mutfl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mutfl/metrics.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>

#include "json.hpp"

namespace mutfl {

namespace {

std::vector<int> FaultyRanks(const Ranking& ranking, const FaultSpec& fault) {
  std::vector<int> ranks;
  for (const auto& entry : ranking) {
    if (fault.faulty_methods.contains(entry.method)) ranks.push_back(entry.rank);
  }
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

}  // namespace

std::optional<int> BestRank(const Ranking& ranking, const FaultSpec& fault) {
  auto ranks = FaultyRanks(ranking, fault);
  if (ranks.empty()) return std::nullopt;
  return ranks.front();
}

int AccAtN(std::span<const std::optional<int>> best_ranks, int n) {
  return static_cast<int>(std::count_if(
      best_ranks.begin(), best_ranks.end(),
      [n](const std::optional<int>& r) { return r && *r <= n; }));
}

int Wef(const Ranking& ranking, const FaultSpec& fault) {
  auto best = BestRank(ranking, fault);
  return best ? *best - 1 : static_cast<int>(ranking.size());
}

double AveragePrecision(const Ranking& ranking, const FaultSpec& fault) {
  if (fault.faulty_methods.empty()) return 0.0;
  auto ranks = FaultyRanks(ranking, fault);
  double sum = 0.0;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    sum += static_cast<double>(i + 1) / static_cast<double>(ranks[i]);
  }
  return sum / static_cast<double>(fault.faulty_methods.size());
}

double MeanAveragePrecision(std::span<const double> average_precisions) {
  if (average_precisions.empty()) return 0.0;
  return std::accumulate(average_precisions.begin(), average_precisions.end(),
                         0.0) /
         static_cast<double>(average_precisions.size());
}

void Summarize(EvalReport& report) {
  std::vector<std::optional<int>> best;
  std::vector<double> wefs;
  std::vector<double> aps;
  for (const auto& f : report.faults) {
    best.push_back(f.best_rank);
    wefs.push_back(static_cast<double>(f.wef));
    aps.push_back(f.average_precision);
  }
  report.acc1 = AccAtN(best, 1);
  report.acc3 = AccAtN(best, 3);
  report.acc5 = AccAtN(best, 5);
  report.acc10 = AccAtN(best, 10);
  report.map = MeanAveragePrecision(aps);
  report.wef_median = report.wef_mean = report.wef_std = 0.0;
  if (wefs.empty()) return;
  const double n = static_cast<double>(wefs.size());
  report.wef_mean = std::accumulate(wefs.begin(), wefs.end(), 0.0) / n;
  std::vector<double> sorted = wefs;
  std::sort(sorted.begin(), sorted.end());
  const std::size_t mid = sorted.size() / 2;
  report.wef_median = sorted.size() % 2 == 1
                          ? sorted[mid]
                          : 0.5 * (sorted[mid - 1] + sorted[mid]);
  if (wefs.size() > 1) {
    double ss = 0.0;
    for (double w : wefs) ss += (w - report.wef_mean) * (w - report.wef_mean);
    report.wef_std = std::sqrt(ss / (n - 1.0));
  }
}

std::string ReportToJson(const EvalReport& report) {
  using nlohmann::json;
  json faults = json::array();
  for (const auto& f : report.faults) {
    faults.push_back({{"fault", f.fault_id},
                      {"methods", f.faulty_methods},
                      {"best_rank", f.best_rank ? json(*f.best_rank) : json()},
                      {"wef", f.wef},
                      {"average_precision", f.average_precision}});
  }
  json doc = {{"model", report.model},
              {"methods_ranked", report.num_methods},
              {"faults_evaluated", report.faults.size()},
              {"faults_skipped", report.skipped},
              {"acc",
               {{"1", report.acc1},
                {"3", report.acc3},
                {"5", report.acc5},
                {"10", report.acc10}}},
              {"wef",
               {{"median", report.wef_median},
                {"mean", report.wef_mean},
                {"std", report.wef_std}}},
              {"map", report.map},
              {"faults", faults}};
  return doc.dump(2) + "\n";
}

std::string ReportToTable(const EvalReport& report) {
  char buf[512];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-8s %-12s %5s %5s %5s %6s %8s %9s %9s %7s\n",
                "Model", "Studied", "@1", "@3", "@5", "@10", "wef.med",
                "wef.mean", "wef.std", "MAP");
  out += buf;
  const std::string studied =
      std::to_string(report.faults.size()) + " (" +
      std::to_string(report.faults.size() + report.skipped) + ")";
  std::snprintf(buf, sizeof(buf),
                "%-8s %-12s %5d %5d %5d %6d %8.1f %9.2f %9.2f %7.4f\n",
                report.model.c_str(), studied.c_str(), report.acc1, report.acc3,
                report.acc5, report.acc10, report.wef_median, report.wef_mean,
                report.wef_std, report.map);
  out += buf;
  return out;
}

}  // namespace mutfl
