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

// Acceptance runner: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include "cli_runner.h"
#include "gradient_check.h"
#include "mutfl/bayes_ranker.h"
#include "mutfl/classifier.h"
#include "mutfl/matrix_io.h"
#include "mutfl/metrics.h"
#include "mutfl/planted_fault.h"
#include "mutfl/sampling.h"
#include "mutfl/toy/mutator.h"
#include "mutfl/toy/parser.h"
#include "oracle.h"
#include "test_support.h"

namespace mutfl {
namespace {

namespace fs = std::filesystem;
using testing::DataPath;
using testing::Obs;

// Collects failed checks for one criterion.
class Check {
 public:
  void That(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void Note(const std::string& text) { notes_.push_back(text); }
  bool ok() const { return failures_.empty(); }
  std::string Summary() const {
    std::ostringstream out;
    for (const auto& f : failures_) out << "\n    failed: " << f;
    for (const auto& n : notes_) out << "\n    " << n;
    return out.str();
  }

 private:
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

std::string Fmt(const char* format, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), format, a, b, c);
  return buf;
}

struct Criterion {
  std::string name;
  double budget_seconds;
  std::function<void(Check&)> body;
};

void GoldenWorkedExample(Check& c) {
  const KillMatrix k = testing::WorkedExample();
  const auto obs = Obs({"t1", "t4"}, {"t2", "t3"});
  const RankerConfig cfg;
  auto score = [&](ModelFamily f, Scope s) { return Score(k, obs, {f, s}, cfg); };
  const auto pm_plus_f = score(ModelFamily::kPartialMatchSum, Scope::kFailing);
  c.That(pm_plus_f.at("getType") == 5 && pm_plus_f.at("resolveType") == 4, "PM+/F 5 vs 4");
  const auto pm_plus_fp = score(ModelFamily::kPartialMatchSum, Scope::kFailingPassing);
  c.That(pm_plus_fp.at("getType") == 11 && pm_plus_fp.at("resolveType") == 9,
         "PM+/FP 11 vs 9");
  const auto pm_star_f = score(ModelFamily::kPartialMatchProduct, Scope::kFailing);
  // (1 + eps)(4 + eps) and (2 + eps)^2 with eps = 0.001.
  c.That(std::abs(pm_star_f.at("getType") - 4.005001) < 1e-9,
         Fmt("PM*/F getType %.9f vs 4.005001", pm_star_f.at("getType")));
  c.That(std::abs(pm_star_f.at("resolveType") - 4.004001) < 1e-9,
         Fmt("PM*/F resolveType %.9f vs 4.004001", pm_star_f.at("resolveType")));
  c.Note(Fmt("PM*/F getType = %.9f, resolveType = %.9f", pm_star_f.at("getType"),
             pm_star_f.at("resolveType")));
  for (auto scope : {Scope::kFailing, Scope::kFailingPassing}) {
    const auto em = score(ModelFamily::kExactMatch, scope);
    c.That(em.at("getType") == 1 && em.at("resolveType") == 1, "EM 1 vs 1");
    const Ranking r = Localize(k, obs, {ModelFamily::kExactMatch, scope}, cfg);
    c.That(r.size() == 2 && r[0].rank == 2 && r[1].rank == 2, "EM tie at rank 2");
  }
}

void OracleEquivalence(Check& c) {
  std::mt19937_64 gen(500);
  const RankerConfig cfg;
  int mismatches = 0;
  for (int round = 0; round < 500; ++round) {
    const KillMatrix k = testing::RandomMatrix(gen);
    const auto obs = testing::RandomObservation(gen, k);
    for (auto scope : {Scope::kFailing, Scope::kFailingPassing}) {
      const bool fp = scope == Scope::kFailingPassing;
      const auto em = ScoreExactMatch(k, obs, scope);
      const auto sum = ScorePartialMatchSum(k, obs, scope);
      const auto prod = ScorePartialMatchProduct(k, obs, scope, cfg);
      const auto o_em =
          oracle::Score(k, obs.failing, *obs.passing, fp, oracle::Family::kEm, cfg.epsilon);
      const auto o_sum = oracle::Score(k, obs.failing, *obs.passing, fp,
                                       oracle::Family::kPmPlus, cfg.epsilon);
      const auto o_prod = oracle::Score(k, obs.failing, *obs.passing, fp,
                                        oracle::Family::kPmStar, cfg.epsilon);
      for (const auto& [e, v] : o_em) {
        if (em.at(e) != v || sum.at(e) != o_sum.at(e) ||
            std::abs(prod.at(e) - o_prod.at(e)) > 1e-12 * o_prod.at(e)) {
          ++mismatches;
        }
      }
    }
  }
  c.That(mismatches == 0, std::to_string(mismatches) + " score mismatches");
}

void GradientChecks(Check& c) {
  std::mt19937_64 gen(50);
  for (auto kind : {ClassifierKind::kLogisticRegression, ClassifierKind::kMlp}) {
    int done = 0, skipped = 0;
    double worst = 0;
    while (done < 50) {
      const auto r = testing::CheckGradient(gen, kind, Activation::kRelu);
      if (r.skipped) {
        ++skipped;
        continue;
      }
      worst = std::max(worst, r.max_relative_error);
      ++done;
    }
    const std::string name(ClassifierKindName(kind));
    c.That(worst < 1e-5, name + Fmt(" max relative error %.3g", worst));
    c.Note(name + Fmt(": 50 instances, worst relative error %.3g, %g redrawn near a kink",
                      worst, skipped));
  }
}

void ClassifierSanity(Check& c) {
  const Dataset sep = testing::SeparableDataset();
  const double lr_acc =
      testing::TrainingAccuracy(TrainLogisticRegression(sep, {}), sep);
  c.That(lr_acc == 1.0, Fmt("LR separable accuracy %.3f", lr_acc));
  const Dataset xor_set = testing::XorDataset();
  TrainConfig xor_cfg;
  xor_cfg.hidden_size = 8;
  xor_cfg.max_iter = 500;
  const double mlp_acc = testing::TrainingAccuracy(TrainMlp(xor_set, xor_cfg), xor_set);
  c.That(mlp_acc == 1.0, Fmt("MLP XOR accuracy %.3f", mlp_acc));

  std::mt19937_64 gen(49);
  double worst = 0;
  for (int round = 0; round < 100; ++round) {
    const Dataset d = testing::RandomDataset(gen, 8, 6, 16);
    TrainConfig cfg;
    cfg.hidden_size = 1 + round % 7;
    cfg.seed = round;
    cfg.activation = static_cast<Activation>(round % 3);
    for (auto kind : {ClassifierKind::kLogisticRegression, ClassifierKind::kMlp}) {
      const auto model = Train(d, kind, cfg);
      for (int q = 0; q < 8; ++q) {
        std::vector<std::uint8_t> query(d.num_features());
        for (auto& b : query) b = gen() & 1;
        double sum = 0;
        for (const auto& [e, p] : PredictScores(model, query)) sum += p;
        worst = std::max(worst, std::abs(sum - 1.0));
      }
    }
  }
  c.That(worst <= 1e-9, Fmt("probability sum off by %.3g", worst));
  const KillMatrix k = testing::WorkedExample();
  const auto lr = TrainLogisticRegression(BuildDataset(k), {});
  const std::vector<std::uint8_t> q = {0, 1, 0, 1};
  const auto s = PredictScores(lr, q);
  c.That(s.at("getType") > s.at("resolveType"), "LR worked example query (0,1,0,1) -> getType");
}

void MetricsSuite(Check& c) {
  Ranking ladder;
  for (int i = 1; i <= 6; ++i) ladder.push_back({"r" + std::to_string(i), 6.0 - i, i});
  c.That(AveragePrecision(ladder, {"f", {"r2", "r4"}}) == 0.5, "AP ranks {2,4} = 0.5");
  c.That(AveragePrecision(ladder, {"f", {"r1"}}) == 1.0, "AP rank 1 = 1");
  c.That(AveragePrecision(ladder, {"f", {"x", "y"}}) == 0.0, "AP unretrieved = 0");
  const Ranking tied = {{"a", 3, 2}, {"b", 3, 2}, {"c", 1, 3}};
  c.That(BestRank(tied, {"f", {"a"}}) == 2, "tie best rank 2");
  c.That(Wef(tied, {"f", {"b"}}) == 1, "tie wef 1");
  c.That(Wef(ladder, {"f", {"r1"}}) == 0, "wef rank 1 = 0");
  c.That(Wef(ladder, {"f", {"none"}}) == 6, "wef unretrieved = size");
  c.That(BestRank(ladder, {"f", {"r5", "r3"}}) == 3, "best rank of {r5,r3}");
  const std::vector<std::optional<int>> ranks = {1, 7, 3};
  c.That(AccAtN(ranks, 5) == 2, "acc@5 of [1,7,3] = 2");
  std::mt19937_64 gen(1);
  for (int round = 0; round < 200; ++round) {
    std::vector<std::optional<int>> rs;
    for (int i = 0; i < 20; ++i) {
      const int v = static_cast<int>(gen() % 15);
      rs.push_back(v == 0 ? std::nullopt : std::optional<int>(v));
    }
    int prev = -1;
    for (int n = 1; n <= 12; ++n) {
      const int a = AccAtN(rs, n);
      c.That(a >= prev, "acc@n monotone");
      prev = a;
    }
  }
  const EvalReport r = PlantedFaultEval(testing::WorkedExample(),
                                        {ModelFamily::kPartialMatchSum, Scope::kFailing}, {});
  c.That(r.acc1 <= r.acc3 && r.acc3 <= r.acc5 && r.acc5 <= r.acc10,
         "harness acc@n monotone");
  c.That(r.faults.front().best_rank == 1 && r.faults.front().wef == 0,
         "planted m1 ranks getType first");
}

void SamplingProperties(Check& c) {
  const KillMatrix example = testing::WorkedExample();
  const KillMatrix demo = LoadMatrix(DataPath("demo/demo_matrix.csv"));
  for (const KillMatrix* k : {&example, &demo}) {
    c.That(SampleUniform(*k, 1.0, 7) == *k, "rate 1.0 identity");
    std::size_t largest = 0;
    for (const auto& e : k->methods()) largest = std::max(largest, MutantsOf(*k, e).size());
    c.That(SampleStratified(*k, largest, 7) == *k, "N >= max stratum identity");
    c.That(WriteMatrixCsv(SampleUniform(*k, 0.3, 11)) ==
               WriteMatrixCsv(SampleUniform(*k, 0.3, 11)),
           "fixed seed reproduces uniform sample");
    c.That(WriteMatrixCsv(SampleStratified(*k, 2, 11)) ==
               WriteMatrixCsv(SampleStratified(*k, 2, 11)),
           "fixed seed reproduces stratified sample");
  }

  const ModelSpec spec{ModelFamily::kPartialMatchSum, Scope::kFailing};
  const double full = PlantedFaultEval(demo, spec, {}).acc1;
  const std::vector<double> rates = {0.1, 0.3, 0.5, 0.7, 1.0};
  std::vector<double> means, sds;
  for (double rate : rates) {
    std::vector<double> acc;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      PlantedFaultOptions opts;
      opts.sample = SamplePlan{SamplePlan::Kind::kUniform, rate, 1, seed};
      acc.push_back(PlantedFaultEval(demo, spec, {}, opts).acc1);
    }
    double mean = 0;
    for (double a : acc) mean += a;
    mean /= acc.size();
    double ss = 0;
    for (double a : acc) ss += (a - mean) * (a - mean);
    means.push_back(mean);
    sds.push_back(std::sqrt(ss / (acc.size() - 1)));
    c.Note(Fmt("rate %.1f: mean acc@1 %.2f (sd %.2f)", rate, mean, sds.back()));
  }
  c.Note(Fmt("full matrix acc@1 %.0f", full));
  c.That(means[0] >= 0.5 * full, Fmt("rate 0.1 mean %.2f < half of full %.0f", means[0], full));
  for (std::size_t i = 0; i + 1 < rates.size(); ++i) {
    const double slack = std::max(sds[i], sds[i + 1]);
    c.That(means[i + 1] >= means[i] - slack,
           Fmt("curve drops from rate %.1f to %.1f beyond one sd", rates[i], rates[i + 1]));
  }
}

void EndToEnd(Check& c) {
  const fs::path dir = fs::temp_directory_path() / "mutfl_acceptance";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const KillMatrix golden = LoadMatrix(DataPath("demo/demo_matrix.csv"));
  c.That(golden.num_methods() >= 10, "demo has >= 10 functions");
  c.That(golden.num_tests() >= 30, "demo has >= 30 tests");
  std::set<std::string> ops;
  for (const auto& m : golden.mutants()) ops.insert(m.op);
  c.That(ops.size() == 8, "demo exercises all 8 operators");

  const auto out = (dir / "demo.csv").string();
  auto r = testing::RunCli("analyze --program " + DataPath("demo/demo.toy") + " --tests " +
                               DataPath("demo/demo.toytest") + " --out " + out,
                           dir);
  c.That(r.status == 0, "analyze exit status " + std::to_string(r.status));
  c.That(testing::Slurp(out) == testing::Slurp(DataPath("demo/demo_matrix.csv")),
         "analyze reproduces golden matrix");
  std::string first_report;
  for (int run = 0; run < 2; ++run) {
    const auto report = (dir / ("report" + std::to_string(run) + ".json")).string();
    r = testing::RunCli("evaluate --matrix " + out + " --model pm+ --scope f --out " + report,
                        dir);
    c.That(r.status == 0, "evaluate exit status " + std::to_string(r.status));
    const std::string text = testing::Slurp(report);
    if (run == 0) {
      first_report = text;
      std::string table = r.out;
      while (!table.empty() && table.back() == '\n') table.pop_back();
      c.Note(table.substr(table.find('\n') + 1));
    } else {
      c.That(text == first_report && !text.empty(), "evaluate report deterministic");
    }
  }
  fs::remove_all(dir);
}

void OperatorSuite(Check& c) {
  using toy::MutationOperator;
  struct Case {
    const char* source;
    MutationOperator op;
    std::size_t expected;
  };
  const std::vector<Case> cases = {
      {"fn f(a,b){ return a + b; }", MutationOperator::kAor, 4},
      {"fn f(a,b){ return a < b; }", MutationOperator::kRor, 5},
      {"fn f(a,b){ return a & b; }", MutationOperator::kLor, 2},
      {"fn f(a,b){ return a << b; }", MutationOperator::kSor, 1},
      {"fn f(x,y){ return x || y; }", MutationOperator::kCor, 5},
      {"fn f(a){ return -a; }", MutationOperator::kOru, 2},
      {"fn f(){ return true; }", MutationOperator::kLvr, 1},
      {"fn f(){ return 7; }", MutationOperator::kLvr, 4},
      {"fn f(a){ let x = a; x = 2; return x; }", MutationOperator::kStd, 2},
  };
  for (const auto& cs : cases) {
    const auto n = toy::GenerateMutants(toy::Parse(cs.source), {cs.op}).size();
    c.That(n == cs.expected, std::string(toy::OperatorTag(cs.op)) + " on `" + cs.source +
                                 "`: " + std::to_string(n));
  }
  bool right_operand = false;
  for (const auto& m : toy::GenerateMutants(toy::Parse("fn f(x,y){ return x || y; }"),
                                            {MutationOperator::kCor})) {
    right_operand |= m.Description() == "x || y ↦ y";
  }
  c.That(right_operand, "COR right-operand mutant for x || y");
}

}  // namespace
}  // namespace mutfl

int main() {
  using mutfl::Criterion;
  const std::vector<Criterion> criteria = {
      {"worked example golden suite", 1, mutfl::GoldenWorkedExample},
      {"Oracle equivalence (500 random matrices)", 30, mutfl::OracleEquivalence},
      {"Gradient checks (LR and MLP, 50 instances each)", 30, mutfl::GradientChecks},
      {"Classifier sanity", 60, mutfl::ClassifierSanity},
      {"Metrics unit suite", 10, mutfl::MetricsSuite},
      {"Sampling properties and rate curve", 180, mutfl::SamplingProperties},
      {"End-to-end analyze + evaluate", 120, mutfl::EndToEnd},
      {"Mutation-engine operator suite", 5, mutfl::OperatorSuite},
  };
  int failed = 0;
  for (const auto& crit : criteria) {
    mutfl::Check check;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.body(check);
    } catch (const std::exception& e) {
      check.That(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    check.That(seconds < crit.budget_seconds,
               mutfl::Fmt("runtime %.2fs over budget %.0fs", seconds, crit.budget_seconds));
    if (!check.ok()) ++failed;
    std::printf("[%s] %s (%.2fs, budget %.0fs)%s\n", check.ok() ? "PASS" : "FAIL",
                crit.name.c_str(), seconds, crit.budget_seconds, check.Summary().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
