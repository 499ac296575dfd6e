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

#include "commands.h"

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "json.hpp"
#include "mutfl/bayes_ranker.h"
#include "mutfl/classifier.h"
#include "mutfl/error.h"
#include "mutfl/matrix_io.h"
#include "mutfl/planted_fault.h"
#include "mutfl/sampling.h"
#include "mutfl/toy/kill_builder.h"
#include "mutfl/toy/parser.h"

namespace mutfl::cli {

namespace {

using json = nlohmann::json;
namespace fs = std::filesystem;

json Manifest(std::string_view subcommand, json inputs, json config) {
  return {{"tool", "mutfl"},
          {"version", kToolVersion},
          {"subcommand", subcommand},
          {"inputs", std::move(inputs)},
          {"config", std::move(config)}};
}

bool IsJsonPath(const std::string& path) {
  return fs::path(path).extension() == ".json";
}

// CSV artifacts cannot carry extra fields, so their manifest goes next to
// them as "<file>.manifest.json".
void WriteSidecarManifest(const std::string& out, const json& manifest) {
  WriteTextFile(out + ".manifest.json", manifest.dump(2) + "\n");
}

void SaveMatrixWithManifest(const KillMatrix& matrix, const std::string& out,
                            const json& manifest) {
  if (IsJsonPath(out)) {
    json doc = json::parse(WriteMatrixJson(matrix));
    doc["manifest"] = manifest;
    WriteTextFile(out, doc.dump(2) + "\n");
  } else {
    SaveMatrix(matrix, out, MatrixFormat::kCsv);
    WriteSidecarManifest(out, manifest);
  }
}

FailureObservation ResolveObservation(const ObservationArgs& args) {
  if (!args.observation.empty()) return LoadObservation(args.observation);
  FailureObservation obs;
  obs.failing.insert(args.failing.begin(), args.failing.end());
  if (args.passing_given) {
    obs.passing = std::set<TestId>(args.passing.begin(), args.passing.end());
  }
  return obs;
}

bool HasObservation(const ObservationArgs& args) {
  return !args.observation.empty() || !args.failing.empty();
}

json ObservationJson(const FailureObservation& obs) {
  return json::parse(WriteObservationJson(obs));
}

TrainConfig ToTrainConfig(const TrainFlags& flags) {
  TrainConfig cfg;
  cfg.hidden_size = flags.hidden;
  cfg.max_iter = flags.max_iter;
  cfg.learning_rate = flags.learning_rate;
  cfg.seed = flags.seed;
  cfg.activation = ParseActivation(flags.activation);
  return cfg;
}

json TrainConfigJson(const TrainConfig& cfg) {
  return {{"hidden_size", cfg.hidden_size},
          {"max_iter", cfg.max_iter},
          {"learning_rate", cfg.learning_rate},
          {"seed", cfg.seed},
          {"activation", ActivationName(cfg.activation)}};
}

std::string FormatScore(double score) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", score);
  return buf;
}

// Columns a classifier for `scope` is trained on: the failing tests for F,
// every observed test for F+P. Both in matrix order.
std::vector<TestId> TrainingColumns(const KillMatrix& matrix,
                                    const FailureObservation& obs, Scope scope) {
  std::vector<TestId> cols;
  for (const auto& t : matrix.tests()) {
    const bool failing = obs.failing.contains(t);
    const bool passing = obs.passing && obs.passing->contains(t);
    if (failing || (scope == Scope::kFailingPassing && passing)) {
      cols.push_back(t);
    }
  }
  for (const auto& t : obs.failing) {
    if (!matrix.FindTest(t)) {
      throw Error(ErrorCode::kNotFound, "unknown test '" + t + "'");
    }
  }
  return cols;
}

std::optional<SamplePlan> ToPlan(const std::optional<double>& rate,
                                 const std::optional<std::size_t>& per_method,
                                 std::uint64_t seed) {
  if (rate && per_method) {
    throw Error(ErrorCode::kInvalidConfig,
                "--rate and --per-method are mutually exclusive");
  }
  if (rate) return SamplePlan{SamplePlan::Kind::kUniform, *rate, 1, seed};
  if (per_method) {
    return SamplePlan{SamplePlan::Kind::kStratified, 1.0, *per_method, seed};
  }
  return std::nullopt;
}

json PlanJson(const std::optional<SamplePlan>& plan) {
  if (!plan) return nullptr;
  if (plan->kind == SamplePlan::Kind::kUniform) {
    return {{"kind", "uniform"}, {"rate", plan->rate}, {"seed", plan->seed}};
  }
  return {{"kind", "stratified"},
          {"per_method", plan->n_per_method},
          {"seed", plan->seed}};
}

}  // namespace

int RunAnalyze(const AnalyzeArgs& args) {
  const toy::Program program = toy::Parse(ReadTextFile(args.program));
  const auto tests = toy::ParseTests(ReadTextFile(args.tests), program);
  const auto ops = toy::ParseOperatorList(args.ops);
  const auto mutants = toy::GenerateMutants(program, ops);
  const KillMatrix matrix =
      toy::BuildKillMatrix(program, tests, mutants, args.step_limit, args.jobs);

  std::vector<std::string> op_tags;
  for (auto op : ops) op_tags.emplace_back(toy::OperatorTag(op));
  const json manifest =
      Manifest("analyze", {{"program", args.program}, {"tests", args.tests}},
               {{"ops", op_tags}, {"step_limit", args.step_limit}});
  SaveMatrixWithManifest(matrix, args.out, manifest);

  std::size_t killed = 0;
  for (std::size_t m = 0; m < matrix.num_mutants(); ++m) {
    auto row = matrix.row(m);
    if (std::find(row.begin(), row.end(), 1) != row.end()) ++killed;
  }
  std::cout << matrix.num_mutants() << " mutants x " << matrix.num_tests()
            << " tests over " << matrix.num_methods() << " methods; " << killed
            << " killed; written to " << args.out << "\n";
  return 0;
}

int RunLocalize(const LocalizeArgs& args) {
  const KillMatrix matrix = LoadMatrix(args.matrix);
  const FailureObservation obs = ResolveObservation(args.obs);
  const Scope scope = ParseScope(args.scope);
  const bool classifier = args.model == "lr" || args.model == "mlp";

  Ranking ranking;
  std::string model_name;
  json config;
  if (classifier) {
    const ClassifierKind kind = ParseClassifierKind(args.model);
    ClassifierModel model;
    if (!args.model_file.empty()) {
      model = ModelFromJson(ReadTextFile(args.model_file));
      if (model.kind != kind) {
        throw Error(ErrorCode::kInvalidConfig,
                    "model file holds a different classifier kind");
      }
      config["model_file"] = args.model_file;
    } else {
      obs.Validate();
      if (scope == Scope::kFailingPassing && !obs.passing) {
        throw Error(ErrorCode::kInvalidObservation,
                    "F+P scope requires a passing test set");
      }
      const TrainConfig cfg = ToTrainConfig(args.train);
      const KillMatrix restricted =
          Restrict(matrix, TrainingColumns(matrix, obs, scope));
      model = Train(BuildDataset(restricted), kind, cfg);
      config["train"] = TrainConfigJson(cfg);
    }
    const auto query = BuildQueryVector(obs, model.test_index, scope);
    ranking = Rank(PredictScores(model, query));
    model_name = std::string(args.model == "lr" ? "LR" : "MLP") +
                 (scope == Scope::kFailing ? "(F)" : "(F+P)");
  } else {
    const ModelSpec spec{ParseModelFamily(args.model), scope};
    const RankerConfig rc{args.epsilon};
    ranking = Localize(matrix, obs, spec, rc);
    model_name = ModelName(spec);
    config["epsilon"] = args.epsilon;
  }
  if (args.top_k > 0 && ranking.size() > args.top_k) ranking.resize(args.top_k);

  config["model"] = model_name;
  const json manifest = Manifest(
      "localize", {{"matrix", args.matrix}, {"observation", ObservationJson(obs)}},
      config);

  std::string csv = "rank,method,score\n";
  for (const auto& r : ranking) {
    csv += std::to_string(r.rank) + "," + r.method + "," + FormatScore(r.score) +
           "\n";
  }
  std::cout << csv;
  if (!args.out.empty()) {
    if (IsJsonPath(args.out)) {
      json rows = json::array();
      for (const auto& r : ranking) {
        rows.push_back({{"rank", r.rank}, {"method", r.method}, {"score", r.score}});
      }
      json doc = {{"model", model_name}, {"ranking", rows}, {"manifest", manifest}};
      WriteTextFile(args.out, doc.dump(2) + "\n");
    } else {
      WriteTextFile(args.out, csv);
      WriteSidecarManifest(args.out, manifest);
    }
  }
  return 0;
}

int RunTrain(const TrainArgs& args) {
  const KillMatrix matrix = LoadMatrix(args.matrix);
  const Scope scope = ParseScope(args.scope);
  const ClassifierKind kind = ParseClassifierKind(args.kind);
  const TrainConfig cfg = ToTrainConfig(args.train);
  KillMatrix training = matrix;
  json inputs = {{"matrix", args.matrix}};
  if (scope == Scope::kFailing) {
    if (!HasObservation(args.obs)) {
      throw Error(ErrorCode::kInvalidObservation,
                  "F-scope training needs the observed failing tests");
    }
    const FailureObservation obs = ResolveObservation(args.obs);
    obs.Validate();
    training = Restrict(matrix, TrainingColumns(matrix, obs, scope));
    inputs["observation"] = ObservationJson(obs);
  }
  const ClassifierModel model = Train(BuildDataset(training), kind, cfg);
  json doc = json::parse(ModelToJson(model));
  doc["manifest"] =
      Manifest("train", inputs,
               {{"kind", ClassifierKindName(kind)},
                {"scope", scope == Scope::kFailing ? "F" : "F+P"},
                {"train", TrainConfigJson(cfg)}});
  WriteTextFile(args.out, doc.dump(2) + "\n");
  std::cout << "trained " << ClassifierKindName(kind) << " on "
            << training.num_mutants() << " mutants x " << training.num_tests()
            << " tests; loss " << model.loss_curve.front() << " -> "
            << model.loss_curve.back() << "\n";
  return 0;
}

int RunSample(const SampleArgs& args) {
  const auto plan = ToPlan(args.rate, args.per_method, args.seed);
  if (!plan) {
    throw Error(ErrorCode::kInvalidConfig, "one of --rate or --per-method is required");
  }
  const KillMatrix matrix = LoadMatrix(args.matrix);
  const KillMatrix sampled = Sample(matrix, *plan);
  SaveMatrixWithManifest(sampled, args.out,
                         Manifest("sample", {{"matrix", args.matrix}},
                                  {{"plan", PlanJson(plan)}}));
  std::cout << "kept " << sampled.num_mutants() << " of " << matrix.num_mutants()
            << " mutants; written to " << args.out << "\n";
  return 0;
}

int RunEvaluate(const EvaluateArgs& args) {
  const KillMatrix matrix = LoadMatrix(args.matrix);
  const ModelSpec spec{ParseModelFamily(args.model), ParseScope(args.scope)};
  PlantedFaultOptions options;
  options.sample = ToPlan(args.rate, args.per_method, args.seed);
  options.jobs = args.jobs;
  const EvalReport report =
      PlantedFaultEval(matrix, spec, RankerConfig{args.epsilon}, options);
  std::cout << ReportToTable(report);
  if (!args.out.empty()) {
    json doc = json::parse(ReportToJson(report));
    doc["manifest"] =
        Manifest("evaluate", {{"matrix", args.matrix}},
                 {{"model", ModelName(spec)},
                  {"epsilon", args.epsilon},
                  {"seed", args.seed},
                  {"sample", PlanJson(options.sample)}});
    WriteTextFile(args.out, doc.dump(2) + "\n");
  }
  return 0;
}

}  // namespace mutfl::cli
