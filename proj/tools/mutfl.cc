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

#include <iostream>

#include "CLI11.hpp"
#include "commands.h"
#include "mutfl/error.h"

namespace {

using mutfl::ErrorCode;
using namespace mutfl::cli;

// 1 for anything wrong with what the user handed us, 2 when the inputs are
// well formed but the analysis cannot proceed.
int ExitStatusFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFormatError:
    case ErrorCode::kInvalidConfig:
    case ErrorCode::kSyntaxError:
    case ErrorCode::kUnresolvedName:
    case ErrorCode::kIoError:
      return 1;
    default:
      return 2;
  }
}

void AddObservationFlags(CLI::App* cmd, ObservationArgs& obs) {
  auto* file = cmd->add_option("--observation", obs.observation,
                               "JSON file with \"failing\" and \"passing\"");
  auto* failing = cmd->add_option("--failing", obs.failing, "failing test ids")
                      ->delimiter(',');
  auto* passing = cmd->add_option("--passing", obs.passing, "passing test ids")
                      ->delimiter(',');
  file->excludes(failing)->excludes(passing);
  passing->needs(failing);
}

void AddTrainFlags(CLI::App* cmd, TrainFlags& flags) {
  cmd->add_option("--hidden", flags.hidden, "MLP hidden units")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-iter", flags.max_iter, "optimizer iterations")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--lr", flags.learning_rate, "Adam learning rate")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", flags.seed, "initialisation seed");
  cmd->add_option("--activation", flags.activation, "relu|tanh|logistic");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mutation-based fault localisation"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* a = app.add_subcommand("analyze", "mutate a toy program and build its kill matrix");
  a->add_option("--program", analyze.program)->required();
  a->add_option("--tests", analyze.tests)->required();
  a->add_option("--ops", analyze.ops, "comma separated operator tags or 'all'");
  a->add_option("--step-limit", analyze.step_limit)->check(CLI::PositiveNumber);
  a->add_option("--out", analyze.out, ".csv or .json")->required();
  a->add_option("--jobs", analyze.jobs, "threads, 0 = runtime default")
      ->check(CLI::NonNegativeNumber);

  LocalizeArgs localize;
  auto* l = app.add_subcommand("localize", "rank methods for an observed failure");
  l->add_option("--matrix", localize.matrix)->required();
  AddObservationFlags(l, localize.obs);
  l->add_option("--model", localize.model, "em|pm*|pm+|lr|mlp");
  l->add_option("--scope", localize.scope, "f|fp");
  l->add_option("--epsilon", localize.epsilon)->check(CLI::PositiveNumber);
  l->add_option("--model-file", localize.model_file, "trained lr/mlp model");
  l->add_option("--top-k", localize.top_k, "0 = all");
  l->add_option("--out", localize.out, "ranking as .csv or .json");
  AddTrainFlags(l, localize.train);

  TrainArgs train;
  auto* t = app.add_subcommand("train", "fit a classifier on a kill matrix");
  t->add_option("--matrix", train.matrix)->required();
  t->add_option("--kind", train.kind, "lr|mlp");
  t->add_option("--scope", train.scope, "f|fp");
  AddObservationFlags(t, train.obs);
  AddTrainFlags(t, train.train);
  t->add_option("--out", train.out)->required();

  SampleArgs sample;
  auto* s = app.add_subcommand("sample", "subsample the mutants of a kill matrix");
  s->add_option("--matrix", sample.matrix)->required();
  auto* s_rate = s->add_option("--rate", sample.rate)->check(CLI::Range(0.0, 1.0));
  auto* s_per = s->add_option("--per-method", sample.per_method)
                    ->check(CLI::PositiveNumber);
  s_rate->excludes(s_per);
  s->add_option("--seed", sample.seed);
  s->add_option("--out", sample.out)->required();

  EvaluateArgs evaluate;
  auto* e = app.add_subcommand("evaluate", "planted-fault evaluation of a model");
  e->add_option("--matrix", evaluate.matrix)->required();
  e->add_option("--model", evaluate.model, "em|pm*|pm+");
  e->add_option("--scope", evaluate.scope, "f|fp");
  e->add_option("--epsilon", evaluate.epsilon)->check(CLI::PositiveNumber);
  auto* e_rate = e->add_option("--rate", evaluate.rate)->check(CLI::Range(0.0, 1.0));
  auto* e_per = e->add_option("--per-method", evaluate.per_method)
                    ->check(CLI::PositiveNumber);
  e_rate->excludes(e_per);
  e->add_option("--seed", evaluate.seed);
  e->add_option("--jobs", evaluate.jobs)->check(CLI::NonNegativeNumber);
  e->add_option("--out", evaluate.out, "report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help, --version
    std::cerr << "mutfl: " << err.what() << "\n\n";
    const auto parsed = app.get_subcommands();
    std::cerr << (parsed.empty() ? app.help() : parsed.back()->help());
    return 1;
  }

  localize.obs.passing_given = l->count("--passing") > 0;
  train.obs.passing_given = t->count("--passing") > 0;

  try {
    if (*a) return RunAnalyze(analyze);
    if (*l) return RunLocalize(localize);
    if (*t) return RunTrain(train);
    if (*s) return RunSample(sample);
    if (*e) return RunEvaluate(evaluate);
  } catch (const mutfl::Error& err) {
    std::cerr << "mutfl: " << err.what() << "\n";
    return ExitStatusFor(err.code());
  } catch (const std::exception& err) {
    std::cerr << "mutfl: " << err.what() << "\n";
    return 2;
  }
  return 1;
}
