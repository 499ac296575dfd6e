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

#ifndef MUTFL_TOOLS_COMMANDS_H_
#define MUTFL_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mutfl::cli {

inline constexpr const char* kToolVersion = "0.1.0";

struct AnalyzeArgs {
  std::string program;
  std::string tests;
  std::string ops = "all";
  std::uint64_t step_limit = 100000;
  std::string out;
  int jobs = 0;
};

struct ObservationArgs {
  std::string observation;  // JSON file
  std::vector<std::string> failing;
  std::vector<std::string> passing;
  bool passing_given = false;
};

struct TrainFlags {
  std::size_t hidden = 50;
  int max_iter = 50;
  double learning_rate = 0.01;
  std::uint64_t seed = 0;
  std::string activation = "relu";
};

struct LocalizeArgs {
  std::string matrix;
  ObservationArgs obs;
  std::string model = "pm+";
  std::string scope = "f";
  double epsilon = 0.001;
  std::string model_file;
  std::size_t top_k = 0;
  std::string out;
  TrainFlags train;
};

struct TrainArgs {
  std::string matrix;
  ObservationArgs obs;
  std::string kind = "lr";
  std::string scope = "fp";
  TrainFlags train;
  std::string out;
};

struct SampleArgs {
  std::string matrix;
  std::optional<double> rate;
  std::optional<std::size_t> per_method;
  std::uint64_t seed = 0;
  std::string out;
};

struct EvaluateArgs {
  std::string matrix;
  std::string model = "pm+";
  std::string scope = "f";
  double epsilon = 0.001;
  std::optional<double> rate;
  std::optional<std::size_t> per_method;
  std::uint64_t seed = 0;
  int jobs = 0;
  std::string out;
};

// Each returns the process exit status. Library errors propagate as
// mutfl::Error and are mapped to statuses by the caller.
int RunAnalyze(const AnalyzeArgs& args);
int RunLocalize(const LocalizeArgs& args);
int RunTrain(const TrainArgs& args);
int RunSample(const SampleArgs& args);
int RunEvaluate(const EvaluateArgs& args);

}  // namespace mutfl::cli

#endif  // MUTFL_TOOLS_COMMANDS_H_
