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

#ifndef MUTFL_CLASSIFIER_H_
#define MUTFL_CLASSIFIER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mutfl/bayes_ranker.h"
#include "mutfl/kill_matrix.h"

namespace mutfl {

// One row per mutant: its kill row as 0-1 features (1 = the test fails on the
// mutant) labelled with the index of the mutant's method.
struct Dataset {
  std::vector<std::uint8_t> features;  // num_rows x num_features, row-major
  std::vector<std::size_t> labels;
  std::vector<MethodId> method_index;
  std::vector<TestId> test_index;

  std::size_t num_rows() const { return labels.size(); }
  std::size_t num_features() const { return test_index.size(); }
  std::size_t num_classes() const { return method_index.size(); }
};

// Throws kEmptyDataset when the matrix has no mutants or no tests.
Dataset BuildDataset(const KillMatrix& matrix);

enum class ClassifierKind { kLogisticRegression, kMlp };
enum class Activation { kRelu, kTanh, kLogistic };

std::string_view ClassifierKindName(ClassifierKind kind);
ClassifierKind ParseClassifierKind(std::string_view text);
std::string_view ActivationName(Activation activation);
Activation ParseActivation(std::string_view text);

struct TrainConfig {
  std::size_t hidden_size = 50;
  int max_iter = 50;
  double learning_rate = 0.01;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_eps = 1e-8;
  std::uint64_t seed = 0;
  Activation activation = Activation::kRelu;

  // Throws kInvalidConfig.
  void Validate() const;
};

// Parameters live in one flat vector.
//   LR:  [W (classes x features) | b (classes)]
//   MLP: [W1 (features x hidden) | b1 (hidden) |
//         W2 (hidden x classes)  | b2 (classes)]
struct ClassifierModel {
  ClassifierKind kind = ClassifierKind::kLogisticRegression;
  Activation activation = Activation::kRelu;
  std::size_t hidden_size = 0;
  std::vector<TestId> test_index;
  std::vector<MethodId> method_index;
  std::vector<double> params;

  TrainConfig config;
  std::vector<double> loss_curve;  // loss before each update, then final

  std::size_t num_features() const { return test_index.size(); }
  std::size_t num_classes() const { return method_index.size(); }
  std::size_t ExpectedParamCount() const;

  friend bool operator==(const ClassifierModel& a, const ClassifierModel& b) {
    return a.kind == b.kind && a.activation == b.activation &&
           a.hidden_size == b.hidden_size && a.test_index == b.test_index &&
           a.method_index == b.method_index && a.params == b.params &&
           a.loss_curve == b.loss_curve;
  }
};

// Untrained model with LR weights at zero or MLP weights drawn from
// U(-sqrt(6 / (fan_in + fan_out)), +...) seeded by config.seed. Biases zero.
ClassifierModel InitModel(const Dataset& data, ClassifierKind kind,
                          const TrainConfig& config);

// Mean softmax cross-entropy over the dataset.
double Loss(const ClassifierModel& model, const Dataset& data);
// Loss plus its gradient with respect to model.params.
double LossAndGradient(const ClassifierModel& model, const Dataset& data,
                       std::vector<double>& gradient);

// Full-batch Adam for config.max_iter steps.
ClassifierModel TrainLogisticRegression(const Dataset& data,
                                        const TrainConfig& config);
ClassifierModel TrainMlp(const Dataset& data, const TrainConfig& config);
ClassifierModel Train(const Dataset& data, ClassifierKind kind,
                      const TrainConfig& config);

// Softmax class probabilities keyed by method. Throws kShapeError when the
// vector length differs from the model's test index.
std::vector<double> PredictProbabilities(const ClassifierModel& model,
                                         std::span<const std::uint8_t> vector);
ScoreMap PredictScores(const ClassifierModel& model,
                       std::span<const std::uint8_t> vector);

// 1 where the test failed, 0 where it passed. kFailingPassing needs every
// indexed test classified by `obs`; kFailing needs the index to be exactly
// the failing set (the model was trained on a matrix restricted to it).
// Throws kInvalidObservation.
std::vector<std::uint8_t> BuildQueryVector(const FailureObservation& obs,
                                           const std::vector<TestId>& test_index,
                                           Scope scope);

std::string ModelToJson(const ClassifierModel& model);
ClassifierModel ModelFromJson(std::string_view text);

}  // namespace mutfl

#endif  // MUTFL_CLASSIFIER_H_
