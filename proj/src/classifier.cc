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

#include "mutfl/classifier.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>

#include "json.hpp"
#include "mutfl/error.h"
#include "mutfl/rng.h"

namespace mutfl {

namespace {

using json = nlohmann::json;

constexpr int kModelFormatVersion = 1;

std::string Lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(c));
  return out;
}

double Activate(Activation a, double z) {
  switch (a) {
    case Activation::kRelu:
      return z > 0.0 ? z : 0.0;
    case Activation::kTanh:
      return std::tanh(z);
    case Activation::kLogistic:
      return 1.0 / (1.0 + std::exp(-z));
  }
  return z;
}

// Derivative expressed through the pre-activation z and output h.
double ActivateDerivative(Activation a, double z, double h) {
  switch (a) {
    case Activation::kRelu:
      return z > 0.0 ? 1.0 : 0.0;
    case Activation::kTanh:
      return 1.0 - h * h;
    case Activation::kLogistic:
      return h * (1.0 - h);
  }
  return 1.0;
}

// In-place softmax; returns log of the normaliser relative to the max.
void Softmax(std::span<double> logits) {
  const double max = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double& v : logits) {
    v = std::exp(v - max);
    sum += v;
  }
  for (double& v : logits) v /= sum;
}

double LogSoftmaxAt(std::span<const double> logits, std::size_t label) {
  const double max = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double v : logits) sum += std::exp(v - max);
  return logits[label] - max - std::log(sum);
}

struct Layout {
  std::size_t w1 = 0, b1 = 0, w2 = 0, b2 = 0;
};

Layout LayoutOf(const ClassifierModel& model) {
  const std::size_t f = model.num_features();
  const std::size_t c = model.num_classes();
  Layout l;
  if (model.kind == ClassifierKind::kLogisticRegression) {
    l.w1 = 0;
    l.b1 = f * c;
  } else {
    const std::size_t h = model.hidden_size;
    l.w1 = 0;
    l.b1 = f * h;
    l.w2 = l.b1 + h;
    l.b2 = l.w2 + h * c;
  }
  return l;
}

void CheckCompatible(const ClassifierModel& model, const Dataset& data) {
  if (data.num_features() != model.num_features() ||
      data.num_classes() != model.num_classes()) {
    throw Error(ErrorCode::kShapeError, "dataset does not match model shape");
  }
  if (model.params.size() != model.ExpectedParamCount()) {
    throw Error(ErrorCode::kShapeError, "parameter count does not match shape");
  }
}

// Computes logits for one row. `hidden_pre`/`hidden` receive the MLP hidden
// layer (unused for LR).
void Forward(const ClassifierModel& model, const Layout& l,
             const std::uint8_t* x, std::vector<double>& hidden_pre,
             std::vector<double>& hidden, std::vector<double>& logits) {
  const std::size_t f = model.num_features();
  const std::size_t c = model.num_classes();
  const double* p = model.params.data();
  logits.assign(c, 0.0);
  if (model.kind == ClassifierKind::kLogisticRegression) {
    for (std::size_t k = 0; k < c; ++k) {
      double z = p[l.b1 + k];
      const double* w = p + l.w1 + k * f;
      for (std::size_t j = 0; j < f; ++j) {
        if (x[j]) z += w[j];
      }
      logits[k] = z;
    }
    return;
  }
  const std::size_t h = model.hidden_size;
  hidden_pre.assign(p + l.b1, p + l.b1 + h);
  for (std::size_t j = 0; j < f; ++j) {
    if (!x[j]) continue;
    const double* w = p + l.w1 + j * h;
    for (std::size_t u = 0; u < h; ++u) hidden_pre[u] += w[u];
  }
  hidden.resize(h);
  for (std::size_t u = 0; u < h; ++u) {
    hidden[u] = Activate(model.activation, hidden_pre[u]);
  }
  for (std::size_t k = 0; k < c; ++k) logits[k] = p[l.b2 + k];
  for (std::size_t u = 0; u < h; ++u) {
    const double* w = p + l.w2 + u * c;
    for (std::size_t k = 0; k < c; ++k) logits[k] += hidden[u] * w[k];
  }
}

ClassifierModel Fit(const Dataset& data, ClassifierKind kind,
                    const TrainConfig& config) {
  config.Validate();
  if (data.num_rows() == 0 || data.num_features() == 0) {
    throw Error(ErrorCode::kEmptyDataset, "dataset has no rows or no features");
  }
  if (data.num_classes() == 0) {
    throw Error(ErrorCode::kEmptyDataset, "dataset has no classes");
  }
  ClassifierModel model = InitModel(data, kind, config);
  const std::size_t n = model.params.size();
  std::vector<double> m(n, 0.0), v(n, 0.0), grad(n, 0.0);
  double beta1_t = 1.0;
  double beta2_t = 1.0;
  for (int it = 0; it < config.max_iter; ++it) {
    model.loss_curve.push_back(LossAndGradient(model, data, grad));
    beta1_t *= config.adam_beta1;
    beta2_t *= config.adam_beta2;
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = config.adam_beta1 * m[i] + (1.0 - config.adam_beta1) * grad[i];
      v[i] = config.adam_beta2 * v[i] +
             (1.0 - config.adam_beta2) * grad[i] * grad[i];
      const double m_hat = m[i] / (1.0 - beta1_t);
      const double v_hat = v[i] / (1.0 - beta2_t);
      model.params[i] -=
          config.learning_rate * m_hat / (std::sqrt(v_hat) + config.adam_eps);
    }
  }
  model.loss_curve.push_back(Loss(model, data));
  return model;
}

}  // namespace

Dataset BuildDataset(const KillMatrix& matrix) {
  if (matrix.num_mutants() == 0 || matrix.num_tests() == 0) {
    throw Error(ErrorCode::kEmptyDataset,
                "kill matrix needs at least one mutant and one test");
  }
  Dataset data;
  data.features = matrix.cells();
  data.method_index = matrix.methods();
  data.test_index = matrix.tests();
  data.labels.reserve(matrix.num_mutants());
  for (std::size_t m = 0; m < matrix.num_mutants(); ++m) {
    data.labels.push_back(matrix.method_of(m));
  }
  return data;
}

std::string_view ClassifierKindName(ClassifierKind kind) {
  return kind == ClassifierKind::kLogisticRegression ? "lr" : "mlp";
}

ClassifierKind ParseClassifierKind(std::string_view text) {
  const std::string s = Lower(text);
  if (s == "lr") return ClassifierKind::kLogisticRegression;
  if (s == "mlp") return ClassifierKind::kMlp;
  throw Error(ErrorCode::kInvalidConfig,
              "unknown classifier '" + std::string(text) + "'");
}

std::string_view ActivationName(Activation activation) {
  switch (activation) {
    case Activation::kRelu:
      return "relu";
    case Activation::kTanh:
      return "tanh";
    case Activation::kLogistic:
      return "logistic";
  }
  return "relu";
}

Activation ParseActivation(std::string_view text) {
  const std::string s = Lower(text);
  if (s == "relu") return Activation::kRelu;
  if (s == "tanh") return Activation::kTanh;
  if (s == "logistic") return Activation::kLogistic;
  throw Error(ErrorCode::kInvalidConfig,
              "unknown activation '" + std::string(text) + "'");
}

void TrainConfig::Validate() const {
  if (hidden_size < 1) {
    throw Error(ErrorCode::kInvalidConfig, "hidden_size must be positive");
  }
  if (max_iter < 1) {
    throw Error(ErrorCode::kInvalidConfig, "max_iter must be positive");
  }
  if (!(learning_rate > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "learning_rate must be positive");
  }
  if (!(adam_beta1 > 0.0 && adam_beta1 < 1.0) ||
      !(adam_beta2 > 0.0 && adam_beta2 < 1.0) || !(adam_eps > 0.0)) {
    throw Error(ErrorCode::kInvalidConfig, "invalid Adam parameters");
  }
}

std::size_t ClassifierModel::ExpectedParamCount() const {
  const std::size_t f = num_features();
  const std::size_t c = num_classes();
  if (kind == ClassifierKind::kLogisticRegression) return f * c + c;
  return f * hidden_size + hidden_size + hidden_size * c + c;
}

ClassifierModel InitModel(const Dataset& data, ClassifierKind kind,
                          const TrainConfig& config) {
  config.Validate();
  ClassifierModel model;
  model.kind = kind;
  model.activation = config.activation;
  model.hidden_size = kind == ClassifierKind::kMlp ? config.hidden_size : 0;
  model.test_index = data.test_index;
  model.method_index = data.method_index;
  model.config = config;
  model.params.assign(model.ExpectedParamCount(), 0.0);
  if (kind == ClassifierKind::kMlp) {
    const Layout l = LayoutOf(model);
    const std::size_t f = model.num_features();
    const std::size_t h = model.hidden_size;
    const std::size_t c = model.num_classes();
    Rng rng(config.seed);
    const double bound1 = std::sqrt(6.0 / static_cast<double>(f + h));
    for (std::size_t i = 0; i < f * h; ++i) {
      model.params[l.w1 + i] = rng.Uniform(-bound1, bound1);
    }
    const double bound2 = std::sqrt(6.0 / static_cast<double>(h + c));
    for (std::size_t i = 0; i < h * c; ++i) {
      model.params[l.w2 + i] = rng.Uniform(-bound2, bound2);
    }
  }
  return model;
}

double Loss(const ClassifierModel& model, const Dataset& data) {
  CheckCompatible(model, data);
  const Layout l = LayoutOf(model);
  std::vector<double> hidden_pre, hidden, logits;
  double total = 0.0;
  for (std::size_t r = 0; r < data.num_rows(); ++r) {
    Forward(model, l, data.features.data() + r * data.num_features(),
            hidden_pre, hidden, logits);
    total -= LogSoftmaxAt(logits, data.labels[r]);
  }
  return total / static_cast<double>(data.num_rows());
}

double LossAndGradient(const ClassifierModel& model, const Dataset& data,
                       std::vector<double>& gradient) {
  CheckCompatible(model, data);
  const Layout l = LayoutOf(model);
  const std::size_t f = model.num_features();
  const std::size_t c = model.num_classes();
  const std::size_t h = model.hidden_size;
  const double inv_n = 1.0 / static_cast<double>(data.num_rows());
  const double* p = model.params.data();
  gradient.assign(model.params.size(), 0.0);
  double* g = gradient.data();

  std::vector<double> hidden_pre, hidden, logits, d_hidden(h);
  double total = 0.0;
  for (std::size_t r = 0; r < data.num_rows(); ++r) {
    const std::uint8_t* x = data.features.data() + r * f;
    const std::size_t label = data.labels[r];
    Forward(model, l, x, hidden_pre, hidden, logits);
    total -= LogSoftmaxAt(logits, label);
    Softmax(logits);
    // logits now holds d(loss_r)/d(logit) * n after subtracting the target.
    logits[label] -= 1.0;
    for (double& d : logits) d *= inv_n;

    if (model.kind == ClassifierKind::kLogisticRegression) {
      for (std::size_t k = 0; k < c; ++k) {
        g[l.b1 + k] += logits[k];
        double* gw = g + l.w1 + k * f;
        for (std::size_t j = 0; j < f; ++j) {
          if (x[j]) gw[j] += logits[k];
        }
      }
      continue;
    }
    for (std::size_t k = 0; k < c; ++k) g[l.b2 + k] += logits[k];
    for (std::size_t u = 0; u < h; ++u) {
      double* gw = g + l.w2 + u * c;
      const double* w = p + l.w2 + u * c;
      double back = 0.0;
      for (std::size_t k = 0; k < c; ++k) {
        gw[k] += hidden[u] * logits[k];
        back += w[k] * logits[k];
      }
      d_hidden[u] =
          back * ActivateDerivative(model.activation, hidden_pre[u], hidden[u]);
    }
    for (std::size_t u = 0; u < h; ++u) g[l.b1 + u] += d_hidden[u];
    for (std::size_t j = 0; j < f; ++j) {
      if (!x[j]) continue;
      double* gw = g + l.w1 + j * h;
      for (std::size_t u = 0; u < h; ++u) gw[u] += d_hidden[u];
    }
  }
  return total * inv_n;
}

ClassifierModel TrainLogisticRegression(const Dataset& data,
                                        const TrainConfig& config) {
  return Fit(data, ClassifierKind::kLogisticRegression, config);
}

ClassifierModel TrainMlp(const Dataset& data, const TrainConfig& config) {
  return Fit(data, ClassifierKind::kMlp, config);
}

ClassifierModel Train(const Dataset& data, ClassifierKind kind,
                      const TrainConfig& config) {
  return Fit(data, kind, config);
}

std::vector<double> PredictProbabilities(const ClassifierModel& model,
                                         std::span<const std::uint8_t> vector) {
  if (vector.size() != model.num_features()) {
    throw Error(ErrorCode::kShapeError,
                "query vector has " + std::to_string(vector.size()) +
                    " entries, model expects " +
                    std::to_string(model.num_features()));
  }
  for (std::uint8_t v : vector) {
    if (v > 1) throw Error(ErrorCode::kShapeError, "query entry is not 0 or 1");
  }
  if (model.params.size() != model.ExpectedParamCount()) {
    throw Error(ErrorCode::kShapeError, "parameter count does not match shape");
  }
  std::vector<double> hidden_pre, hidden, logits;
  Forward(model, LayoutOf(model), vector.data(), hidden_pre, hidden, logits);
  Softmax(logits);
  return logits;
}

ScoreMap PredictScores(const ClassifierModel& model,
                       std::span<const std::uint8_t> vector) {
  const auto probs = PredictProbabilities(model, vector);
  ScoreMap scores;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    scores[model.method_index[k]] = probs[k];
  }
  return scores;
}

std::vector<std::uint8_t> BuildQueryVector(const FailureObservation& obs,
                                           const std::vector<TestId>& test_index,
                                           Scope scope) {
  obs.Validate();
  std::vector<std::uint8_t> vector;
  vector.reserve(test_index.size());
  if (scope == Scope::kFailing) {
    const std::set<TestId> index(test_index.begin(), test_index.end());
    if (index != obs.failing) {
      throw Error(ErrorCode::kInvalidObservation,
                  "F-scope models must be indexed by exactly the failing tests");
    }
    vector.assign(test_index.size(), 1);
    return vector;
  }
  for (const auto& t : test_index) {
    if (obs.failing.contains(t)) {
      vector.push_back(1);
    } else if (obs.passing && obs.passing->contains(t)) {
      vector.push_back(0);
    } else {
      throw Error(ErrorCode::kInvalidObservation,
                  "test '" + t + "' is neither failing nor passing");
    }
  }
  return vector;
}

std::string ModelToJson(const ClassifierModel& model) {
  const Layout l = LayoutOf(model);
  const std::size_t f = model.num_features();
  const std::size_t c = model.num_classes();
  const std::size_t h = model.hidden_size;
  const auto& p = model.params;
  auto slice = [&p](std::size_t from, std::size_t count) {
    return std::vector<double>(p.begin() + static_cast<std::ptrdiff_t>(from),
                               p.begin() + static_cast<std::ptrdiff_t>(from + count));
  };
  json layers = json::array();
  if (model.kind == ClassifierKind::kLogisticRegression) {
    layers.push_back({{"shape", {c, f}},
                      {"weights", slice(l.w1, c * f)},
                      {"bias", slice(l.b1, c)}});
  } else {
    layers.push_back({{"shape", {f, h}},
                      {"weights", slice(l.w1, f * h)},
                      {"bias", slice(l.b1, h)}});
    layers.push_back({{"shape", {h, c}},
                      {"weights", slice(l.w2, h * c)},
                      {"bias", slice(l.b2, c)}});
  }
  const TrainConfig& cfg = model.config;
  json doc = {
      {"format", "mutfl-classifier"},
      {"version", kModelFormatVersion},
      {"kind", ClassifierKindName(model.kind)},
      {"activation", ActivationName(model.activation)},
      {"hidden_size", model.hidden_size},
      {"test_index", model.test_index},
      {"method_index", model.method_index},
      {"layers", layers},
      {"train_config",
       {{"hidden_size", cfg.hidden_size},
        {"max_iter", cfg.max_iter},
        {"learning_rate", cfg.learning_rate},
        {"adam_beta1", cfg.adam_beta1},
        {"adam_beta2", cfg.adam_beta2},
        {"adam_eps", cfg.adam_eps},
        {"seed", cfg.seed},
        {"activation", ActivationName(cfg.activation)}}},
      {"loss_curve", model.loss_curve},
      {"final_loss",
       model.loss_curve.empty() ? json() : json(model.loss_curve.back())},
  };
  return doc.dump(2) + "\n";
}

ClassifierModel ModelFromJson(std::string_view text) {
  try {
    const json doc = json::parse(text);
    if (doc.at("format") != "mutfl-classifier") {
      throw Error(ErrorCode::kFormatError, "not a classifier model file");
    }
    if (doc.at("version").get<int>() != kModelFormatVersion) {
      throw Error(ErrorCode::kFormatError, "unsupported model version");
    }
    ClassifierModel model;
    model.kind = ParseClassifierKind(doc.at("kind").get<std::string>());
    model.activation = ParseActivation(doc.at("activation").get<std::string>());
    model.hidden_size = doc.at("hidden_size").get<std::size_t>();
    model.test_index = doc.at("test_index").get<std::vector<TestId>>();
    model.method_index = doc.at("method_index").get<std::vector<MethodId>>();
    for (const auto& layer : doc.at("layers")) {
      auto w = layer.at("weights").get<std::vector<double>>();
      auto b = layer.at("bias").get<std::vector<double>>();
      model.params.insert(model.params.end(), w.begin(), w.end());
      model.params.insert(model.params.end(), b.begin(), b.end());
    }
    if (model.params.size() != model.ExpectedParamCount()) {
      throw Error(ErrorCode::kFormatError,
                  "weight arrays do not match the declared shapes");
    }
    const json& cfg = doc.at("train_config");
    model.config.hidden_size = cfg.at("hidden_size").get<std::size_t>();
    model.config.max_iter = cfg.at("max_iter").get<int>();
    model.config.learning_rate = cfg.at("learning_rate").get<double>();
    model.config.adam_beta1 = cfg.at("adam_beta1").get<double>();
    model.config.adam_beta2 = cfg.at("adam_beta2").get<double>();
    model.config.adam_eps = cfg.at("adam_eps").get<double>();
    model.config.seed = cfg.at("seed").get<std::uint64_t>();
    model.config.activation =
        ParseActivation(cfg.at("activation").get<std::string>());
    model.loss_curve = doc.at("loss_curve").get<std::vector<double>>();
    return model;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormatError, e.what());
  }
}

}  // namespace mutfl
