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

#ifndef MUTFL_MATRIX_IO_H_
#define MUTFL_MATRIX_IO_H_

#include <filesystem>
#include <string>
#include <string_view>

#include "mutfl/kill_matrix.h"

namespace mutfl {

enum class MatrixFormat { kCsv, kJson };

// ".json" selects JSON, anything else CSV.
MatrixFormat FormatFromPath(const std::filesystem::path& path);

// CSV layout:
//   mutant_id,method,operator,description,t:<test1>,t:<test2>,...
//   m1,Foo.bar,AOR,a + b ↦ a - b,0,1,...
// Cells are exactly 0 or 1. Fields containing ',' or '"' are double-quoted
// with embedded quotes doubled. Lines end in '\n'.
// Parse errors throw kFormatError with the 1-based line number.
KillMatrix ParseMatrixCsv(std::string_view text);
std::string WriteMatrixCsv(const KillMatrix& matrix);

// JSON mirror: {"tests": [...], "methods": [...], "mutants": [{"id", "method",
// "operator", "description", "kills": [0, 1, ...]}]}. "methods" is optional
// on input.
KillMatrix ParseMatrixJson(std::string_view text);
std::string WriteMatrixJson(const KillMatrix& matrix);

KillMatrix LoadMatrix(const std::filesystem::path& path, MatrixFormat format);
KillMatrix LoadMatrix(const std::filesystem::path& path);
void SaveMatrix(const KillMatrix& matrix, const std::filesystem::path& path,
                MatrixFormat format);
void SaveMatrix(const KillMatrix& matrix, const std::filesystem::path& path);

// {"failing": [...], "passing": [...]}, "passing" optional.
FailureObservation ParseObservationJson(std::string_view text);
std::string WriteObservationJson(const FailureObservation& obs);
FailureObservation LoadObservation(const std::filesystem::path& path);

std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, std::string_view text);

}  // namespace mutfl

#endif  // MUTFL_MATRIX_IO_H_
