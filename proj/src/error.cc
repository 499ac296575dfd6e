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

#include "mutfl/error.h"

namespace mutfl {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotFound:
      return "NotFound";
    case ErrorCode::kEmptyStratum:
      return "EmptyStratum";
    case ErrorCode::kFormatError:
      return "FormatError";
    case ErrorCode::kInvalidObservation:
      return "InvalidObservation";
    case ErrorCode::kEmptyDataset:
      return "EmptyDataset";
    case ErrorCode::kInvalidConfig:
      return "InvalidConfig";
    case ErrorCode::kShapeError:
      return "ShapeError";
    case ErrorCode::kSyntaxError:
      return "SyntaxError";
    case ErrorCode::kUnresolvedName:
      return "UnresolvedName";
    case ErrorCode::kPreconditionFailed:
      return "PreconditionFailed";
    case ErrorCode::kNothingToEvaluate:
      return "NothingToEvaluate";
    case ErrorCode::kIoError:
      return "IoError";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace mutfl
