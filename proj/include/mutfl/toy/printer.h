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

#ifndef MUTFL_TOY_PRINTER_H_
#define MUTFL_TOY_PRINTER_H_

#include <string>
#include <vector>

#include "mutfl/toy/ast.h"

namespace mutfl::toy {

// Expression text with the minimum parentheses needed to reparse it.
std::string PrintExpr(const Node& expr);

// Single-line rendering of a statement; compound statements show their head
// only, e.g. "while (i < n) {...}".
std::string PrintStatementSummary(const Node& stmt);

// Full source that parses back to a structurally identical program.
std::string PrintProgram(const Program& program);
std::string PrintTests(const std::vector<TestCase>& tests);

}  // namespace mutfl::toy

#endif  // MUTFL_TOY_PRINTER_H_
