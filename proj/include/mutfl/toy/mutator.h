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

#ifndef MUTFL_TOY_MUTATOR_H_
#define MUTFL_TOY_MUTATOR_H_

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mutfl/toy/ast.h"

namespace mutfl::toy {

enum class MutationOperator {
  kAor,  // arithmetic + - * / %
  kRor,  // relational < <= > >= == !=
  kLor,  // bitwise/logical & | ^
  kSor,  // shifts << >>
  kCor,  // conditional && ||
  kOru,  // unary - ~
  kLvr,  // literal values
  kStd,  // statement deletion
};

std::string_view OperatorTag(MutationOperator op);
// Parses one tag ("AOR", case-insensitive). Throws kInvalidConfig.
MutationOperator ParseOperatorTag(std::string_view tag);
// Parses "AOR,ROR,..."; "all" or an empty string selects every operator.
std::set<MutationOperator> ParseOperatorList(std::string_view list);
std::set<MutationOperator> AllOperators();

struct MutantInstance {
  MutationOperator op = MutationOperator::kAor;
  NodePath path;            // from the program root
  std::string original;     // e.g. "a + b"
  std::string replacement;  // e.g. "a - b" or "<NO-OP>"
  std::string function;     // enclosing function name
  Node replacement_node;

  std::string Description() const;
};

// Enumerates mutants in pre-order over the program. At each node the enabled
// operators fire in declaration order:
//   AOR  each of + - * / % becomes each of the other four
//   ROR  each of < <= > >= == != becomes each of the other five
//   LOR  each of & | ^ becomes each of the other two
//   SOR  << and >> swap
//   COR  && / || becomes the other operator, its left operand, its right
//        operand, true, false
//   ORU  unary - / ~ becomes the other operator, or is removed
//   LVR  an integer literal v becomes 0, 1, -1 (minus v itself) and -v when
//        v != 0; a boolean literal is negated
//   STD  each non-return statement of a block becomes a no-op
// Unary '!' is not mutated.
std::vector<MutantInstance> GenerateMutants(
    const Program& program, const std::set<MutationOperator>& ops);

// Copy of `program` with the mutant's node replaced.
Program ApplyMutant(const Program& program, const MutantInstance& mutant);

}  // namespace mutfl::toy

#endif  // MUTFL_TOY_MUTATOR_H_
