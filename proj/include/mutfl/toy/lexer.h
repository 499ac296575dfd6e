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

#ifndef MUTFL_TOY_LEXER_H_
#define MUTFL_TOY_LEXER_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "mutfl/toy/ast.h"

namespace mutfl::toy {

enum class TokenKind {
  kIdent,
  kInt,
  kKeyword,
  kPunct,  // operators and delimiters
  kEnd,
};

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  std::int64_t int_value = 0;
  SourcePos pos;
};

// Splits source into tokens. `//` comments run to end of line.
// Throws kSyntaxError on stray characters or out-of-range integers.
std::vector<Token> Tokenize(std::string_view source);

}  // namespace mutfl::toy

#endif  // MUTFL_TOY_LEXER_H_
