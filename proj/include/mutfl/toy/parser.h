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

#ifndef MUTFL_TOY_PARSER_H_
#define MUTFL_TOY_PARSER_H_

#include <string_view>
#include <vector>

#include "mutfl/toy/ast.h"

namespace mutfl::toy {

// Grammar (EBNF):
//
//   program    = { function } ;
//   function   = "fn" ident "(" [ ident { "," ident } ] ")" block ;
//   block      = "{" { statement } "}" ;
//   statement  = "let" ident "=" expr ";"
//              | ident "=" expr ";"
//              | "if" expr block [ "else" ( block | if ) ]
//              | "while" expr block
//              | "return" [ expr ] ";"
//              | expr ";"
//              | ";" ;                       (no-op)
//   expr       = binary expression over, loosest first:
//                "||"  "&&"  "|"  "^"  "&"  "==" "!="  "<" "<=" ">" ">="
//                "<<" ">>"  "+" "-"  "*" "/" "%"
//   unary      = ( "-" | "~" | "!" ) unary | primary ;
//   primary    = int | "true" | "false" | ident | ident "(" [ args ] ")"
//              | "(" expr ")" ;
//
//   tests      = { "test" ident "{" assertion { assertion } "}" } ;
//   assertion  = "assert" expr ";" ;
//
// Identifiers may contain dots ("Stack.push"). Variables are lexically
// scoped; every `let` gets its own frame slot.
//
// Throws kSyntaxError or kUnresolvedName with "line L, column C" context.
Program Parse(std::string_view source);

// Parses a test file whose calls resolve against `program`. Test bodies may
// only hold assertions.
std::vector<TestCase> ParseTests(std::string_view source, const Program& program);

}  // namespace mutfl::toy

#endif  // MUTFL_TOY_PARSER_H_
