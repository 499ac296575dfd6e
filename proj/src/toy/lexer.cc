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

#include "mutfl/toy/lexer.h"

#include <array>
#include <cctype>
#include <limits>

#include "mutfl/error.h"

namespace mutfl::toy {

namespace {

constexpr std::array<std::string_view, 10> kKeywords = {
    "fn", "let", "if", "else", "while", "return", "true", "false", "assert",
    "test"};

// Longest first so "<<" wins over "<".
constexpr std::array<std::string_view, 28> kPuncts = {
    "<<", ">>", "<=", ">=", "==", "!=", "&&", "||", "+", "-",
    "*",  "/",  "%",  "<",  ">",  "&",  "|",  "^",  "~", "!",
    "=",  "(",  ")",  "{",  "}",  ",",  ";",  ":"};

[[noreturn]] void Fail(SourcePos pos, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError, "line " + std::to_string(pos.line) +
                                           ", column " +
                                           std::to_string(pos.column) + ": " +
                                           what);
}

bool IsIdentStart(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.';
}

}  // namespace

std::vector<Token> Tokenize(std::string_view source) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  int line = 1;
  int column = 1;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (source[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
      ++i;
    }
  };
  while (i < source.size()) {
    const char c = source[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
      while (i < source.size() && source[i] != '\n') advance(1);
      continue;
    }
    Token tok;
    tok.pos = {line, column};
    if (IsIdentStart(c)) {
      std::size_t end = i;
      while (end < source.size() && IsIdentChar(source[end])) ++end;
      tok.text = std::string(source.substr(i, end - i));
      tok.kind = TokenKind::kIdent;
      for (auto kw : kKeywords) {
        if (tok.text == kw) tok.kind = TokenKind::kKeyword;
      }
      advance(end - i);
      tokens.push_back(std::move(tok));
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t end = i;
      std::uint64_t value = 0;
      constexpr auto kMax =
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
      while (end < source.size() &&
             std::isdigit(static_cast<unsigned char>(source[end]))) {
        value = value * 10 + static_cast<std::uint64_t>(source[end] - '0');
        if (value > kMax) Fail(tok.pos, "integer literal out of range");
        ++end;
      }
      if (end < source.size() && IsIdentStart(source[end])) {
        Fail(tok.pos, "malformed number");
      }
      tok.kind = TokenKind::kInt;
      tok.text = std::string(source.substr(i, end - i));
      tok.int_value = static_cast<std::int64_t>(value);
      advance(end - i);
      tokens.push_back(std::move(tok));
      continue;
    }
    bool matched = false;
    for (auto p : kPuncts) {
      if (source.substr(i, p.size()) == p) {
        tok.kind = TokenKind::kPunct;
        tok.text = std::string(p);
        advance(p.size());
        tokens.push_back(std::move(tok));
        matched = true;
        break;
      }
    }
    if (!matched) Fail(tok.pos, std::string("unexpected character '") + c + "'");
  }
  Token end;
  end.kind = TokenKind::kEnd;
  end.pos = {line, column};
  tokens.push_back(end);
  return tokens;
}

}  // namespace mutfl::toy
