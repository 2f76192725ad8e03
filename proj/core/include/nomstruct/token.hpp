#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nomstruct/source.hpp"

namespace nomstruct {

enum class TokenKind {
  KwClass,
  KwExtends,
  KwNew,
  KwReturn,
  KwInstanceof,
  KwIs,
  KwIf,
  KwThis,
  Identifier,
  LBrace,
  RBrace,
  LParen,
  RParen,
  Semicolon,
  Comma,
  Dot,
  AndAnd,
  EndOfInput,
};

std::string_view to_string(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string text;
  Position pos;
};

struct LexResult {
  std::vector<Token> tokens;  // no trailing EndOfInput token
  std::vector<Diag> errors;
};

// Splits the program text into tokens. Whitespace and // line comments are
// skipped. Unknown characters are reported and skipped so lexing continues.
LexResult tokenize(const SourceProgram& src);

}  // namespace nomstruct
