#include "nomstruct/token.hpp"

#include <cctype>
#include <unordered_map>

namespace nomstruct {

std::string_view to_string(TokenKind kind) {
  switch (kind) {
    case TokenKind::KwClass: return "'class'";
    case TokenKind::KwExtends: return "'extends'";
    case TokenKind::KwNew: return "'new'";
    case TokenKind::KwReturn: return "'return'";
    case TokenKind::KwInstanceof: return "'instanceof'";
    case TokenKind::KwIs: return "'is'";
    case TokenKind::KwIf: return "'if'";
    case TokenKind::KwThis: return "'this'";
    case TokenKind::Identifier: return "identifier";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Comma: return "','";
    case TokenKind::Dot: return "'.'";
    case TokenKind::AndAnd: return "'&&'";
    case TokenKind::EndOfInput: return "end of input";
  }
  return "?";
}

namespace {

const std::unordered_map<std::string_view, TokenKind> kKeywords = {
    {"class", TokenKind::KwClass},
    {"extends", TokenKind::KwExtends},
    {"new", TokenKind::KwNew},
    {"return", TokenKind::KwReturn},
    {"instanceof", TokenKind::KwInstanceof},
    {"is", TokenKind::KwIs},
    {"if", TokenKind::KwIf},
    {"this", TokenKind::KwThis},
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool ident_part(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

// Length of a well-formed UTF-8 sequence starting at i, or 0 if malformed.
std::size_t utf8_seq_len(const std::string& s, std::size_t i) {
  auto byte = [&](std::size_t k) -> unsigned {
    return k < s.size() ? static_cast<unsigned char>(s[k]) : 0u;
  };
  unsigned b0 = byte(i);
  std::size_t len;
  if (b0 < 0x80) return 1;
  if ((b0 & 0xE0) == 0xC0 && b0 >= 0xC2) len = 2;
  else if ((b0 & 0xF0) == 0xE0) len = 3;
  else if ((b0 & 0xF8) == 0xF0 && b0 <= 0xF4) len = 4;
  else return 0;
  for (std::size_t k = 1; k < len; ++k)
    if ((byte(i + k) & 0xC0) != 0x80) return 0;
  return len;
}

}  // namespace

LexResult tokenize(const SourceProgram& src) {
  LexResult out;
  const std::string& text = src.text;
  std::size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto push = [&](TokenKind kind, std::size_t begin, std::size_t len,
                  Position pos) {
    out.tokens.push_back({kind, text.substr(begin, len), pos});
  };

  while (i < text.size()) {
    char c = text[i];
    Position pos{line, col};
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (ident_start(c)) {
      std::size_t begin = i;
      while (i < text.size() && ident_part(text[i])) advance(1);
      std::string_view word(text.data() + begin, i - begin);
      auto kw = kKeywords.find(word);
      out.tokens.push_back({kw == kKeywords.end() ? TokenKind::Identifier
                                                  : kw->second,
                            std::string(word), pos});
      continue;
    }
    switch (c) {
      case '{': push(TokenKind::LBrace, i, 1, pos); advance(1); continue;
      case '}': push(TokenKind::RBrace, i, 1, pos); advance(1); continue;
      case '(': push(TokenKind::LParen, i, 1, pos); advance(1); continue;
      case ')': push(TokenKind::RParen, i, 1, pos); advance(1); continue;
      case ';': push(TokenKind::Semicolon, i, 1, pos); advance(1); continue;
      case ',': push(TokenKind::Comma, i, 1, pos); advance(1); continue;
      case '.': push(TokenKind::Dot, i, 1, pos); advance(1); continue;
      case '&':
        if (i + 1 < text.size() && text[i + 1] == '&') {
          push(TokenKind::AndAnd, i, 2, pos);
          advance(2);
        } else {
          out.errors.push_back({ErrorKind::LexError, pos,
                                "stray '&' (did you mean '&&'?)"});
          advance(1);
        }
        continue;
      default: {
        std::size_t len = utf8_seq_len(text, i);
        if (len == 0) {
          out.errors.push_back(
              {ErrorKind::LexError, pos, "invalid UTF-8 byte in input"});
          advance(1);
        } else {
          out.errors.push_back({ErrorKind::LexError, pos,
                                "illegal character '" +
                                    text.substr(i, len) + "'"});
          advance(len);
        }
        continue;
      }
    }
  }
  return out;
}

}  // namespace nomstruct
