#include "nomstruct/parser.hpp"

#include <memory>
#include <utility>

#include "nomstruct/token.hpp"

namespace nomstruct {

namespace {

ExprPtr box(Expr e) { return std::make_unique<Expr>(std::move(e)); }

class Parser {
 public:
  Parser(LexResult lex, std::string origin)
      : tokens_(std::move(lex.tokens)), origin_(std::move(origin)) {
    for (auto& e : lex.errors) errors_.push_back(std::move(e));
    Position end{1, 1};
    if (!tokens_.empty()) {
      const Token& last = tokens_.back();
      end = {last.pos.line,
             last.pos.column + static_cast<int>(last.text.size())};
    }
    tokens_.push_back({TokenKind::EndOfInput, "", end});
  }

  ParseResult run_program() {
    ParseResult result;
    while (!at(TokenKind::EndOfInput)) {
      if (at(TokenKind::KwClass)) {
        try {
          result.decls.push_back(class_decl());
        } catch (const Fail&) {
          sync_to_class();
        }
      } else {
        error(peek(), "a class declaration");
        sync_to_class();
      }
    }
    result.errors = std::move(errors_);
    return result;
  }

  ExprParseResult run_expr() {
    ExprParseResult result;
    try {
      Expr e = expression();
      if (!at(TokenKind::EndOfInput)) {
        error(peek(), "end of input");
      } else {
        result.expr = std::move(e);
      }
    } catch (const Fail&) {
    }
    result.errors = std::move(errors_);
    return result;
  }

 private:
  struct Fail {};

  const Token& peek(std::size_t k = 0) const {
    std::size_t i = pos_ + k;
    if (i >= tokens_.size()) i = tokens_.size() - 1;
    return tokens_[i];
  }
  bool at(TokenKind kind, std::size_t k = 0) const {
    return peek(k).kind == kind;
  }
  const Token& advance() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& tok, std::string_view expected) {
    error(tok, expected);
    throw Fail{};
  }
  void error(const Token& tok, std::string_view expected) {
    std::string found = tok.kind == TokenKind::Identifier
                            ? "identifier '" + tok.text + "'"
                            : std::string(to_string(tok.kind));
    errors_.push_back({ErrorKind::ParseError, tok.pos,
                       "expected " + std::string(expected) + ", found " +
                           found});
  }
  const Token& expect(TokenKind kind, std::string_view what) {
    if (!at(kind)) fail(peek(), what);
    return advance();
  }

  void sync_to_class() {
    while (!at(TokenKind::EndOfInput) && !at(TokenKind::KwClass)) advance();
  }

  ClassDeclAst class_decl() {
    ClassDeclAst decl;
    decl.origin = origin_;
    decl.pos = expect(TokenKind::KwClass, "'class'").pos;
    decl.name = expect(TokenKind::Identifier, "a class name").text;
    if (at(TokenKind::KwExtends)) {
      advance();
      const Token& first = expect(TokenKind::Identifier, "a superclass name");
      decl.supers.push_back({first.text, first.pos});
      while (at(TokenKind::Comma)) {
        advance();
        const Token& next = expect(TokenKind::Identifier, "a superclass name");
        decl.supers.push_back({next.text, next.pos});
      }
    }
    expect(TokenKind::LBrace, "'{'");
    while (!at(TokenKind::RBrace) && !at(TokenKind::EndOfInput)) {
      member(decl);
    }
    expect(TokenKind::RBrace, "'}'");
    return decl;
  }

  void member(ClassDeclAst& decl) {
    const Token& type = expect(TokenKind::Identifier, "a member type");
    const Token& name = expect(TokenKind::Identifier, "a member name");
    if (at(TokenKind::Semicolon)) {
      advance();
      decl.fields.push_back({type.text, name.text, type.pos});
      return;
    }
    if (at(TokenKind::LParen)) {
      advance();
      MethodAst method;
      method.return_type = type.text;
      method.name = name.text;
      method.pos = type.pos;
      if (!at(TokenKind::RParen)) {
        for (;;) {
          const Token& pt = expect(TokenKind::Identifier, "a parameter type");
          const Token& pn = expect(TokenKind::Identifier, "a parameter name");
          method.params.push_back({pt.text, pn.text, pt.pos});
          if (!at(TokenKind::Comma)) break;
          advance();
        }
      }
      expect(TokenKind::RParen, "')'");
      method.body = block();
      decl.methods.push_back(std::move(method));
      return;
    }
    fail(peek(), "';' or '('");
  }

  Body block() {
    expect(TokenKind::LBrace, "'{'");
    if (at(TokenKind::KwIf)) {
      advance();
      expect(TokenKind::LParen, "'('");
      Expr cond = expression();
      expect(TokenKind::RParen, "')'");
      Expr then_value = return_stmt();
      Expr else_value = return_stmt();
      expect(TokenKind::RBrace, "'}'");
      return CondReturn{std::move(cond), std::move(then_value),
                        std::move(else_value)};
    }
    Expr value = return_stmt();
    expect(TokenKind::RBrace, "'}'");
    return PlainReturn{std::move(value)};
  }

  Expr return_stmt() {
    expect(TokenKind::KwReturn, "'return'");
    Expr e = expression();
    expect(TokenKind::Semicolon, "';'");
    return e;
  }

  Expr expression() {
    Expr lhs = unary();
    while (at(TokenKind::AndAnd)) {
      Position pos = advance().pos;
      Expr rhs = unary();
      lhs = Expr{pos, AndExpr{box(std::move(lhs)), box(std::move(rhs))}};
    }
    return lhs;
  }

  static bool atom_start(TokenKind kind) {
    return kind == TokenKind::Identifier || kind == TokenKind::KwThis ||
           kind == TokenKind::KwNew || kind == TokenKind::LParen;
  }

  Expr unary() {
    // `(IDENT)` followed by an atom starter is a cast.
    if (at(TokenKind::LParen) && at(TokenKind::Identifier, 1) &&
        at(TokenKind::RParen, 2) && atom_start(peek(3).kind)) {
      Position pos = advance().pos;
      std::string name = advance().text;
      advance();
      Expr value = unary();
      return Expr{pos, CastExpr{std::move(name), box(std::move(value))}};
    }
    return postfix();
  }

  Expr postfix() {
    Expr e = atom();
    for (;;) {
      if (at(TokenKind::Dot)) {
        advance();
        const Token& name = expect(TokenKind::Identifier, "a member name");
        if (at(TokenKind::LParen)) {
          advance();
          std::vector<Expr> args = arguments();
          e = Expr{name.pos,
                   CallExpr{box(std::move(e)), name.text, std::move(args)}};
        } else {
          e = Expr{name.pos, FieldGetExpr{box(std::move(e)), name.text}};
        }
        continue;
      }
      if (at(TokenKind::KwInstanceof) || at(TokenKind::KwIs)) {
        bool exact = at(TokenKind::KwIs);
        Position pos = advance().pos;
        const Token& name = expect(TokenKind::Identifier, "a class name");
        if (exact) {
          e = Expr{pos, IsExactExpr{box(std::move(e)), name.text}};
        } else {
          e = Expr{pos, InstanceOfExpr{box(std::move(e)), name.text}};
        }
        continue;
      }
      break;
    }
    return e;
  }

  // Arguments after a consumed '(' up to the matching ')'.
  std::vector<Expr> arguments() {
    std::vector<Expr> args;
    if (!at(TokenKind::RParen)) {
      args.push_back(expression());
      while (at(TokenKind::Comma)) {
        advance();
        args.push_back(expression());
      }
    }
    expect(TokenKind::RParen, "')'");
    return args;
  }

  Expr atom() {
    if (at(TokenKind::Identifier)) {
      const Token& name = advance();
      if (at(TokenKind::LParen)) {
        // Bare call: method call on the implicit receiver `this`.
        advance();
        std::vector<Expr> args = arguments();
        return Expr{name.pos,
                    CallExpr{box(Expr{name.pos, ThisExpr{}}), name.text,
                             std::move(args)}};
      }
      return Expr{name.pos, VarExpr{name.text}};
    }
    if (at(TokenKind::KwThis)) {
      return Expr{advance().pos, ThisExpr{}};
    }
    if (at(TokenKind::KwNew)) {
      Position pos = advance().pos;
      const Token& name = expect(TokenKind::Identifier, "a class name");
      expect(TokenKind::LParen, "'('");
      std::vector<Expr> args = arguments();
      return Expr{pos, NewExpr{name.text, std::move(args)}};
    }
    if (at(TokenKind::LParen)) {
      advance();
      Expr e = expression();
      expect(TokenKind::RParen, "')'");
      return e;
    }
    fail(peek(), "an expression");
  }

  std::vector<Token> tokens_;
  std::string origin_;
  std::size_t pos_ = 0;
  std::vector<Diag> errors_;
};

}  // namespace

ParseResult parse_program(const SourceProgram& src) {
  return Parser(tokenize(src), src.origin).run_program();
}

ExprParseResult parse_expr(const SourceProgram& src) {
  return Parser(tokenize(src), src.origin).run_expr();
}

}  // namespace nomstruct
