#pragma once

#include <optional>
#include <vector>

#include "nomstruct/ast.hpp"
#include "nomstruct/source.hpp"

namespace nomstruct {

struct ParseResult {
  std::vector<ClassDeclAst> decls;
  std::vector<Diag> errors;
};

// Parses a whole program (a sequence of class declarations). On a parse
// error inside a declaration the parser records the error and skips ahead
// to the next `class` keyword, so several errors can be reported per run.
ParseResult parse_program(const SourceProgram& src);

struct ExprParseResult {
  std::optional<Expr> expr;
  std::vector<Diag> errors;
};

// Parses a single expression; the whole input must be consumed.
ExprParseResult parse_expr(const SourceProgram& src);

}  // namespace nomstruct
