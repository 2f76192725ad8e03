#pragma once

#include <string>
#include <vector>

#include "nomstruct/ast.hpp"
#include "nomstruct/class_table.hpp"

namespace nomstruct {

// Canonical source rendering. Reparsing the output yields a structurally
// identical AST.
std::string to_source(const Expr& e);
std::string to_source(const Body& b);
std::string to_source(const ClassDeclAst& decl);
std::string to_source(const std::vector<ClassDeclAst>& decls);

// Prints the non-builtin declarations of a validated table.
std::string to_source(const ClassTable& table);

}  // namespace nomstruct
