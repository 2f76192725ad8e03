#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nomstruct/source.hpp"

namespace nomstruct {

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct VarExpr {
  std::string name;
};

struct ThisExpr {};

struct FieldGetExpr {
  ExprPtr object;
  std::string field;
};

struct CallExpr {
  ExprPtr object;  // bare calls parse as calls on `this`
  std::string method;
  std::vector<Expr> args;
};

struct NewExpr {
  std::string class_name;
  std::vector<Expr> args;
};

// `e instanceof C`: C or any subclass.
struct InstanceOfExpr {
  ExprPtr value;
  std::string class_name;
};

// `e is C`: exactly class C.
struct IsExactExpr {
  ExprPtr value;
  std::string class_name;
};

struct CastExpr {
  std::string class_name;
  ExprPtr value;
};

struct AndExpr {
  ExprPtr lhs;
  ExprPtr rhs;
};

struct Expr {
  Position pos;
  std::variant<VarExpr, ThisExpr, FieldGetExpr, CallExpr, NewExpr,
               InstanceOfExpr, IsExactExpr, CastExpr, AndExpr>
      node;
};

// Method bodies are one of two statement forms.
struct PlainReturn {
  Expr value;
};

struct CondReturn {
  Expr condition;
  Expr then_value;
  Expr else_value;
};

using Body = std::variant<PlainReturn, CondReturn>;

struct ParamAst {
  std::string type;
  std::string name;
  Position pos;
};

struct FieldAst {
  std::string type;
  std::string name;
  Position pos;
};

struct MethodAst {
  std::string return_type;
  std::string name;
  std::vector<ParamAst> params;
  Body body;
  Position pos;
};

struct SuperRef {
  std::string name;
  Position pos;
};

struct ClassDeclAst {
  std::string name;
  std::vector<SuperRef> supers;
  std::vector<FieldAst> fields;    // source order
  std::vector<MethodAst> methods;  // source order
  Position pos;
  std::string origin;
};

// Structural comparison ignoring positions and origins.
bool structurally_equal(const Expr& a, const Expr& b);
bool structurally_equal(const Body& a, const Body& b);
bool structurally_equal(const ClassDeclAst& a, const ClassDeclAst& b);
bool structurally_equal(const std::vector<ClassDeclAst>& a,
                        const std::vector<ClassDeclAst>& b);

}  // namespace nomstruct
