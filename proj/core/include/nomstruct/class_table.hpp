#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nomstruct/ast.hpp"
#include "nomstruct/source.hpp"

namespace nomstruct {

struct MethodType {
  std::vector<std::string> params;
  std::string ret;
  bool operator==(const MethodType&) const = default;
};

struct FieldDecl {
  std::string name;
  std::string type;
  Position pos;
};

struct MethodDecl {
  std::string name;
  std::vector<ParamAst> params;
  std::string return_type;
  std::optional<Body> body;  // absent only for builtin methods
  Position pos;

  MethodType type() const;  // types-only view
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> supers;  // direct, declared order
  std::vector<FieldDecl> fields;    // own, source order
  std::vector<MethodDecl> methods;  // own, source order
  bool builtin = false;
  Position pos;
  std::string origin;
};

// Validated program: names resolved, inheritance acyclic, member
// redeclarations type-identical. Boolean is always present; when the
// program does not declare it, a builtin Boolean (and/or/not) is appended
// after the user declarations.
class ClassTable {
 public:
  const std::vector<ClassDecl>& declarations() const { return decls_; }

  bool contains(std::string_view name) const;
  const ClassDecl* find(std::string_view name) const;
  // Throws UnknownClassError when the name is not bound.
  const ClassDecl& at(std::string_view name) const;

 private:
  friend struct TableBuilder;
  std::vector<ClassDecl> decls_;
  std::unordered_map<std::string, std::size_t> index_;
};

struct BuildResult {
  std::optional<ClassTable> table;
  std::vector<Diag> errors;
};

BuildResult build_class_table(std::vector<ClassDeclAst> decls);

// Member-name set of a class: own members plus all inherited ones.
using Shape = std::set<std::string>;

Shape shape_of(const ClassTable& table, std::string_view name);
Shape fields_shape(const ClassTable& table, std::string_view name);
Shape methods_shape(const ClassTable& table, std::string_view name);

inline bool is_supershape(const Shape& sub, const Shape& sup) {
  return std::includes(sub.begin(), sub.end(), sup.begin(), sup.end());
}

// Transitive (non-reflexive) set of superclasses.
std::set<std::string> super_classes(const ClassTable& table,
                                    std::string_view name);

// Constructor-argument fields: inherited first (depth-first over the
// declared supers, duplicates dropped on first sight), then own fields.
std::vector<std::pair<std::string, std::string>> linearized_fields(
    const ClassTable& table, std::string_view name);

}  // namespace nomstruct
