#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace nomstruct {

// 1-based line/column; column counts bytes within the line.
struct Position {
  int line = 1;
  int column = 1;
  bool operator==(const Position&) const = default;
};

struct SourceProgram {
  std::string text;
  std::string origin = "<memory>";
};

enum class ErrorKind {
  LexError,
  ParseError,
  DuplicateClass,
  UnknownTypeName,
  InheritanceCycle,
  MemberClash,
  DuplicateMember,
};

std::string_view to_string(ErrorKind kind);

struct Diag {
  ErrorKind kind;
  Position pos;
  std::string message;
};

// Thrown by query operations whose precondition requires the class to be
// bound in the table.
class UnknownClassError : public std::runtime_error {
 public:
  explicit UnknownClassError(std::string_view name)
      : std::runtime_error("unknown class '" + std::string(name) + "'"),
        name_(name) {}

  const std::string& class_name() const { return name_; }

 private:
  std::string name_;
};

}  // namespace nomstruct
