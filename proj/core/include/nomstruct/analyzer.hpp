#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nomstruct/class_table.hpp"
#include "nomstruct/record_type.hpp"

namespace nomstruct {

enum class DiagKind {
  NoSuchMember,
  ArgArityMismatch,
  ArgTypeMismatch,
  ReturnTypeMismatch,
  CastToUnrelated,
  UnknownName,
  NonBooleanCondition,
};

std::string_view to_string(DiagKind kind);

struct TypeDiagnostic {
  std::string origin;
  Position pos;
  DiagKind kind;
  std::string message;
};

enum class PairClass { Genuine, Spurious, Unrelated, Anomaly };

std::string_view to_string(PairClass c);

// Verdict for one ordered pair: does sub subsign sup, is sub's record type
// a structural subtype of sup's, and how the two relate. Structural-only
// acceptance is spurious; nominal-only would be an anomaly.
struct PairVerdict {
  std::string sub;
  std::string sup;
  bool nominal = false;
  bool structural = false;
  PairClass classification = PairClass::Unrelated;
};

struct ReportClassInfo {
  std::string name;
  std::vector<std::string> supers;  // direct
  Shape shape;
};

struct Report {
  SubtypeMode mode = SubtypeMode::WidthOnly;
  std::vector<ReportClassInfo> classes;    // declaration order
  std::vector<PairVerdict> pairs;          // sub-major declaration order
  std::vector<TypeDiagnostic> diagnostics;
};

PairVerdict classify_pair(const ClassTable& table, std::string_view sub,
                          std::string_view sup,
                          SubtypeMode mode = SubtypeMode::WidthOnly);

Report full_report(const ClassTable& table,
                   SubtypeMode mode = SubtypeMode::WidthOnly);

// Typechecks every user-written method body; never throws on ill-typed
// code, collects diagnostics instead. Builtin bodies are skipped.
std::vector<TypeDiagnostic> typecheck_bodies(const ClassTable& table);

}  // namespace nomstruct
