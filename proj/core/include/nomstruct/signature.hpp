#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nomstruct/class_table.hpp"

namespace nomstruct {

// Type of a single member as it appears in a class signature. For fields
// `type` is the field type; for methods it is the return type.
struct MemberSig {
  enum class Kind { Field, Method };
  Kind kind;
  std::vector<std::string> params;  // methods only
  std::string type;
  bool operator==(const MemberSig&) const = default;
};

std::string to_string(const MemberSig& sig);

// Flattened interface of a class: every inherited member followed by the
// class's own, first occurrence wins. Member types across redeclarations
// are identical by table construction.
struct ClassSignature {
  std::string name;
  std::vector<std::string> ext;  // direct supers, declared order
  std::vector<std::pair<std::string, MemberSig>> members;
  bool operator==(const ClassSignature&) const = default;

  const MemberSig* find(std::string_view member) const;
};

// Name-indexed set of signatures, closed under reference: every class name
// mentioned by a contained signature is itself bound.
struct SignatureEnvironment {
  std::map<std::string, ClassSignature> sigs;
  bool operator==(const SignatureEnvironment&) const = default;
};

struct SignatureClosure {
  std::string root;
  SignatureEnvironment env;
};

ClassSignature signature_of(const ClassTable& table, std::string_view name);

// Smallest closed environment containing the class: reachability over
// declared supers and every class referenced by a member signature.
SignatureEnvironment signature_environment_of(const ClassTable& table,
                                              std::string_view name);

SignatureClosure signature_closure_of(const ClassTable& table,
                                      std::string_view name);

// se1 extends se2: se1 binds every name of se2 to an identical signature.
bool env_extends(const SignatureEnvironment& se1,
                 const SignatureEnvironment& se2);

// Transitive closure of the root's ext chain, resolved inside the closure's
// own environment. Does not include the root itself.
std::set<std::string> super_sigs(const SignatureClosure& sc);

// sc1 subsigns sc2: sc1's environment extends sc2's and sc2's root is
// sc1's root or one of its transitive supers.
bool subsigns(const SignatureClosure& sc1, const SignatureClosure& sc2);

// One-line rendering, e.g. `sig E ext D { bar: ()->A, meth: ()->A }`.
std::string render_signature(const ClassSignature& sig);

}  // namespace nomstruct
