#include "nomstruct/signature.hpp"

#include <deque>

namespace nomstruct {

std::string to_string(const MemberSig& sig) {
  if (sig.kind == MemberSig::Kind::Field) return sig.type;
  if (sig.params.size() == 1) return sig.params[0] + "->" + sig.type;
  std::string out = "(";
  for (std::size_t i = 0; i < sig.params.size(); ++i) {
    if (i) out += ", ";
    out += sig.params[i];
  }
  out += ")->" + sig.type;
  return out;
}

const MemberSig* ClassSignature::find(std::string_view member) const {
  for (const auto& [name, sig] : members) {
    if (name == member) return &sig;
  }
  return nullptr;
}

namespace {

using Members = std::vector<std::pair<std::string, MemberSig>>;
using FlattenMemo = std::map<std::string, Members, std::less<>>;

// Inherited members first (supers in declared order, recursively), then
// own fields and methods in source order; the first occurrence of a name
// wins. References into the memo stay valid across inserts.
const Members& flatten(const ClassTable& table, std::string_view name,
                       FlattenMemo& memo) {
  if (auto it = memo.find(name); it != memo.end()) return it->second;
  const ClassDecl& decl = table.at(name);
  Members members;
  std::set<std::string> seen;
  auto add = [&](const std::string& member, MemberSig sig) {
    if (seen.insert(member).second) members.emplace_back(member, std::move(sig));
  };
  for (const std::string& super : decl.supers) {
    for (const auto& [member, sig] : flatten(table, super, memo)) {
      add(member, sig);
    }
  }
  for (const FieldDecl& f : decl.fields) {
    add(f.name, {MemberSig::Kind::Field, {}, f.type});
  }
  for (const MethodDecl& m : decl.methods) {
    MethodType t = m.type();
    add(m.name, {MemberSig::Kind::Method, std::move(t.params), std::move(t.ret)});
  }
  return memo.emplace(std::string(name), std::move(members)).first->second;
}

ClassSignature make_signature(const ClassTable& table, std::string_view name,
                              FlattenMemo& memo) {
  ClassSignature sig;
  const ClassDecl& decl = table.at(name);
  sig.name = decl.name;
  sig.ext = decl.supers;
  sig.members = flatten(table, name, memo);
  return sig;
}

}  // namespace

ClassSignature signature_of(const ClassTable& table, std::string_view name) {
  FlattenMemo memo;
  return make_signature(table, name, memo);
}

SignatureEnvironment signature_environment_of(const ClassTable& table,
                                              std::string_view name) {
  table.at(name);  // precondition: bound
  SignatureEnvironment env;
  FlattenMemo memo;
  std::deque<std::string> work{std::string(name)};
  while (!work.empty()) {
    std::string current = std::move(work.front());
    work.pop_front();
    if (env.sigs.count(current)) continue;
    ClassSignature sig = make_signature(table, current, memo);
    auto reach = [&](const std::string& ref) {
      if (!env.sigs.count(ref)) work.push_back(ref);
    };
    for (const std::string& super : sig.ext) reach(super);
    for (const auto& [member, msig] : sig.members) {
      (void)member;
      for (const std::string& p : msig.params) reach(p);
      reach(msig.type);
    }
    env.sigs.emplace(std::move(current), std::move(sig));
  }
  return env;
}

SignatureClosure signature_closure_of(const ClassTable& table,
                                      std::string_view name) {
  return {std::string(name), signature_environment_of(table, name)};
}

bool env_extends(const SignatureEnvironment& se1,
                 const SignatureEnvironment& se2) {
  for (const auto& [name, sig] : se2.sigs) {
    auto it = se1.sigs.find(name);
    if (it == se1.sigs.end() || !(it->second == sig)) return false;
  }
  return true;
}

std::set<std::string> super_sigs(const SignatureClosure& sc) {
  std::set<std::string> supers;
  auto root = sc.env.sigs.find(sc.root);
  if (root == sc.env.sigs.end()) return supers;
  std::vector<std::string> work(root->second.ext);
  while (!work.empty()) {
    std::string current = std::move(work.back());
    work.pop_back();
    if (!supers.insert(current).second) continue;
    auto it = sc.env.sigs.find(current);
    if (it == sc.env.sigs.end()) continue;
    for (const std::string& super : it->second.ext) work.push_back(super);
  }
  return supers;
}

bool subsigns(const SignatureClosure& sc1, const SignatureClosure& sc2) {
  if (!env_extends(sc1.env, sc2.env)) return false;
  if (sc1.root == sc2.root) return true;
  return super_sigs(sc1).count(sc2.root) > 0;
}

std::string render_signature(const ClassSignature& sig) {
  std::string out = "sig " + sig.name;
  if (!sig.ext.empty()) {
    out += " ext ";
    for (std::size_t i = 0; i < sig.ext.size(); ++i) {
      if (i) out += ", ";
      out += sig.ext[i];
    }
  }
  if (sig.members.empty()) return out + " {}";
  out += " { ";
  for (std::size_t i = 0; i < sig.members.size(); ++i) {
    if (i) out += ", ";
    out += sig.members[i].first + ": " + to_string(sig.members[i].second);
  }
  out += " }";
  return out;
}

}  // namespace nomstruct
