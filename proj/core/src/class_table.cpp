#include "nomstruct/class_table.hpp"

#include <cassert>
#include <map>

#include "nomstruct/signature.hpp"

namespace nomstruct {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::LexError: return "LexError";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DuplicateClass: return "DuplicateClass";
    case ErrorKind::UnknownTypeName: return "UnknownTypeName";
    case ErrorKind::InheritanceCycle: return "InheritanceCycle";
    case ErrorKind::MemberClash: return "MemberClash";
    case ErrorKind::DuplicateMember: return "DuplicateMember";
  }
  return "?";
}

MethodType MethodDecl::type() const {
  MethodType t;
  t.params.reserve(params.size());
  for (const ParamAst& p : params) t.params.push_back(p.type);
  t.ret = return_type;
  return t;
}

bool ClassTable::contains(std::string_view name) const {
  return index_.find(std::string(name)) != index_.end();
}

const ClassDecl* ClassTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? nullptr : &decls_[it->second];
}

const ClassDecl& ClassTable::at(std::string_view name) const {
  const ClassDecl* decl = find(name);
  if (!decl) throw UnknownClassError(name);
  return *decl;
}

namespace {

ClassDecl builtin_boolean() {
  ClassDecl decl;
  decl.name = "Boolean";
  decl.builtin = true;
  decl.pos = {1, 1};
  decl.origin = "<builtin>";
  auto method = [](const char* name, bool unary_arg) {
    MethodDecl m;
    m.name = name;
    if (unary_arg) m.params.push_back({"Boolean", "other", {1, 1}});
    m.return_type = "Boolean";
    m.pos = {1, 1};
    return m;
  };
  decl.methods.push_back(method("and", true));
  decl.methods.push_back(method("or", true));
  decl.methods.push_back(method("not", false));
  return decl;
}

}  // namespace

struct TableBuilder {
  std::vector<Diag> errors;
  ClassTable table;

  void add_error(ErrorKind kind, Position pos, std::string message) {
    errors.push_back({kind, pos, std::move(message)});
  }

  void convert(std::vector<ClassDeclAst> decls) {
    for (ClassDeclAst& ast : decls) {
      if (table.contains(ast.name)) {
        add_error(ErrorKind::DuplicateClass, ast.pos,
                  "duplicate class '" + ast.name + "'");
        continue;
      }
      ClassDecl decl;
      decl.name = ast.name;
      for (const SuperRef& s : ast.supers) decl.supers.push_back(s.name);
      for (FieldAst& f : ast.fields)
        decl.fields.push_back({std::move(f.name), std::move(f.type), f.pos});
      for (MethodAst& m : ast.methods) {
        MethodDecl method;
        method.name = std::move(m.name);
        method.params = std::move(m.params);
        method.return_type = std::move(m.return_type);
        method.body = std::move(m.body);
        method.pos = m.pos;
        decl.methods.push_back(std::move(method));
      }
      decl.pos = ast.pos;
      decl.origin = ast.origin;
      table.index_.emplace(decl.name, table.decls_.size());
      table.decls_.push_back(std::move(decl));
      // Super positions are needed again for name checking below.
      super_positions_.push_back(std::move(ast.supers));
    }
    if (!table.contains("Boolean")) {
      table.index_.emplace("Boolean", table.decls_.size());
      table.decls_.push_back(builtin_boolean());
      super_positions_.emplace_back();
    }
  }

  void check_duplicate_members() {
    for (const ClassDecl& decl : table.decls_) {
      std::set<std::string> seen;
      for (const FieldDecl& f : decl.fields) {
        if (!seen.insert(f.name).second)
          add_error(ErrorKind::DuplicateMember, f.pos,
                    "class '" + decl.name + "' declares member '" + f.name +
                        "' twice");
      }
      for (const MethodDecl& m : decl.methods) {
        if (!seen.insert(m.name).second)
          add_error(ErrorKind::DuplicateMember, m.pos,
                    "class '" + decl.name + "' declares member '" + m.name +
                        "' twice");
      }
    }
  }

  void check_type_names() {
    for (std::size_t i = 0; i < table.decls_.size(); ++i) {
      const ClassDecl& decl = table.decls_[i];
      if (decl.builtin) continue;
      for (const SuperRef& s : super_positions_[i]) {
        if (!table.contains(s.name))
          add_error(ErrorKind::UnknownTypeName, s.pos,
                    "unknown type name '" + s.name + "'");
      }
      for (const FieldDecl& f : decl.fields) {
        if (!table.contains(f.type))
          add_error(ErrorKind::UnknownTypeName, f.pos,
                    "unknown type name '" + f.type + "'");
      }
      for (const MethodDecl& m : decl.methods) {
        for (const ParamAst& p : m.params) {
          if (!table.contains(p.type))
            add_error(ErrorKind::UnknownTypeName, p.pos,
                      "unknown type name '" + p.type + "'");
        }
        if (!table.contains(m.return_type))
          add_error(ErrorKind::UnknownTypeName, m.pos,
                    "unknown type name '" + m.return_type + "'");
      }
    }
  }

  // Returns true when the super graph is acyclic.
  bool check_cycles() {
    enum Color { White, Gray, Black };
    std::map<std::string, Color> color;
    bool ok = true;
    std::vector<std::string> path;

    auto dfs = [&](auto&& self, const std::string& name) -> void {
      color[name] = Gray;
      path.push_back(name);
      const ClassDecl* decl = table.find(name);
      if (decl) {
        for (const std::string& super : decl->supers) {
          if (!table.contains(super)) continue;  // reported above
          Color c = color.count(super) ? color[super] : White;
          if (c == Gray) {
            ok = false;
            std::string cycle;
            auto it = std::find(path.begin(), path.end(), super);
            for (; it != path.end(); ++it) cycle += *it + " -> ";
            cycle += super;
            add_error(ErrorKind::InheritanceCycle, decl->pos,
                      "inheritance cycle: " + cycle);
          } else if (c == White) {
            self(self, super);
          }
        }
      }
      path.pop_back();
      color[name] = Black;
    };

    for (const ClassDecl& decl : table.decls_) {
      if (!color.count(decl.name)) dfs(dfs, decl.name);
    }
    return ok;
  }

  // Every member reaching a class (by declaration or along any inheritance
  // path) must do so with one single type.
  void check_member_clashes() {
    std::map<std::string, std::map<std::string, MemberSig>> memo;

    auto flatten = [&](auto&& self,
                       const std::string& name) -> const std::map<std::string, MemberSig>& {
      auto found = memo.find(name);
      if (found != memo.end()) return found->second;
      const ClassDecl& decl = *table.find(name);
      std::map<std::string, MemberSig> merged;
      for (const std::string& super : decl.supers) {
        for (const auto& [mname, sig] : self(self, super)) {
          auto [it, inserted] = merged.emplace(mname, sig);
          if (!inserted && it->second != sig)
            add_error(ErrorKind::MemberClash, decl.pos,
                      "class '" + name + "': member '" + mname +
                          "' inherited with conflicting types " +
                          to_string(it->second) + " and " + to_string(sig));
        }
      }
      for (const FieldDecl& f : decl.fields) {
        MemberSig sig{MemberSig::Kind::Field, {}, f.type};
        auto [it, inserted] = merged.emplace(f.name, sig);
        if (!inserted && it->second != sig)
          add_error(ErrorKind::MemberClash, f.pos,
                    "class '" + name + "': member '" + f.name +
                        "' redeclared with type " + to_string(sig) +
                        ", inherited as " + to_string(it->second));
      }
      for (const MethodDecl& m : decl.methods) {
        MethodType t = m.type();
        MemberSig sig{MemberSig::Kind::Method, t.params, t.ret};
        auto [it, inserted] = merged.emplace(m.name, sig);
        if (!inserted && it->second != sig)
          add_error(ErrorKind::MemberClash, m.pos,
                    "class '" + name + "': member '" + m.name +
                        "' redeclared with type " + to_string(sig) +
                        ", inherited as " + to_string(it->second));
      }
      return memo.emplace(name, std::move(merged)).first->second;
    };

    for (const ClassDecl& decl : table.decls_) flatten(flatten, decl.name);
  }

  std::vector<std::vector<SuperRef>> super_positions_;
};

BuildResult build_class_table(std::vector<ClassDeclAst> decls) {
  TableBuilder builder;
  builder.convert(std::move(decls));
  builder.check_duplicate_members();
  builder.check_type_names();
  bool acyclic = builder.check_cycles();
  if (builder.errors.empty() && acyclic) builder.check_member_clashes();
  BuildResult result;
  result.errors = std::move(builder.errors);
  if (result.errors.empty()) result.table = std::move(builder.table);
  return result;
}

namespace {

template <typename Collect>
void walk_hierarchy(const ClassTable& table, std::string_view name,
                    Collect&& collect) {
  std::set<std::string> visited;
  std::vector<const ClassDecl*> work{&table.at(name)};
  visited.insert(std::string(name));
  while (!work.empty()) {
    const ClassDecl* decl = work.back();
    work.pop_back();
    collect(*decl);
    for (const std::string& super : decl->supers) {
      if (visited.insert(super).second) work.push_back(&table.at(super));
    }
  }
}

}  // namespace

Shape shape_of(const ClassTable& table, std::string_view name) {
  Shape shape;
  walk_hierarchy(table, name, [&](const ClassDecl& decl) {
    for (const FieldDecl& f : decl.fields) shape.insert(f.name);
    for (const MethodDecl& m : decl.methods) shape.insert(m.name);
  });
  return shape;
}

Shape fields_shape(const ClassTable& table, std::string_view name) {
  Shape shape;
  walk_hierarchy(table, name, [&](const ClassDecl& decl) {
    for (const FieldDecl& f : decl.fields) shape.insert(f.name);
  });
  return shape;
}

Shape methods_shape(const ClassTable& table, std::string_view name) {
  Shape shape;
  walk_hierarchy(table, name, [&](const ClassDecl& decl) {
    for (const MethodDecl& m : decl.methods) shape.insert(m.name);
  });
  return shape;
}

std::set<std::string> super_classes(const ClassTable& table,
                                    std::string_view name) {
  std::set<std::string> supers;
  std::vector<std::string> work(table.at(name).supers);
  while (!work.empty()) {
    std::string current = std::move(work.back());
    work.pop_back();
    if (!supers.insert(current).second) continue;
    for (const std::string& super : table.at(current).supers)
      work.push_back(super);
  }
  return supers;
}

std::vector<std::pair<std::string, std::string>> linearized_fields(
    const ClassTable& table, std::string_view name) {
  std::vector<std::pair<std::string, std::string>> fields;
  std::set<std::string> seen_names;
  std::set<std::string> visited;

  auto visit = [&](auto&& self, const ClassDecl& decl) -> void {
    if (!visited.insert(decl.name).second) return;
    for (const std::string& super : decl.supers) self(self, table.at(super));
    for (const FieldDecl& f : decl.fields) {
      if (seen_names.insert(f.name).second) fields.emplace_back(f.name, f.type);
    }
  };
  visit(visit, table.at(name));
  return fields;
}

}  // namespace nomstruct
