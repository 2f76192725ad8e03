#include "nomstruct/pretty.hpp"

#include <variant>

namespace nomstruct {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Grammar levels, loosest first. Printing a node into a context that needs
// a tighter level wraps it in parentheses.
enum Level { kAnd = 0, kUnary = 1, kPostfix = 2 };

Level level_of(const Expr& e) {
  return std::visit(overloaded{
                        [](const AndExpr&) { return kAnd; },
                        [](const CastExpr&) { return kUnary; },
                        [](const auto&) { return kPostfix; },
                    },
                    e.node);
}

void print(std::string& out, const Expr& e, Level min_level);

void print_args(std::string& out, const std::vector<Expr>& args) {
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    print(out, args[i], kAnd);
  }
  out += ')';
}

void print(std::string& out, const Expr& e, Level min_level) {
  if (level_of(e) < min_level) {
    out += '(';
    print(out, e, kAnd);
    out += ')';
    return;
  }
  std::visit(
      overloaded{
          [&](const VarExpr& x) { out += x.name; },
          [&](const ThisExpr&) { out += "this"; },
          [&](const FieldGetExpr& x) {
            print(out, *x.object, kPostfix);
            out += '.';
            out += x.field;
          },
          [&](const CallExpr& x) {
            print(out, *x.object, kPostfix);
            out += '.';
            out += x.method;
            print_args(out, x.args);
          },
          [&](const NewExpr& x) {
            out += "new ";
            out += x.class_name;
            print_args(out, x.args);
          },
          [&](const InstanceOfExpr& x) {
            print(out, *x.value, kPostfix);
            out += " instanceof ";
            out += x.class_name;
          },
          [&](const IsExactExpr& x) {
            print(out, *x.value, kPostfix);
            out += " is ";
            out += x.class_name;
          },
          [&](const CastExpr& x) {
            out += '(';
            out += x.class_name;
            out += ')';
            print(out, *x.value, kUnary);
          },
          [&](const AndExpr& x) {
            print(out, *x.lhs, kAnd);
            out += " && ";
            print(out, *x.rhs, kUnary);
          },
      },
      e.node);
}

void print_body(std::string& out, const Body& body) {
  if (const auto* plain = std::get_if<PlainReturn>(&body)) {
    out += "{ return ";
    print(out, plain->value, kAnd);
    out += "; }";
    return;
  }
  const auto& cond = std::get<CondReturn>(body);
  out += "{ if (";
  print(out, cond.condition, kAnd);
  out += ") return ";
  print(out, cond.then_value, kAnd);
  out += "; return ";
  print(out, cond.else_value, kAnd);
  out += "; }";
}

void print_decl(std::string& out, const ClassDeclAst& decl) {
  out += "class ";
  out += decl.name;
  if (!decl.supers.empty()) {
    out += " extends ";
    for (std::size_t i = 0; i < decl.supers.size(); ++i) {
      if (i) out += ", ";
      out += decl.supers[i].name;
    }
  }
  out += " {\n";
  for (const FieldAst& f : decl.fields) {
    out += "  ";
    out += f.type;
    out += ' ';
    out += f.name;
    out += ";\n";
  }
  for (const MethodAst& m : decl.methods) {
    out += "  ";
    out += m.return_type;
    out += ' ';
    out += m.name;
    out += '(';
    for (std::size_t i = 0; i < m.params.size(); ++i) {
      if (i) out += ", ";
      out += m.params[i].type;
      out += ' ';
      out += m.params[i].name;
    }
    out += ") ";
    print_body(out, m.body);
    out += '\n';
  }
  out += "}\n";
}

}  // namespace

std::string to_source(const Expr& e) {
  std::string out;
  print(out, e, kAnd);
  return out;
}

std::string to_source(const Body& b) {
  std::string out;
  print_body(out, b);
  return out;
}

std::string to_source(const ClassDeclAst& decl) {
  std::string out;
  print_decl(out, decl);
  return out;
}

std::string to_source(const std::vector<ClassDeclAst>& decls) {
  std::string out;
  for (std::size_t i = 0; i < decls.size(); ++i) {
    if (i) out += '\n';
    print_decl(out, decls[i]);
  }
  return out;
}

std::string to_source(const ClassTable& table) {
  std::string out;
  bool first = true;
  for (const ClassDecl& decl : table.declarations()) {
    if (decl.builtin) continue;
    if (!first) out += '\n';
    first = false;
    out += "class ";
    out += decl.name;
    if (!decl.supers.empty()) {
      out += " extends ";
      for (std::size_t i = 0; i < decl.supers.size(); ++i) {
        if (i) out += ", ";
        out += decl.supers[i];
      }
    }
    out += " {\n";
    for (const FieldDecl& f : decl.fields) {
      out += "  " + f.type + ' ' + f.name + ";\n";
    }
    for (const MethodDecl& m : decl.methods) {
      out += "  " + m.return_type + ' ' + m.name + '(';
      for (std::size_t i = 0; i < m.params.size(); ++i) {
        if (i) out += ", ";
        out += m.params[i].type + ' ' + m.params[i].name;
      }
      out += ") ";
      if (m.body) {
        print_body(out, *m.body);
      } else {
        out += "{ return this; }";
      }
      out += '\n';
    }
    out += "}\n";
  }
  return out;
}

}  // namespace nomstruct
