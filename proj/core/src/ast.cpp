#include "nomstruct/ast.hpp"

namespace nomstruct {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool eq(const Expr& a, const Expr& b);

bool eq_args(const std::vector<Expr>& a, const std::vector<Expr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!eq(a[i], b[i])) return false;
  return true;
}

bool eq(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const VarExpr& x) {
            return x.name == std::get<VarExpr>(b.node).name;
          },
          [&](const ThisExpr&) { return true; },
          [&](const FieldGetExpr& x) {
            const auto& y = std::get<FieldGetExpr>(b.node);
            return x.field == y.field && eq(*x.object, *y.object);
          },
          [&](const CallExpr& x) {
            const auto& y = std::get<CallExpr>(b.node);
            return x.method == y.method && eq(*x.object, *y.object) &&
                   eq_args(x.args, y.args);
          },
          [&](const NewExpr& x) {
            const auto& y = std::get<NewExpr>(b.node);
            return x.class_name == y.class_name && eq_args(x.args, y.args);
          },
          [&](const InstanceOfExpr& x) {
            const auto& y = std::get<InstanceOfExpr>(b.node);
            return x.class_name == y.class_name && eq(*x.value, *y.value);
          },
          [&](const IsExactExpr& x) {
            const auto& y = std::get<IsExactExpr>(b.node);
            return x.class_name == y.class_name && eq(*x.value, *y.value);
          },
          [&](const CastExpr& x) {
            const auto& y = std::get<CastExpr>(b.node);
            return x.class_name == y.class_name && eq(*x.value, *y.value);
          },
          [&](const AndExpr& x) {
            const auto& y = std::get<AndExpr>(b.node);
            return eq(*x.lhs, *y.lhs) && eq(*x.rhs, *y.rhs);
          },
      },
      a.node);
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) { return eq(a, b); }

bool structurally_equal(const Body& a, const Body& b) {
  if (a.index() != b.index()) return false;
  if (const auto* pa = std::get_if<PlainReturn>(&a)) {
    return eq(pa->value, std::get<PlainReturn>(b).value);
  }
  const auto& ca = std::get<CondReturn>(a);
  const auto& cb = std::get<CondReturn>(b);
  return eq(ca.condition, cb.condition) && eq(ca.then_value, cb.then_value) &&
         eq(ca.else_value, cb.else_value);
}

bool structurally_equal(const ClassDeclAst& a, const ClassDeclAst& b) {
  if (a.name != b.name || a.supers.size() != b.supers.size() ||
      a.fields.size() != b.fields.size() || a.methods.size() != b.methods.size())
    return false;
  for (std::size_t i = 0; i < a.supers.size(); ++i)
    if (a.supers[i].name != b.supers[i].name) return false;
  for (std::size_t i = 0; i < a.fields.size(); ++i)
    if (a.fields[i].type != b.fields[i].type ||
        a.fields[i].name != b.fields[i].name)
      return false;
  for (std::size_t i = 0; i < a.methods.size(); ++i) {
    const MethodAst& ma = a.methods[i];
    const MethodAst& mb = b.methods[i];
    if (ma.return_type != mb.return_type || ma.name != mb.name ||
        ma.params.size() != mb.params.size())
      return false;
    for (std::size_t k = 0; k < ma.params.size(); ++k)
      if (ma.params[k].type != mb.params[k].type ||
          ma.params[k].name != mb.params[k].name)
        return false;
    if (!structurally_equal(ma.body, mb.body)) return false;
  }
  return true;
}

bool structurally_equal(const std::vector<ClassDeclAst>& a,
                        const std::vector<ClassDeclAst>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!structurally_equal(a[i], b[i])) return false;
  return true;
}

}  // namespace nomstruct
