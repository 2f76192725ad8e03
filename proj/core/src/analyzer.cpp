#include "nomstruct/analyzer.hpp"

#include <optional>

#include "nomstruct/signature.hpp"

namespace nomstruct {

std::string_view to_string(DiagKind kind) {
  switch (kind) {
    case DiagKind::NoSuchMember: return "NoSuchMember";
    case DiagKind::ArgArityMismatch: return "ArgArityMismatch";
    case DiagKind::ArgTypeMismatch: return "ArgTypeMismatch";
    case DiagKind::ReturnTypeMismatch: return "ReturnTypeMismatch";
    case DiagKind::CastToUnrelated: return "CastToUnrelated";
    case DiagKind::UnknownName: return "UnknownName";
    case DiagKind::NonBooleanCondition: return "NonBooleanCondition";
  }
  return "?";
}

std::string_view to_string(PairClass c) {
  switch (c) {
    case PairClass::Genuine: return "genuine";
    case PairClass::Spurious: return "spurious";
    case PairClass::Unrelated: return "unrelated";
    case PairClass::Anomaly: return "anomaly";
  }
  return "?";
}

namespace {

PairClass classify(bool nominal, bool structural) {
  if (nominal) return structural ? PairClass::Genuine : PairClass::Anomaly;
  return structural ? PairClass::Spurious : PairClass::Unrelated;
}

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Memoized per-table state shared by the pair classifier and the body
// typechecker: signature closures, the record-type graph, decider caches.
class Analysis {
 public:
  explicit Analysis(const ClassTable& table) : table_(table) {}

  const ClassTable& table() const { return table_; }

  const SignatureClosure& closure(std::string_view name) {
    auto it = closures_.find(name);
    if (it == closures_.end()) {
      it = closures_
               .emplace(std::string(name), signature_closure_of(table_, name))
               .first;
    }
    return it->second;
  }

  const ClassSignature& sig(std::string_view name) {
    const SignatureClosure& sc = closure(name);
    return sc.env.sigs.at(sc.root);
  }

  bool nominal_subtype(std::string_view sub, std::string_view sup) {
    return subsigns(closure(sub), closure(sup));
  }

  bool structural_subtype(std::string_view sub, std::string_view sup,
                          SubtypeMode mode) {
    const TableRecordTypes& rt = records();
    auto a = rt.class_node.find(sub);
    auto b = rt.class_node.find(sup);
    if (a == rt.class_node.end()) throw UnknownClassError(sub);
    if (b == rt.class_node.end()) throw UnknownClassError(sup);
    return decider_->subtype(a->second, b->second, mode);
  }

  PairVerdict verdict(std::string_view sub, std::string_view sup,
                      SubtypeMode mode) {
    PairVerdict v;
    v.sub = std::string(sub);
    v.sup = std::string(sup);
    v.nominal = nominal_subtype(sub, sup);
    v.structural = structural_subtype(sub, sup, mode);
    v.classification = classify(v.nominal, v.structural);
    return v;
  }

 private:
  const TableRecordTypes& records() {
    if (!records_) {
      records_ = build_table_record_types(table_);
      decider_.emplace(records_->graph);
    }
    return *records_;
  }

  const ClassTable& table_;
  std::map<std::string, SignatureClosure, std::less<>> closures_;
  std::optional<TableRecordTypes> records_;
  std::optional<StructuralDecider> decider_;
};

class BodyChecker {
 public:
  explicit BodyChecker(Analysis& analysis) : a_(analysis) {}

  std::vector<TypeDiagnostic> run() {
    for (const ClassDecl& decl : a_.table().declarations()) {
      if (decl.builtin) continue;
      for (const MethodDecl& method : decl.methods) {
        if (!method.body) continue;
        check_method(decl, method);
      }
    }
    return std::move(diags_);
  }

 private:
  using Type = std::optional<std::string>;  // nullopt: already diagnosed

  void diag(Position pos, DiagKind kind, std::string message) {
    diags_.push_back({cls_->origin, pos, kind, std::move(message)});
  }

  bool subtype(const std::string& sub, const std::string& sup) {
    return a_.nominal_subtype(sub, sup);
  }

  void check_method(const ClassDecl& cls, const MethodDecl& method) {
    cls_ = &cls;
    params_.clear();
    for (const ParamAst& p : method.params) params_[p.name] = p.type;

    std::visit(
        overloaded{
            [&](const PlainReturn& body) {
              check_return(body.value, method);
            },
            [&](const CondReturn& body) {
              Type cond = type_of(body.condition);
              if (cond && !subtype(*cond, "Boolean")) {
                diag(body.condition.pos, DiagKind::NonBooleanCondition,
                     "if-condition has type '" + *cond +
                         "', expected 'Boolean'");
              }
              check_return(body.then_value, method);
              check_return(body.else_value, method);
            },
        },
        *method.body);
  }

  void check_return(const Expr& value, const MethodDecl& method) {
    Type t = type_of(value);
    if (t && !subtype(*t, method.return_type)) {
      diag(value.pos, DiagKind::ReturnTypeMismatch,
           "return value type '" + *t +
               "' is not a subtype of declared return type '" +
               method.return_type + "'");
    }
  }

  void check_args(const std::vector<Expr>& args,
                  const std::vector<std::string>& expected, Position pos,
                  const std::string& what) {
    if (args.size() != expected.size()) {
      diag(pos, DiagKind::ArgArityMismatch,
           what + " expects " + std::to_string(expected.size()) +
               (expected.size() == 1 ? " argument, got " : " arguments, got ") +
               std::to_string(args.size()));
      return;
    }
    for (std::size_t i = 0; i < args.size(); ++i) {
      Type t = type_of(args[i]);
      if (t && !subtype(*t, expected[i])) {
        diag(args[i].pos, DiagKind::ArgTypeMismatch,
             "argument " + std::to_string(i + 1) + " of " + what +
                 ": type '" + *t + "' is not a subtype of '" + expected[i] +
                 "'");
      }
    }
  }

  void discard_args(const std::vector<Expr>& args) {
    for (const Expr& arg : args) type_of(arg);
  }

  Type check_operand(const Expr& e, const char* side) {
    Type t = type_of(e);
    if (t && !subtype(*t, "Boolean")) {
      diag(e.pos, DiagKind::ArgTypeMismatch,
           std::string(side) + " operand of '&&' has type '" + *t +
               "', expected 'Boolean'");
    }
    return t;
  }

  Type type_of(const Expr& e) {
    return std::visit(
        overloaded{
            [&](const VarExpr& x) -> Type {
              auto param = params_.find(x.name);
              if (param != params_.end()) return param->second;
              const MemberSig* field = a_.sig(cls_->name).find(x.name);
              if (field && field->kind == MemberSig::Kind::Field)
                return field->type;
              if (x.name == "true" || x.name == "false") return "Boolean";
              diag(e.pos, DiagKind::UnknownName,
                   "unknown name '" + x.name + "'");
              return std::nullopt;
            },
            [&](const ThisExpr&) -> Type { return cls_->name; },
            [&](const FieldGetExpr& x) -> Type {
              Type obj = type_of(*x.object);
              if (!obj) return std::nullopt;
              const MemberSig* member = a_.sig(*obj).find(x.field);
              if (!member) {
                diag(e.pos, DiagKind::NoSuchMember,
                     "class '" + *obj + "' has no member '" + x.field + "'");
                return std::nullopt;
              }
              if (member->kind == MemberSig::Kind::Method) {
                diag(e.pos, DiagKind::NoSuchMember,
                     "member '" + x.field + "' of class '" + *obj +
                         "' is a method, not a field");
                return std::nullopt;
              }
              return member->type;
            },
            [&](const CallExpr& x) -> Type {
              Type obj = type_of(*x.object);
              if (!obj) {
                discard_args(x.args);
                return std::nullopt;
              }
              const MemberSig* member = a_.sig(*obj).find(x.method);
              if (!member) {
                diag(e.pos, DiagKind::NoSuchMember,
                     "class '" + *obj + "' has no member '" + x.method + "'");
                discard_args(x.args);
                return std::nullopt;
              }
              if (member->kind == MemberSig::Kind::Field) {
                diag(e.pos, DiagKind::NoSuchMember,
                     "member '" + x.method + "' of class '" + *obj +
                         "' is a field, not a method");
                discard_args(x.args);
                return std::nullopt;
              }
              check_args(x.args, member->params, e.pos,
                         "method '" + x.method + "' of class '" + *obj + "'");
              return member->type;
            },
            [&](const NewExpr& x) -> Type {
              if (!a_.table().contains(x.class_name)) {
                diag(e.pos, DiagKind::UnknownName,
                     "unknown class '" + x.class_name + "'");
                discard_args(x.args);
                return std::nullopt;
              }
              auto fields = linearized_fields(a_.table(), x.class_name);
              std::vector<std::string> expected;
              expected.reserve(fields.size());
              for (auto& [fname, ftype] : fields) expected.push_back(ftype);
              check_args(x.args, expected, e.pos,
                         "constructor of class '" + x.class_name + "'");
              return x.class_name;
            },
            [&](const InstanceOfExpr& x) -> Type {
              type_of(*x.value);
              if (!a_.table().contains(x.class_name)) {
                diag(e.pos, DiagKind::UnknownName,
                     "unknown class '" + x.class_name + "'");
              }
              return "Boolean";
            },
            [&](const IsExactExpr& x) -> Type {
              type_of(*x.value);
              if (!a_.table().contains(x.class_name)) {
                diag(e.pos, DiagKind::UnknownName,
                     "unknown class '" + x.class_name + "'");
              }
              return "Boolean";
            },
            [&](const CastExpr& x) -> Type {
              if (!a_.table().contains(x.class_name)) {
                diag(e.pos, DiagKind::UnknownName,
                     "unknown class '" + x.class_name + "'");
                type_of(*x.value);
                return std::nullopt;
              }
              Type value = type_of(*x.value);
              if (value && !subtype(*value, x.class_name) &&
                  !subtype(x.class_name, *value)) {
                diag(e.pos, DiagKind::CastToUnrelated,
                     "cast from '" + *value + "' to '" + x.class_name +
                         "': classes are unrelated");
              }
              return x.class_name;
            },
            [&](const AndExpr& x) -> Type {
              check_operand(*x.lhs, "left");
              check_operand(*x.rhs, "right");
              return "Boolean";
            },
        },
        e.node);
  }

  Analysis& a_;
  const ClassDecl* cls_ = nullptr;
  std::map<std::string, std::string> params_;
  std::vector<TypeDiagnostic> diags_;
};

}  // namespace

PairVerdict classify_pair(const ClassTable& table, std::string_view sub,
                          std::string_view sup, SubtypeMode mode) {
  Analysis analysis(table);
  return analysis.verdict(sub, sup, mode);
}

Report full_report(const ClassTable& table, SubtypeMode mode) {
  Analysis analysis(table);
  Report report;
  report.mode = mode;
  const auto& decls = table.declarations();
  for (const ClassDecl& decl : decls) {
    report.classes.push_back(
        {decl.name, decl.supers, shape_of(table, decl.name)});
  }
  for (const ClassDecl& sub : decls) {
    for (const ClassDecl& sup : decls) {
      if (sub.name == sup.name) continue;
      report.pairs.push_back(analysis.verdict(sub.name, sup.name, mode));
    }
  }
  report.diagnostics = BodyChecker(analysis).run();
  return report;
}

std::vector<TypeDiagnostic> typecheck_bodies(const ClassTable& table) {
  Analysis analysis(table);
  return BodyChecker(analysis).run();
}

}  // namespace nomstruct
