#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "nomstruct/analyzer.hpp"
#include "table_gen.hpp"

using namespace nomstruct;
namespace ts = nomstruct::testsupport;

namespace {

std::string fixture(const std::string& name) {
  return std::string(NOMSTRUCT_FIXTURES) + "/" + name;
}

std::vector<TypeDiagnostic> diags(const std::string& text) {
  return typecheck_bodies(ts::must_table(text));
}

using PairSet = std::set<std::pair<std::string, std::string>>;

PairSet pairs_classified(const Report& report, PairClass c) {
  PairSet out;
  for (const PairVerdict& v : report.pairs)
    if (v.classification == c) out.emplace(v.sub, v.sup);
  return out;
}

}  // namespace

TEST_CASE("the corpus fixtures typecheck clean") {
  for (const char* name : {"figs123.cls", "abcde.cls", "object.cls",
                           "objects.cls", "set_multiset.cls", "empty.cls"}) {
    CAPTURE(name);
    ClassTable table = ts::must_table_file(fixture(name));
    CHECK(typecheck_bodies(table).empty());
  }
}

TEST_CASE("each seeded mutation yields exactly its expected diagnostic") {
  struct Expected {
    const char* file;
    DiagKind kind;
    int line;
    int col;
    const char* message;
  };
  const Expected expected[] = {
      {"mutations/no_equalto.cls", DiagKind::NoSuchMember, 38, 14,
       "class 'Pair' has no member 'equalTo'"},
      {"mutations/foo_param.cls", DiagKind::ReturnTypeMismatch, 18, 23,
       "return value type 'A' is not a subtype of declared return type 'D'"},
      {"mutations/meth_return.cls", DiagKind::ReturnTypeMismatch, 26, 21,
       "return value type 'A' is not a subtype of declared return type 'D'"},
      {"mutations/cond_object.cls", DiagKind::NonBooleanCondition, 41, 9,
       "if-condition has type 'Object', expected 'Boolean'"},
      {"mutations/and_operand.cls", DiagKind::ArgTypeMismatch, 38, 12,
       "right operand of '&&' has type 'Object', expected 'Boolean'"},
      {"mutations/cast_unrelated.cls", DiagKind::CastToUnrelated, 18, 23,
       "cast from 'A' to 'D': classes are unrelated"},
      {"mutations/ctor_arity.cls", DiagKind::ArgArityMismatch, 52, 12,
       "constructor of class 'Pair' expects 2 arguments, got 1"},
  };
  for (const Expected& e : expected) {
    CAPTURE(e.file);
    ClassTable table = ts::must_table_file(fixture(e.file));
    std::vector<TypeDiagnostic> found = typecheck_bodies(table);
    REQUIRE(found.size() == 1);
    CHECK(found[0].kind == e.kind);
    CHECK(found[0].pos.line == e.line);
    CHECK(found[0].pos.column == e.col);
    CHECK(found[0].message == e.message);
  }
}

TEST_CASE("true and false are Boolean constants of last resort") {
  CHECK(diags("class K {\n  Boolean yes() { return true; }\n}\n").empty());
  CHECK(diags("class K {\n  Boolean no() { return false.not(); }\n}\n")
            .empty());
  // A parameter named `true` shadows the constant.
  CHECK(diags("class K {\n  K id(K true) { return true; }\n}\n").empty());
}

TEST_CASE("name lookup runs parameters, then fields, then constants") {
  CHECK(diags("class F1 {\n  F1 x;\n}\n"
              "class F2 extends F1 {\n  F1 get() { return x; }\n}\n")
            .empty());
  CHECK(diags("class K {\n  K x;\n  K pick(K x) { return x; }\n}\n").empty());

  std::vector<TypeDiagnostic> unknown =
      diags("class K {\n  K m() { return missing; }\n}\n");
  REQUIRE(unknown.size() == 1);
  CHECK(unknown[0].kind == DiagKind::UnknownName);
  CHECK(unknown[0].message == "unknown name 'missing'");
}

TEST_CASE("unknown classes in new, tests and casts are UnknownName") {
  for (const char* body :
       {"return new Zed();", "return (Zed)this;", "return this is Zed;",
        "return this instanceof Zed;"}) {
    CAPTURE(body);
    // Instance tests still type as Boolean, so return Boolean to keep the
    // unknown-class report the only diagnostic.
    std::vector<TypeDiagnostic> found = diags(
        std::string("class K {\n  Boolean m() { ") + body + " }\n}\n");
    REQUIRE(found.size() == 1);
    CHECK(found[0].kind == DiagKind::UnknownName);
    CHECK(found[0].message.find("'Zed'") != std::string::npos);
  }
}

TEST_CASE("member access reports missing and miskinded members") {
  const char* prelude =
      "class P {\n"
      "  P f;\n"
      "  P m() { return this; }\n";

  std::vector<TypeDiagnostic> missing =
      diags(std::string(prelude) + "  P a(P x) { return x.nope; }\n}\n");
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].kind == DiagKind::NoSuchMember);
  CHECK(missing[0].message == "class 'P' has no member 'nope'");

  std::vector<TypeDiagnostic> field_called =
      diags(std::string(prelude) + "  P a(P x) { return x.f(); }\n}\n");
  REQUIRE(field_called.size() == 1);
  CHECK(field_called[0].message ==
        "member 'f' of class 'P' is a field, not a method");

  std::vector<TypeDiagnostic> method_read =
      diags(std::string(prelude) + "  P a(P x) { return x.m; }\n}\n");
  REQUIRE(method_read.size() == 1);
  CHECK(method_read[0].message ==
        "member 'm' of class 'P' is a method, not a field");
}

TEST_CASE("call arity uses singular and plural wording") {
  std::vector<TypeDiagnostic> two_for_one = diags(
      "class K {\n  K m(K x) { return x; }\n"
      "  K bad() { return m(this, this); }\n}\n");
  REQUIRE(two_for_one.size() == 1);
  CHECK(two_for_one[0].kind == DiagKind::ArgArityMismatch);
  CHECK(two_for_one[0].message ==
        "method 'm' of class 'K' expects 1 argument, got 2");
}

TEST_CASE("call arguments check against declared parameter types") {
  std::vector<TypeDiagnostic> found = diags(
      "class A3 {\n}\n"
      "class K {\n  K m(K x) { return x; }\n"
      "  K bad() { return m(new A3()); }\n}\n");
  REQUIRE(found.size() == 1);
  CHECK(found[0].kind == DiagKind::ArgTypeMismatch);
  CHECK(found[0].message ==
        "argument 1 of method 'm' of class 'K': type 'A3' is not a subtype "
        "of 'K'");
}

TEST_CASE("an erroneous subexpression poisons without cascading") {
  std::vector<TypeDiagnostic> chain =
      diags("class P {\n  P m() { return missing.f.g; }\n}\n");
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].kind == DiagKind::UnknownName);

  // Arguments are still typed when the receiver is unknown.
  std::vector<TypeDiagnostic> both =
      diags("class P {\n  P m() { return missing.n(ghost); }\n}\n");
  CHECK(both.size() == 2);
}

TEST_CASE("related casts pass both up and down the hierarchy") {
  CHECK(diags("class O2 {\n}\n"
              "class K extends O2 {\n"
              "  K down(O2 o) { return (K)o; }\n"
              "  O2 up() { return (O2)this; }\n"
              "}\n")
            .empty());

  // The cast yields its target type even when that breaks the context.
  std::vector<TypeDiagnostic> widened = diags(
      "class O2 {\n}\n"
      "class K extends O2 {\n  K m() { return (O2)this; }\n}\n");
  REQUIRE(widened.size() == 1);
  CHECK(widened[0].kind == DiagKind::ReturnTypeMismatch);
}

TEST_CASE("builtin Boolean methods are callable on Boolean values") {
  CHECK(diags("class K {\n  Boolean m() { return true.and(false.not()); }\n}\n")
            .empty());
  CHECK(diags("class K {\n  Boolean m(Boolean a, Boolean b) "
              "{ return a && b.or(a); }\n}\n")
            .empty());

  std::vector<TypeDiagnostic> bad = diags(
      "class K {\n  Boolean m() { return true.and(new K()); }\n}\n");
  REQUIRE(bad.size() == 1);
  CHECK(bad[0].kind == DiagKind::ArgTypeMismatch);
  CHECK(bad[0].message ==
        "argument 1 of method 'and' of class 'Boolean': type 'K' is not a "
        "subtype of 'Boolean'");
}

TEST_CASE("instance tests always type as Boolean") {
  CHECK(diags("class K {\n  Boolean m(K x) { return x is K; }\n"
              "  Boolean n(K x) { return x instanceof K && true; }\n}\n")
            .empty());
}

TEST_CASE("pair verdicts on the corpus match the published classification") {
  ClassTable table = ts::must_table_file(fixture("figs123.cls"));
  auto check_both_modes = [&](const char* sub, const char* sup,
                              PairClass want) {
    CAPTURE(sub);
    CAPTURE(sup);
    CHECK(classify_pair(table, sub, sup, SubtypeMode::WidthOnly)
              .classification == want);
    CHECK(classify_pair(table, sub, sup, SubtypeMode::Variance)
              .classification == want);
  };
  check_both_modes("B", "A", PairClass::Genuine);
  check_both_modes("C", "B", PairClass::Genuine);
  check_both_modes("E", "D", PairClass::Genuine);
  check_both_modes("Pair", "Object", PairClass::Genuine);
  check_both_modes("D", "B", PairClass::Spurious);
  check_both_modes("A", "B", PairClass::Spurious);
  check_both_modes("Object", "B", PairClass::Spurious);
  check_both_modes("Object", "Pair", PairClass::Unrelated);
  check_both_modes("B", "C", PairClass::Unrelated);

  PairVerdict v = classify_pair(table, "D", "B");
  CHECK(!v.nominal);
  CHECK(v.structural);
  CHECK(v.sub == "D");
  CHECK(v.sup == "B");
}

TEST_CASE("full report walks ordered pairs in declaration order") {
  ClassTable table = ts::must_table_file(fixture("abcde.cls"));
  Report report = full_report(table);
  CHECK(report.mode == SubtypeMode::WidthOnly);
  REQUIRE(report.classes.size() == 6);
  CHECK(report.classes.front().name == "A");
  CHECK(report.classes.back().name == "Boolean");
  CHECK(report.classes[4].shape == Shape{"bar", "meth"});
  CHECK(report.classes[4].supers == std::vector<std::string>{"D"});
  REQUIRE(report.pairs.size() == 30);
  CHECK(report.pairs[0].sub == "A");
  CHECK(report.pairs[0].sup == "B");
  CHECK(report.diagnostics.empty());

  CHECK(pairs_classified(report, PairClass::Genuine) ==
        PairSet{{"B", "A"}, {"C", "A"}, {"C", "B"}, {"E", "D"}});
  CHECK(pairs_classified(report, PairClass::Spurious) ==
        PairSet{{"A", "B"},
                {"D", "A"},
                {"D", "B"},
                {"E", "A"},
                {"E", "B"},
                {"Boolean", "A"},
                {"Boolean", "B"}});
  CHECK(pairs_classified(report, PairClass::Anomaly).empty());
}

TEST_CASE("structurally identical strangers classify as spurious") {
  ClassTable table = ts::must_table_file(fixture("set_multiset.cls"));
  CHECK(classify_pair(table, "Set", "MultiSet").classification ==
        PairClass::Spurious);
  CHECK(classify_pair(table, "MultiSet", "Set").classification ==
        PairClass::Spurious);
  CHECK(classify_pair(table, "Set", "Item").classification ==
        PairClass::Spurious);
  CHECK(classify_pair(table, "Item", "Set").classification ==
        PairClass::Unrelated);
}

TEST_CASE("random reports never contain an anomaly in either mode") {
  std::mt19937 rng(5150);
  for (int t = 0; t < 60; ++t) {
    ClassTable table = ts::build_or_die(ts::random_program(rng));
    for (SubtypeMode mode :
         {SubtypeMode::WidthOnly, SubtypeMode::Variance}) {
      Report report = full_report(table, mode);
      for (const PairVerdict& v : report.pairs) {
        CAPTURE(v.sub);
        CAPTURE(v.sup);
        CHECK(v.classification != PairClass::Anomaly);
        if (v.nominal) CHECK(v.structural);
      }
    }
  }
}
