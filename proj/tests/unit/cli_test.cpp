#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int code = -1;
  std::string out;
  std::string err;
};

std::string fixture(const std::string& name) {
  return std::string("\"") + NOMSTRUCT_FIXTURES + "/" + name + "\"";
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  std::string err_path = "/tmp/nomstruct_cli_err_" +
                         std::to_string(getpid()) + "_" +
                         std::to_string(counter++);
  std::string cmd =
      std::string("\"") + NOMSTRUCT_CLI_BIN + "\" " + args + " 2>" + err_path;

  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;

  std::ifstream err_in(err_path, std::ios::binary);
  std::ostringstream err_buf;
  err_buf << err_in.rdbuf();
  r.err = std::move(err_buf).str();
  std::remove(err_path.c_str());
  return r;
}

}  // namespace

TEST_CASE("check is silent and zero on a clean program") {
  RunResult r = run_cli("check " + fixture("figs123.cls"));
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(r.err.empty());
}

TEST_CASE("check exits 2 on table errors, naming the kind") {
  RunResult r = run_cli("check " + fixture("cyclic.cls"));
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  CHECK(r.err.find("InheritanceCycle") != std::string::npos);
}

TEST_CASE("check exits 1 on type diagnostics with file:line:col prefixes") {
  RunResult r = run_cli("check " + fixture("mutated-pair.cls"));
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find(":38:14: NoSuchMember:") != std::string::npos);

  RunResult op = run_cli("check " + fixture("mutations/and_operand.cls"));
  CHECK(op.code == 1);
  CHECK(op.err.find(":38:12: ArgTypeMismatch:") != std::string::npos);
}

TEST_CASE("an empty program checks clean") {
  RunResult r = run_cli("check " + fixture("empty.cls"));
  CHECK(r.code == 0);
  CHECK(r.err.empty());
}

TEST_CASE("a missing input file is an error") {
  RunResult r = run_cli("check " + fixture("no_such_file.cls"));
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("query shape prints the sorted member-name set") {
  RunResult r = run_cli("query shape Pair " + fixture("figs123.cls"));
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{equals, equalTo, first, fstEqSnd, second, setFirst, setSecond, "
        "swap}\n");
}

TEST_CASE("query sig prints the rendered class signature") {
  RunResult r = run_cli("query sig E " + fixture("figs123.cls"));
  CHECK(r.code == 0);
  CHECK(r.out == "sig E ext D { bar: ()->A, meth: ()->A }\n");
}

TEST_CASE("query rectype prints mu notation at the requested depth") {
  RunResult a = run_cli("query rectype A " + fixture("figs123.cls"));
  CHECK(a.out == "record_type {}\n");

  RunResult object = run_cli("query rectype Object " + fixture("figs123.cls"));
  CHECK(object.out ==
        "record_type μO. { B equals(O) } and μB. { B and(B), B or(B), "
        "B not() }\n");

  RunResult shallow =
      run_cli("--inline-depth 0 query rectype C " + fixture("figs123.cls"));
  CHECK(shallow.out ==
        "record_type { D foo(D) } and μD. { A bar() } and μA. {}\n");
}

TEST_CASE("query on an unbound class exits 2") {
  RunResult r = run_cli("query shape Nope " + fixture("figs123.cls"));
  CHECK(r.code == 2);
  CHECK(r.err.find("Nope") != std::string::npos);
}

TEST_CASE("subtype prints a verdict and encodes it in the exit code") {
  RunResult yes = run_cli("subtype structural D B " + fixture("abcde.cls"));
  CHECK(yes.code == 0);
  CHECK(yes.out == "true\n");

  RunResult no = run_cli("subtype nominal D B " + fixture("abcde.cls"));
  CHECK(no.code == 1);
  CHECK(no.out == "false\n");

  RunResult refl = run_cli("subtype nominal A A " + fixture("abcde.cls"));
  CHECK(refl.code == 0);
  CHECK(refl.out == "true\n");

  RunResult unknown = run_cli("subtype nominal A Nope " + fixture("abcde.cls"));
  CHECK(unknown.code == 2);
}

TEST_CASE("report annotates spurious pairs as unwarranted is-a") {
  RunResult r = run_cli("report " + fixture("abcde.cls"));
  CHECK(r.code == 0);
  CHECK(r.out.find("mode: width\n") != std::string::npos);
  CHECK(r.out.find("D <: B  (unwarranted is-a)") != std::string::npos);
  CHECK(r.out.find("genuine pairs:\n") != std::string::npos);
  CHECK(r.out.find("  E <: D\n") != std::string::npos);
  CHECK(r.out.find("diagnostics: none\n") != std::string::npos);
}

TEST_CASE("report lists genuine pairs for the two-file corpus") {
  RunResult joined = run_cli("report " + fixture("object.cls") + " " +
                             fixture("pair.cls"));
  CHECK(joined.code == 0);
  CHECK(joined.out.find("  Pair <: Object\n") != std::string::npos);

  RunResult merged = run_cli("report " + fixture("objects.cls"));
  CHECK(merged.out == joined.out);
}

TEST_CASE("report on an empty program is a zero-pair report") {
  RunResult r = run_cli("report " + fixture("empty.cls"));
  CHECK(r.code == 0);
  CHECK(r.out.find("classes: 1, ordered pairs: 0\n") != std::string::npos);
  CHECK(r.out.find("genuine pairs: none\n") != std::string::npos);
}

TEST_CASE("variance mode is reported in the header") {
  RunResult r = run_cli("--mode variance report " + fixture("abcde.cls"));
  CHECK(r.code == 0);
  CHECK(r.out.find("mode: variance\n") != std::string::npos);
}

TEST_CASE("json reports follow the published schema") {
  RunResult r = run_cli("--format json report " + fixture("abcde.cls"));
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.contains("classes"));
  REQUIRE(doc.contains("pairs"));
  REQUIRE(doc.contains("diagnostics"));
  CHECK(doc["classes"].size() == 6);
  CHECK(doc["classes"][0]["name"] == "A");
  CHECK(doc["diagnostics"].empty());

  bool found = false;
  for (const auto& pair : doc["pairs"]) {
    if (pair["sub"] == "D" && pair["sup"] == "B") {
      found = true;
      CHECK(pair["nominal"] == false);
      CHECK(pair["structural"] == true);
      CHECK(pair["class"] == "spurious");
    }
  }
  CHECK(found);
}

TEST_CASE("json diagnostics carry file, position, kind and message") {
  RunResult r =
      run_cli("--format json report " + fixture("mutations/ctor_arity.cls"));
  CHECK(r.code == 0);
  nlohmann::json doc = nlohmann::json::parse(r.out);
  REQUIRE(doc["diagnostics"].size() == 1);
  const auto& d = doc["diagnostics"][0];
  CHECK(d["line"] == 52);
  CHECK(d["col"] == 12);
  CHECK(d["kind"] == "ArgArityMismatch");
  CHECK(d["message"] ==
        "constructor of class 'Pair' expects 2 arguments, got 1");
}

TEST_CASE("json output is byte-identical across runs and round-trips") {
  for (const char* name : {"figs123.cls", "abcde.cls", "set_multiset.cls"}) {
    CAPTURE(name);
    std::string cmd = "--format json report " + fixture(name);
    RunResult first = run_cli(cmd);
    RunResult second = run_cli(cmd);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);

    nlohmann::ordered_json doc = nlohmann::ordered_json::parse(first.out);
    CHECK(doc.dump(2) + "\n" == first.out);
  }
}

TEST_CASE("flag errors exit 2, help exits 0") {
  RunResult bad_mode = run_cli("--mode bogus report " + fixture("abcde.cls"));
  CHECK(bad_mode.code == 2);

  RunResult bad_cmd = run_cli("frobnicate");
  CHECK(bad_cmd.code == 2);

  RunResult help = run_cli("--help");
  CHECK(help.code == 0);
  CHECK(!help.out.empty());
}
