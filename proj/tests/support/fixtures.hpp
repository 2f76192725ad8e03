#pragma once

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>

#include "nomstruct/class_table.hpp"
#include "nomstruct/parser.hpp"
#include "nomstruct/source.hpp"

namespace nomstruct::testsupport {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::fprintf(stderr, "cannot open %s\n", path.c_str());
    std::abort();
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

inline SourceProgram program_from_file(const std::string& path) {
  return SourceProgram{read_file(path), path};
}

// Parse + validate input the test assumes to be good; aborts loudly so a
// broken fixture cannot masquerade as a passing test.
inline ClassTable must_table(std::string text,
                             std::string origin = "<test>") {
  ParseResult parsed =
      parse_program(SourceProgram{std::move(text), std::move(origin)});
  if (!parsed.errors.empty()) {
    for (const Diag& d : parsed.errors)
      std::fprintf(stderr, "parse: %s (line %d)\n", d.message.c_str(),
                   d.pos.line);
    std::abort();
  }
  BuildResult built = build_class_table(std::move(parsed.decls));
  if (!built.table) {
    for (const Diag& d : built.errors)
      std::fprintf(stderr, "table: %s\n", d.message.c_str());
    std::abort();
  }
  return *std::move(built.table);
}

inline ClassTable must_table_file(const std::string& path) {
  return must_table(read_file(path), path);
}

}  // namespace nomstruct::testsupport
