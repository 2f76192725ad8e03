#include "driver.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "nomstruct/analyzer.hpp"
#include "nomstruct/parser.hpp"
#include "nomstruct/signature.hpp"
#include "render.hpp"

namespace nomstruct {

namespace {

// Parses every input file and builds one table from the concatenated
// declarations. All parse and table errors go to err; nullopt on any.
std::optional<ClassTable> load_table(const std::vector<std::string>& paths,
                                     std::ostream& err) {
  std::vector<ClassDeclAst> decls;
  bool failed = false;
  for (const std::string& path : paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      err << "cannot open file '" << path << "'\n";
      failed = true;
      continue;
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    SourceProgram src{buffer.str(), path};
    ParseResult parsed = parse_program(src);
    for (const Diag& diag : parsed.errors) {
      err << format_error(path, diag) << "\n";
      failed = true;
    }
    for (ClassDeclAst& decl : parsed.decls) decls.push_back(std::move(decl));
  }
  if (failed) return std::nullopt;

  BuildResult built = build_class_table(std::move(decls));
  if (!built.errors.empty()) {
    for (const Diag& diag : built.errors) {
      // Table errors carry no file of their own; the declaration they point
      // at does.
      err << "error: " << to_string(diag.kind) << ": " << diag.message
          << " (line " << diag.pos.line << ", col " << diag.pos.column
          << ")\n";
    }
    return std::nullopt;
  }
  return std::move(built.table);
}

}  // namespace

int run_check(const std::vector<std::string>& paths, std::ostream& out,
              std::ostream& err) {
  (void)out;
  std::optional<ClassTable> table = load_table(paths, err);
  if (!table) return 2;
  std::vector<TypeDiagnostic> diags = typecheck_bodies(*table);
  for (const TypeDiagnostic& diag : diags) err << format_diagnostic(diag) << "\n";
  return diags.empty() ? 0 : 1;
}

int run_query(const std::vector<std::string>& paths, const std::string& kind,
              const std::string& class_name, const CliConfig& config,
              std::ostream& out, std::ostream& err) {
  std::optional<ClassTable> table = load_table(paths, err);
  if (!table) return 2;
  try {
    if (kind == "shape") {
      out << format_shape(shape_of(*table, class_name)) << "\n";
    } else if (kind == "sig") {
      out << render_signature(signature_of(*table, class_name)) << "\n";
    } else {
      out << render_mu(record_type_of(*table, class_name),
                       config.inline_depth)
          << "\n";
    }
  } catch (const UnknownClassError& e) {
    err << e.what() << "\n";
    return 2;
  }
  return 0;
}

int run_subtype(const std::vector<std::string>& paths,
                const std::string& relation, const std::string& sub,
                const std::string& sup, const CliConfig& config,
                std::ostream& out, std::ostream& err) {
  std::optional<ClassTable> table = load_table(paths, err);
  if (!table) return 2;
  try {
    bool verdict;
    if (relation == "nominal") {
      verdict = subsigns(signature_closure_of(*table, sub),
                         signature_closure_of(*table, sup));
    } else {
      TableRecordTypes records = build_table_record_types(*table);
      auto a = records.class_node.find(sub);
      auto b = records.class_node.find(sup);
      if (a == records.class_node.end()) throw UnknownClassError(sub);
      if (b == records.class_node.end()) throw UnknownClassError(sup);
      verdict = struct_subtype(records.graph, a->second, b->second,
                               config.mode);
    }
    out << (verdict ? "true" : "false") << "\n";
    return verdict ? 0 : 1;
  } catch (const UnknownClassError& e) {
    err << e.what() << "\n";
    return 2;
  }
}

int run_report(const std::vector<std::string>& paths, const CliConfig& config,
               std::ostream& out, std::ostream& err) {
  std::optional<ClassTable> table = load_table(paths, err);
  if (!table) return 2;
  Report report = full_report(*table, config.mode);
  out << (config.json ? render_json_report(report)
                      : render_text_report(report));
  return 0;
}

}  // namespace nomstruct
