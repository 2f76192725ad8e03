#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "driver.hpp"

int main(int argc, char** argv) {
  CLI::App app{"nominal vs structural subtyping analyzer for a small "
               "class-based language"};
  app.require_subcommand(1);

  std::string mode = "width";
  std::string format = "text";
  int inline_depth = 1;
  app.add_option("--mode", mode, "structural subtyping mode")
      ->check(CLI::IsMember({"width", "variance"}));
  app.add_option("--format", format, "report output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--inline-depth", inline_depth,
                 "how deep acyclic record types are expanded in place");

  std::vector<std::string> paths;
  std::string query_kind, class_name, relation, sub, sup;

  CLI::App* check = app.add_subcommand("check", "parse and typecheck");
  check->fallthrough();
  check->add_option("paths", paths, "input files")->required();

  CLI::App* query = app.add_subcommand("query", "print one class's view");
  query->fallthrough();
  query->add_option("kind", query_kind, "shape | sig | rectype")
      ->required()
      ->check(CLI::IsMember({"shape", "sig", "rectype"}));
  query->add_option("class", class_name, "class name")->required();
  query->add_option("paths", paths, "input files")->required();

  CLI::App* subtype = app.add_subcommand("subtype", "decide one pair");
  subtype->fallthrough();
  subtype->add_option("relation", relation, "nominal | structural")
      ->required()
      ->check(CLI::IsMember({"nominal", "structural"}));
  subtype->add_option("sub", sub, "candidate subtype")->required();
  subtype->add_option("sup", sup, "candidate supertype")->required();
  subtype->add_option("paths", paths, "input files")->required();

  CLI::App* report = app.add_subcommand("report", "full differential report");
  report->fallthrough();
  report->add_option("paths", paths, "input files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  nomstruct::CliConfig config;
  config.mode = mode == "variance" ? nomstruct::SubtypeMode::Variance
                                   : nomstruct::SubtypeMode::WidthOnly;
  config.json = format == "json";
  config.inline_depth = inline_depth;

  if (check->parsed()) {
    return nomstruct::run_check(paths, std::cout, std::cerr);
  }
  if (query->parsed()) {
    return nomstruct::run_query(paths, query_kind, class_name, config,
                                std::cout, std::cerr);
  }
  if (subtype->parsed()) {
    return nomstruct::run_subtype(paths, relation, sub, sup, config,
                                  std::cout, std::cerr);
  }
  return nomstruct::run_report(paths, config, std::cout, std::cerr);
}
