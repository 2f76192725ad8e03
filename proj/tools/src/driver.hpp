#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "nomstruct/record_type.hpp"

namespace nomstruct {

struct CliConfig {
  SubtypeMode mode = SubtypeMode::WidthOnly;
  bool json = false;
  int inline_depth = 1;
};

// Exit codes: 0 clean, 1 type diagnostics, 2 parse or table errors.
int run_check(const std::vector<std::string>& paths, std::ostream& out,
              std::ostream& err);

// kind: shape | sig | rectype. Exit 0, or 2 on errors/unknown class.
int run_query(const std::vector<std::string>& paths, const std::string& kind,
              const std::string& class_name, const CliConfig& config,
              std::ostream& out, std::ostream& err);

// relation: nominal | structural. Exit 0 when the subtyping holds, 1 when
// it does not, 2 on errors.
int run_subtype(const std::vector<std::string>& paths,
                const std::string& relation, const std::string& sub,
                const std::string& sup, const CliConfig& config,
                std::ostream& out, std::ostream& err);

int run_report(const std::vector<std::string>& paths, const CliConfig& config,
               std::ostream& out, std::ostream& err);

}  // namespace nomstruct
