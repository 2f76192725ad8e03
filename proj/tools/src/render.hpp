#pragma once

#include <string>
#include <vector>

#include "nomstruct/analyzer.hpp"

namespace nomstruct {

// Member names sorted case-insensitively (ties broken by raw bytes), the
// order every shape listing uses.
std::vector<std::string> ci_sorted(const Shape& shape);

std::string format_shape(const Shape& shape);

// `path:line:col: Kind: message`
std::string format_error(const std::string& origin, const Diag& diag);
std::string format_diagnostic(const TypeDiagnostic& diag);

std::string render_text_report(const Report& report);
std::string render_json_report(const Report& report);

}  // namespace nomstruct
