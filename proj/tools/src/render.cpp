#include "render.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <utility>

#include "json.hpp"

namespace nomstruct {

namespace {

bool ci_less(const std::string& a, const std::string& b) {
  auto lower = [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  };
  std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    char la = lower(a[i]);
    char lb = lower(b[i]);
    if (la != lb) return la < lb;
  }
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<std::string> ci_sorted(const Shape& shape) {
  std::vector<std::string> names(shape.begin(), shape.end());
  std::sort(names.begin(), names.end(), ci_less);
  return names;
}

std::string format_shape(const Shape& shape) {
  std::string out = "{";
  bool first = true;
  for (const std::string& name : ci_sorted(shape)) {
    if (!first) out += ", ";
    first = false;
    out += name;
  }
  out += "}";
  return out;
}

std::string format_error(const std::string& origin, const Diag& diag) {
  return origin + ":" + std::to_string(diag.pos.line) + ":" +
         std::to_string(diag.pos.column) + ": " +
         std::string(to_string(diag.kind)) + ": " + diag.message;
}

std::string format_diagnostic(const TypeDiagnostic& diag) {
  return diag.origin + ":" + std::to_string(diag.pos.line) + ":" +
         std::to_string(diag.pos.column) + ": " +
         std::string(to_string(diag.kind)) + ": " + diag.message;
}

std::string render_text_report(const Report& report) {
  std::string out;
  out += "mode: ";
  out += report.mode == SubtypeMode::WidthOnly ? "width" : "variance";
  out += "\n";
  out += "classes: " + std::to_string(report.classes.size()) +
         ", ordered pairs: " + std::to_string(report.pairs.size()) + "\n\n";

  std::size_t name_width = 0;
  for (const ReportClassInfo& info : report.classes)
    name_width = std::max(name_width, info.name.size());

  auto pad = [](const std::string& s, std::size_t width) {
    return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
  };

  for (const ReportClassInfo& info : report.classes) {
    std::string supers;
    for (std::size_t i = 0; i < info.supers.size(); ++i) {
      if (i) supers += ", ";
      supers += info.supers[i];
    }
    if (supers.empty()) supers = "-";
    out += "  " + pad(info.name, name_width) + "  supers: " +
           pad(supers, name_width) + "  shape: " + format_shape(info.shape) +
           "\n";
  }

  std::map<std::pair<std::string, std::string>, PairClass> verdicts;
  for (const PairVerdict& v : report.pairs)
    verdicts.emplace(std::make_pair(v.sub, v.sup), v.classification);
  auto cell = [&](const std::string& sub,
                  const std::string& sup) -> std::string {
    if (sub == sup) return ".";
    auto it = verdicts.find({sub, sup});
    if (it == verdicts.end()) return "?";
    switch (it->second) {
      case PairClass::Genuine: return "G";
      case PairClass::Spurious: return "S";
      case PairClass::Unrelated: return "U";
      case PairClass::Anomaly: return "!";
    }
    return "?";
  };

  out += "\npair matrix (row <: column): G=genuine S=spurious U=unrelated "
         "!=anomaly\n";
  out += "  " + std::string(name_width, ' ') + " |";
  for (const ReportClassInfo& info : report.classes) out += " " + info.name;
  out += "\n";
  out += "  " + std::string(name_width, '-') + "-+";
  for (const ReportClassInfo& info : report.classes)
    out += std::string(info.name.size() + 1, '-');
  out += "\n";
  for (const ReportClassInfo& row : report.classes) {
    out += "  " + pad(row.name, name_width) + " |";
    for (const ReportClassInfo& col : report.classes) {
      out += " " + pad(cell(row.name, col.name), col.name.size());
    }
    // Trim the trailing pad of the last column.
    while (!out.empty() && out.back() == ' ') out.pop_back();
    out += "\n";
  }

  auto list_pairs = [&](PairClass c, const char* title, const char* note) {
    std::vector<const PairVerdict*> selected;
    for (const PairVerdict& v : report.pairs)
      if (v.classification == c) selected.push_back(&v);
    out += "\n";
    out += title;
    if (selected.empty()) {
      out += " none\n";
      return;
    }
    out += "\n";
    for (const PairVerdict* v : selected) {
      out += "  " + v->sub + " <: " + v->sup;
      if (note[0]) out += std::string("  (") + note + ")";
      out += "\n";
    }
  };
  list_pairs(PairClass::Genuine, "genuine pairs:", "");
  list_pairs(PairClass::Spurious, "spurious pairs:", "unwarranted is-a");
  bool any_anomaly = std::any_of(
      report.pairs.begin(), report.pairs.end(),
      [](const PairVerdict& v) { return v.classification == PairClass::Anomaly; });
  if (any_anomaly) list_pairs(PairClass::Anomaly, "anomalies:", "");

  out += "\ndiagnostics:";
  if (report.diagnostics.empty()) {
    out += " none\n";
  } else {
    out += "\n";
    for (const TypeDiagnostic& diag : report.diagnostics)
      out += "  " + format_diagnostic(diag) + "\n";
  }
  return out;
}

std::string render_json_report(const Report& report) {
  nlohmann::ordered_json j;
  j["classes"] = nlohmann::ordered_json::array();
  for (const ReportClassInfo& info : report.classes) {
    nlohmann::ordered_json c;
    c["name"] = info.name;
    c["shape"] = ci_sorted(info.shape);
    c["supers"] = info.supers;
    j["classes"].push_back(std::move(c));
  }
  j["pairs"] = nlohmann::ordered_json::array();
  for (const PairVerdict& v : report.pairs) {
    nlohmann::ordered_json p;
    p["sub"] = v.sub;
    p["sup"] = v.sup;
    p["nominal"] = v.nominal;
    p["structural"] = v.structural;
    p["class"] = std::string(to_string(v.classification));
    j["pairs"].push_back(std::move(p));
  }
  j["diagnostics"] = nlohmann::ordered_json::array();
  for (const TypeDiagnostic& diag : report.diagnostics) {
    nlohmann::ordered_json d;
    d["file"] = diag.origin;
    d["line"] = diag.pos.line;
    d["col"] = diag.pos.column;
    d["kind"] = std::string(to_string(diag.kind));
    d["message"] = diag.message;
    j["diagnostics"].push_back(std::move(d));
  }
  return j.dump(2) + "\n";
}

}  // namespace nomstruct
