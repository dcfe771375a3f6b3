#include "lahid/report.hpp"

#include <sstream>

#include "json.hpp"

namespace lahid {

namespace {

std::string route_cell(const VerificationReport& r, const std::string& name) {
  if (auto it = r.route_values.find(name); it != r.route_values.end()) return it->second.str();
  if (auto it = r.route_errors.find(name); it != r.route_errors.end()) return "error: " + it->second;
  return "";
}

std::string emit_json(const std::vector<VerificationReport>& reports) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json routes = nlohmann::ordered_json::object();
    for (const auto& [name, v] : r.route_values) routes[name] = v.str();
    for (const auto& [name, msg] : r.route_errors) routes[name] = "error: " + msg;
    arr.push_back({{"k", r.instance.k()},
                   {"n", r.instance.n()},
                   {"reference", r.reference.str()},
                   {"routes", std::move(routes)},
                   {"all_match", r.all_match}});
  }
  return arr.dump();
}

std::string csv_escape(const std::string& cell) {
  if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
  std::string out = "\"";
  for (char c : cell) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string emit_csv(const std::vector<VerificationReport>& reports, const std::vector<std::string>& route_names) {
  std::ostringstream os;
  os << "k,n,reference";
  for (const auto& name : route_names) os << ',' << name;
  os << ",all_match\n";
  for (const auto& r : reports) {
    os << r.instance.k() << ',' << r.instance.n() << ',' << r.reference.str();
    for (const auto& name : route_names) os << ',' << csv_escape(route_cell(r, name));
    os << ',' << (r.all_match ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string emit_text(const std::vector<VerificationReport>& reports, const std::vector<std::string>& route_names) {
  std::ostringstream os;
  std::size_t failures = 0;
  for (const auto& r : reports) {
    os << "k=" << r.instance.k() << " n=" << r.instance.n() << " reference=" << r.reference.str();
    for (const auto& name : route_names) os << ' ' << name << '=' << route_cell(r, name);
    os << (r.all_match ? " ok" : " MISMATCH") << '\n';
    if (!r.all_match) ++failures;
  }
  os << reports.size() << " instances, " << failures << " mismatches\n";
  return os.str();
}

}  // namespace

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  return std::nullopt;
}

std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                        const std::vector<std::string>& route_names) {
  switch (format) {
    case ReportFormat::json: return emit_json(reports);
    case ReportFormat::csv: return emit_csv(reports, route_names);
    case ReportFormat::text: break;
  }
  return emit_text(reports, route_names);
}

}  // namespace lahid
