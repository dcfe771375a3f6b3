#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lahid/verify.hpp"

namespace lahid {

enum class ReportFormat { text, json, csv };

/// Parses "text", "json" or "csv".
std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Deterministic rendering. JSON carries big integers as decimal strings;
/// `route_names` fixes the CSV column order.
std::string emit_report(const std::vector<VerificationReport>& reports, ReportFormat format,
                        const std::vector<std::string>& route_names);

}  // namespace lahid
