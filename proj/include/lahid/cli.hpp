#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "lahid/report.hpp"
#include "lahid/verify.hpp"

namespace lahid::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

enum class Command { lah, stirling1, table, verify };

struct RunConfig {
  Command command = Command::verify;
  Index n = 0;
  Index k = 0;
  std::string table_kind;  // "lah" or "stirling1"
  Index max_n = 0;
  Index k_min = 2;
  Index k_max = 2;
  Index n_min = 0;
  Index n_max = 0;
  std::vector<std::string> routes;
  ReportFormat format = ReportFormat::text;
  unsigned jobs = 1;
};

/// Expands a --routes value ("all" or a comma list) against the grid bounds.
/// `extra` names are accepted alongside r1..r6. Throws std::invalid_argument
/// on unknown names.
std::vector<std::string> expand_routes(const std::string& spec, const RunConfig& cfg,
                                       const std::vector<Route>& extra = {});

/// Runs one invocation; `args` excludes the program name. `extra_routes`
/// registers additional named routes for --routes (used by tests).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::vector<Route>& extra_routes = {});

}  // namespace lahid::cli
