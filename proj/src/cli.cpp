#include "lahid/cli.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "lahid/comb.hpp"

namespace lahid::cli {

namespace {

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

void check_range(const char* what, Index lo, Index hi) {
  if (lo > hi) throw std::invalid_argument(std::string("empty ") + what + " range");
}

Route resolve(const std::string& name, const std::vector<Route>& extra) {
  if (auto r = standard_route(name)) return *r;
  for (const auto& r : extra)
    if (r.name == name) return r;
  throw std::invalid_argument("unknown route '" + name + "'");
}

void print_table(std::ostream& out, const Triangle& t, ReportFormat format) {
  if (format == ReportFormat::csv) {
    out << "n,k,value\n";
    for (Index n = 0; n <= t.max_n(); ++n)
      for (Index k = 0; k <= n; ++k) out << n << ',' << k << ',' << t.at(n, k).str() << '\n';
    return;
  }
  for (Index n = 0; n <= t.max_n(); ++n) {
    const auto& row = t.row(n);
    for (std::size_t k = 0; k < row.size(); ++k) out << (k ? " " : "") << row[k].str();
    out << '\n';
  }
}

int execute(const RunConfig& cfg, const std::vector<Route>& extra, std::ostream& out) {
  switch (cfg.command) {
    case Command::lah:
      out << lah(cfg.n, cfg.k).str() << '\n';
      return kExitOk;
    case Command::stirling1:
      out << stirling1(cfg.n, cfg.k).str() << '\n';
      return kExitOk;
    case Command::table:
      if (cfg.max_n < 0) throw std::domain_error("--max-n must be non-negative");
      print_table(out, cfg.table_kind == "lah" ? lah_triangle(cfg.max_n) : stirling1_triangle(cfg.max_n), cfg.format);
      return kExitOk;
    case Command::verify:
      break;
  }

  std::vector<Route> routes;
  for (const auto& name : cfg.routes) routes.push_back(resolve(name, extra));
  const auto reports = verify_grid({cfg.k_min, cfg.k_max}, {cfg.n_min, cfg.n_max}, routes, cfg.jobs);
  out << emit_report(reports, cfg.format, cfg.routes);
  if (cfg.format == ReportFormat::json) out << '\n';
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_match; });
  return ok ? kExitOk : kExitMismatch;
}

}  // namespace

std::vector<std::string> expand_routes(const std::string& spec, const RunConfig& cfg,
                                       const std::vector<Route>& extra) {
  std::vector<std::string> out;
  if (spec == "all") {
    out = {"r1", "r2", "r3", "r4", "r5"};
    if (cfg.k_max <= kRoute6DefaultMaxK && cfg.n_max <= kRoute6DefaultMaxN) out.push_back("r6");
    return out;
  }
  for (const auto& name : split_commas(spec)) {
    resolve(name, extra);
    if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::vector<Route>& extra_routes) {
  RunConfig cfg;
  std::string routes_spec = "all";
  std::string format_name = "text";

  CLI::App app{"Lah and Stirling numbers with multi-route identity verification", "lahid"};
  app.require_subcommand(1);

  auto* lah_cmd = app.add_subcommand("lah", "Print the Lah number L(n,k)");
  lah_cmd->add_option("--n", cfg.n)->required();
  lah_cmd->add_option("--k", cfg.k)->required();

  auto* s1_cmd = app.add_subcommand("stirling1", "Print the signed Stirling number s(n,k) of the first kind");
  s1_cmd->add_option("--n", cfg.n)->required();
  s1_cmd->add_option("--k", cfg.k)->required();

  auto* table_cmd = app.add_subcommand("table", "Print a triangle of values");
  table_cmd->add_option("kind", cfg.table_kind)->required()->check(CLI::IsMember({"lah", "stirling1"}));
  table_cmd->add_option("--max-n", cfg.max_n)->required();
  table_cmd->add_option("--format", format_name)->check(CLI::IsMember({"text", "csv"}));

  auto* verify_cmd = app.add_subcommand("verify", "Check the Lah alternating-sum identity over a (k, n) grid");
  verify_cmd->add_option("--k-min", cfg.k_min)->required();
  verify_cmd->add_option("--k-max", cfg.k_max)->required();
  verify_cmd->add_option("--n-min", cfg.n_min)->required();
  verify_cmd->add_option("--n-max", cfg.n_max)->required();
  verify_cmd->add_option("--routes", routes_spec, "Comma-separated subset of r1..r6, or 'all'");
  verify_cmd->add_option("--format", format_name)->check(CLI::IsMember({"text", "json", "csv"}));
  verify_cmd->add_option("--jobs", cfg.jobs)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    cfg.format = *parse_report_format(format_name);
    if (lah_cmd->parsed()) {
      cfg.command = Command::lah;
    } else if (s1_cmd->parsed()) {
      cfg.command = Command::stirling1;
    } else if (table_cmd->parsed()) {
      cfg.command = Command::table;
    } else {
      cfg.command = Command::verify;
      if (cfg.k_min < 2) throw std::domain_error("--k-min must be >= 2");
      if (cfg.n_min < 0) throw std::domain_error("--n-min must be >= 0");
      check_range("k", cfg.k_min, cfg.k_max);
      check_range("n", cfg.n_min, cfg.n_max);
      cfg.routes = expand_routes(routes_spec, cfg, extra_routes);
    }
    return execute(cfg, extra_routes, out);
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace lahid::cli
