/* Command-line front end: identity sweeps with machine-readable reports,
 * object tables, and identity listing.
 * Exit codes: 0 all instances equal, 1 counterexample found, 2 usage error,
 * 3 I/O error. */

#include "partbinom/sweep.hpp"
#include "partbinom/tables.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

int do_verify(const partbinom::SweepConfig& cfg, const std::string& format,
              const std::string& out_path, bool timings) {
  if (!partbinom::find_identity(cfg.identity_id)) {
    std::cerr << "error: unknown identity '" << cfg.identity_id
              << "' (see `partbinom list`)\n";
    return 2;
  }
  std::vector<partbinom::IdentityReport> reports;
  try {
    reports = partbinom::run_sweep(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const std::string text =
      format == "tsv" ? partbinom::render_tsv(cfg, reports, timings)
                      : partbinom::render_json(cfg, reports, timings);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output file: " << out_path << '\n';
      return 3;
    }
    f << text;
    f.flush();
    if (!f) {
      std::cerr << "error: failed writing output file: " << out_path << '\n';
      return 3;
    }
  }
  std::size_t passed = 0;
  double total_ms = 0.0;
  for (const auto& rep : reports) {
    if (rep.equal) ++passed;
    total_ms += rep.elapsed_ms;
  }
  std::cerr << cfg.identity_id << ": " << reports.size()
            << (reports.size() == 1 ? " instance, " : " instances, ")
            << passed << " passed, " << reports.size() - passed
            << " failed (" << total_ms << " ms)\n";
  if (passed != reports.size()) {
    for (const auto& rep : reports) {
      if (rep.equal) continue;
      std::cerr << "counterexample:";
      for (const auto& [k, v] : rep.params) std::cerr << ' ' << k << '=' << v;
      std::cerr << "\n  lhs = " << rep.lhs << "\n  rhs = " << rep.rhs << '\n';
      break;
    }
    return 1;
  }
  return 0;
}

int do_list() {
  for (const auto& info : partbinom::identity_registry()) {
    if (info.hidden) continue;
    std::cout << info.id << "\n  params: " << info.params_sig
              << "\n  " << info.description << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verifier for partition binomial identities"};
  app.require_subcommand(1);

  partbinom::SweepConfig cfg;
  std::string format = "json";
  std::string out_path;
  bool timings = false;

  CLI::App* verify =
      app.add_subcommand("verify", "sweep one identity over a parameter grid");
  verify->add_option("--identity", cfg.identity_id, "registered identity id")
      ->required();
  verify->add_option("--n-max", cfg.n_max, "weight cap n")
      ->required()
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--r-max", cfg.r_max, "cap for r (defaults to n-max)")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--s-max", cfg.s_max, "cap for s (defaults to n-max)")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--umax", cfg.umax, "series truncation degree in u")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--oracle-cap", cfg.oracle_cap,
                     "max |lambda| for the subset-enumeration oracle")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--jobs", cfg.jobs, "parallel workers")
      ->check(CLI::Range(1, 1000000));
  verify->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "tsv"}));
  verify->add_option("--out", out_path, "report path (stdout when omitted)");
  verify->add_flag("--timings", timings,
                   "include per-instance elapsed_ms in the report "
                   "(not byte-reproducible)");

  std::string kind;
  long table_max = 6;
  CLI::App* table = app.add_subcommand("table", "print a table of core objects");
  table->add_option("--kind", kind, "genbinom | stirling | pjk")
      ->required()
      ->check(CLI::IsMember({"genbinom", "stirling", "pjk"}));
  table->add_option("--max", table_max, "row bound")
      ->check(CLI::Range(1, 1000000));

  CLI::App* list = app.add_subcommand("list", "list registered identities");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit clean, usage errors -> 2
  }

  try {
    if (verify->parsed()) return do_verify(cfg, format, out_path, timings);
    if (table->parsed()) {
      std::cout << partbinom::render_table(kind, table_max);
      return 0;
    }
    if (list->parsed()) return do_list();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
