// Batch front-end: scenario ingestion, sufficient-condition checks, numeric
// order verification, curve emission, and Monte Carlo reports. All
// computation goes through the shared library's C interface.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tgclaims.h"

namespace {

struct ScenarioDeleter {
  void operator()(tgc_scenario* s) const { tgc_scenario_free(s); }
};
struct ReportDeleter {
  void operator()(tgc_report* r) const { tgc_report_free(r); }
};
using ScenarioPtr = std::unique_ptr<tgc_scenario, ScenarioDeleter>;
using ReportPtr = std::unique_ptr<tgc_report, ReportDeleter>;

int fail_input(const std::string& context) {
  std::cerr << "error: " << context << ": " << tgc_last_error() << "\n";
  return 1;
}

// Temp-then-rename so partially written reports are never observable.
bool write_atomic(const std::string& path, const std::string& content) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) return false;
    out << content;
    out.flush();
    if (!out) return false;
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    return false;
  }
  return true;
}

int emit_report(const tgc_report* rep, const std::string& out_dir,
                const std::string& stem) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    std::cerr << "error: cannot create output directory '" << out_dir << "'\n";
    return 1;
  }
  if (!write_atomic(out_dir + "/" + stem + ".json", tgc_report_json(rep)) ||
      !write_atomic(out_dir + "/" + stem + ".txt", tgc_report_text(rep))) {
    std::cerr << "error: cannot write report files in '" << out_dir << "'\n";
    return 1;
  }
  std::cout << tgc_report_text(rep);
  return tgc_report_satisfied(rep) ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extreme claim amounts: exact distributions, ordering conditions, "
               "numeric and Monte Carlo verification"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = ".";
  std::string theorem;
  std::string order;
  std::uint64_t count = 1000000;
  std::optional<int> grid_points;
  std::optional<std::uint64_t> seed;
  bool validate_only = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--scenario", scenario_path, "scenario JSON file")
        ->required();
    sub->add_option("--out", out_dir, "output directory (default: .)");
    sub->add_option("--grid-points", grid_points, "override grid point count");
    sub->add_option("--seed", seed, "override scenario seed");
    sub->add_flag("--validate-only", validate_only,
                  "parse and validate the scenario, then exit");
  };

  CLI::App* cmd_check =
      app.add_subcommand("check", "check a sufficient condition's hypotheses");
  add_common(cmd_check);
  cmd_check
      ->add_option("--theorem", theorem,
                   "largest-chain | largest-rh | smallest-st | smallest-hr | "
                   "smallest-disp | bounds")
      ->required();

  CLI::App* cmd_verify =
      app.add_subcommand("verify", "verify a stochastic order numerically");
  add_common(cmd_verify);
  cmd_verify->add_option("--order", order, "st | hr | rh | disp")->required();

  CLI::App* cmd_curves =
      app.add_subcommand("curves", "emit survival and detail curves as CSV");
  add_common(cmd_curves);

  CLI::App* cmd_simulate =
      app.add_subcommand("simulate", "Monte Carlo cross-check of the formulas");
  add_common(cmd_simulate);
  cmd_simulate->add_option("--count", count, "draws per distribution (>= 10^4)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // normalize usage errors onto the input-error code
  }

  tgc_scenario* raw = nullptr;
  if (tgc_scenario_load(scenario_path.c_str(), &raw) != TGC_OK)
    return fail_input("loading scenario");
  ScenarioPtr sc(raw);

  if (validate_only) {
    std::cout << "scenario OK: " << scenario_path << "\n";
    return 0;
  }

  if (grid_points && tgc_scenario_set_grid_points(sc.get(), *grid_points) != TGC_OK)
    return fail_input("applying --grid-points");
  if (seed && tgc_scenario_set_seed(sc.get(), *seed) != TGC_OK)
    return fail_input("applying --seed");

  tgc_report* rep_raw = nullptr;
  tgc_status status = TGC_ERR_INTERNAL;
  std::string stem;
  if (cmd_check->parsed()) {
    status = tgc_run_check(sc.get(), theorem.c_str(), &rep_raw);
    stem = "check_" + theorem;
  } else if (cmd_verify->parsed()) {
    status = tgc_run_verify(sc.get(), order.c_str(), &rep_raw);
    stem = "verify_" + order;
  } else if (cmd_curves->parsed()) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
      std::cerr << "error: cannot create output directory '" << out_dir << "'\n";
      return 1;
    }
    status = tgc_run_curves(sc.get(), out_dir.c_str(), &rep_raw);
    stem = "curves";
  } else if (cmd_simulate->parsed()) {
    status = tgc_run_simulate(sc.get(), count, &rep_raw);
    stem = "simulate";
  }

  if (status != TGC_OK) return fail_input("running command");
  ReportPtr rep(rep_raw);
  return emit_report(rep.get(), out_dir, stem);
}
