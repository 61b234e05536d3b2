#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tgclaims/claims.hpp"
#include "tgclaims/grid.hpp"
#include "tgclaims/majorization.hpp"
#include "tgclaims/theorems.hpp"

namespace tgclaims {

/// A comparison scenario as described by a JSON file. portfolio_a is the
/// dominating side (chain input); portfolio_b the dominated side (chain
/// output); all theorem checks conclude "extreme(b) precedes extreme(a)".
struct Scenario {
  Portfolio portfolio_a;
  Portfolio portfolio_b;
  std::optional<HFunction> h;
  std::vector<TTransform> chain;  // empty when none supplied
  Extreme extreme = Extreme::largest;
  GridSpec grid;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Parses and validates a scenario. Malformed inputs raise
/// std::invalid_argument with a field-level diagnostic.
Scenario parse_scenario(const std::string& json_text);
Scenario load_scenario(const std::string& path);

/// Re-serialization of the resolved scenario (defaults filled in), embedded
/// in every report for reproducibility.
std::string scenario_to_json(const Scenario& sc);

struct CommandResult {
  bool satisfied = false;  // all requested conditions/checks hold
  std::string json;
  std::string text;
};

/// Theorem selectors: largest-chain, largest-rh, smallest-st, smallest-hr,
/// smallest-disp, bounds.
CommandResult run_check(const Scenario& sc, const std::string& theorem_selector);

/// Order selectors: st, hr, rh, disp. Checks extreme(b) against extreme(a).
CommandResult run_verify(const Scenario& sc, const std::string& order_selector);

/// Writes eight CSVs into out_dir: survival curves (header x,sf) and detail
/// curves (header x,cdf,sf,hazard_or_rh) for both extremes of both
/// portfolios, 512 quantile-spaced points each. satisfied reports whether
/// the b-curve stays below the a-curve for the scenario's extreme.
CommandResult run_curves(const Scenario& sc, const std::string& out_dir);

/// Monte Carlo cross-check of all four extreme distributions against their
/// closed forms, plus a variance comparison for the scenario's extreme.
CommandResult run_simulate(const Scenario& sc, std::uint64_t count);

/// Writes via a sibling temporary file and rename, so readers never observe
/// a partial file.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace tgclaims
