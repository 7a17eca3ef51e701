#pragma once

#include <string>
#include <vector>

#include "ptboot/search.hpp"

namespace ptboot {

/// Fully specifies one run: model + grid + output options. Kept flat so runs
/// diff cleanly in regression suites.
struct RunConfig {
  ModelSpec model;
  GridSpec grid;
  std::string output_path;
  std::string format = "json";  // json | csv
  bool emit_points = false;

  void validate() const;
};

/// Flat key = value config file ('#' comments, blank lines ignored).
/// Recognized keys: model, K, tol, refine_iters, threads, out, format,
/// emit_points, dim (repeatable, "name:lo:hi:step"), and any model parameter
/// (eps, c, lambda, alpha, r, s, theta).
RunConfig parse_config_file(const std::string& path);

/// Apply one key = value pair (shared by the file parser and flag overrides).
void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value);

/// "name:lo:hi:step" -> GridDim.
GridDim parse_dim(const std::string& text);

/// Scan result serialization. The JSON schema is stable:
/// {model, params, K, tol, windows: [{e_lo, e_hi, witness}],
///  feasible_points?, min_energy?, stats}.
std::string scan_result_to_json(const ScanResult& result);
void write_scan_result_json(const ScanResult& result, const std::string& path);

/// CSV: one row per window "e_lo,e_hi,K", or one row per feasible point
/// "coords...,min_eigenvalue" when the result carries an emitted point cloud.
std::string scan_result_to_csv(const ScanResult& result);
void write_scan_result_csv(const ScanResult& result, const std::string& path);

/// Round-trip support: rebuild the inputs and windows from a JSON result.
struct ParsedScanResult {
  ModelSpec model;
  GridSpec grid;
  std::vector<FeasibleWindow> windows;
};
ParsedScanResult parse_scan_result_json(const std::string& text);
ParsedScanResult read_scan_result_json(const std::string& path);

/// Windows parsed back from the CSV window table (for cross-format checks).
std::vector<FeasibleWindow> parse_windows_csv(const std::string& text);

}  // namespace ptboot
