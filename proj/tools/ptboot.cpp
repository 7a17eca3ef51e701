// ptboot - bootstrap spectra of Hermitian and PT-symmetric Hamiltonians.
//
// Subcommands: scan, minimize, refine, oracle, validate-v, derive.
// Grid axes are given as --dim name:lo:hi:step (repeatable); model parameters
// as --param key=value. Flags override config-file keys. PTBOOT_THREADS is
// the fallback for --threads.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "ptboot/io.hpp"
#include "ptboot/oracle.hpp"
#include "ptboot/recursion.hpp"
#include "ptboot/two_by_two.hpp"

namespace {

using namespace ptboot;

int env_threads() {
  const char* v = std::getenv("PTBOOT_THREADS");
  return v != nullptr ? std::atoi(v) : 0;
}

struct CommonArgs {
  std::string config_path;
  std::string model;
  std::vector<std::string> params;
  std::vector<std::string> dims;
  int K = 0;
  double tol = 0.0;
  int refine_iters = -1;
  int threads = -1;
  std::string out;
  std::string format;
  bool emit_points = false;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "flat key = value config file");
  cmd->add_option("--model", args.model, "model id");
  cmd->add_option("--param", args.params, "model parameter key=value (repeatable)");
  cmd->add_option("--dim", args.dims, "grid axis name:lo:hi:step (repeatable)");
  cmd->add_option("--K", args.K, "bootstrap matrix size");
  cmd->add_option("--tol", args.tol, "relative PSD tolerance scale");
  cmd->add_option("--refine-iters", args.refine_iters, "bisection steps per window edge");
  cmd->add_option("--threads", args.threads, "worker threads (0 = all cores)");
  cmd->add_option("--out", args.out, "output file path");
  cmd->add_option("--format", args.format, "json or csv");
  cmd->add_flag("--emit-points", args.emit_points, "dump the feasible point cloud");
}

RunConfig build_config(const CommonArgs& args) {
  RunConfig config;
  config.grid.threads = env_threads();
  if (!args.config_path.empty()) config = parse_config_file(args.config_path);
  if (!args.model.empty()) apply_config_entry(config, "model", args.model);
  for (const auto& p : args.params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw ConfigError("--param expects key=value, got " + p);
    apply_config_entry(config, p.substr(0, eq), p.substr(eq + 1));
  }
  for (const auto& d : args.dims) apply_config_entry(config, "dim", d);
  if (args.K > 0) config.grid.K = args.K;
  if (args.tol > 0) config.grid.tol_scale = args.tol;
  if (args.refine_iters >= 0) config.grid.refine_iters = args.refine_iters;
  if (args.threads >= 0) config.grid.threads = args.threads;
  if (!args.out.empty()) config.output_path = args.out;
  if (!args.format.empty()) config.format = args.format;
  if (args.emit_points) config.emit_points = true;
  return config;
}

void write_result(const ScanResult& result, const RunConfig& config) {
  if (config.output_path.empty()) {
    std::cout << scan_result_to_json(result) << "\n";
    return;
  }
  if (config.format == "csv")
    write_scan_result_csv(result, config.output_path);
  else
    write_scan_result_json(result, config.output_path);
}

int cmd_scan(const CommonArgs& args) {
  RunConfig config = build_config(args);
  config.validate();
  ScanResult result = scan(config.model, config.grid, config.emit_points);
  if (!has_energy_objective(config.model.id)) {
    for (auto& w : result.windows) w = refine_window(config.model, w, config.grid);
  }
  write_result(result, config);
  std::cerr << "scan: " << result.windows.size() << " window(s), "
            << result.stats.points_tested << " points tested, "
            << result.stats.points_skipped << " skipped\n";
  if (!has_energy_objective(config.model.id) && result.windows.empty()) return 2;
  if (has_energy_objective(config.model.id) && !result.min_energy) return 2;
  return 0;
}

int cmd_minimize(const CommonArgs& args, const std::string& sweep) {
  RunConfig config = build_config(args);
  if (!sweep.empty()) config.model.params["eps"] = parse_dim(sweep).lo;
  config.validate();

  nlohmann::json rows = nlohmann::json::array();
  std::ostringstream csv;
  csv << "eps,E_min,x2,p2\n";
  auto run_one = [&](double eps_value, bool sweeping) {
    ModelSpec model = config.model;
    if (sweeping) model.params["eps"] = eps_value;
    const auto [emin, argmin] = minimize_energy_feasible(model, config.grid);
    rows.push_back({{"eps", model.param("eps")},
                    {"E_min", emin},
                    {"x2", argmin.free_moments[0]},
                    {"p2", argmin.free_moments[1]}});
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", model.param("eps"), emin,
                  argmin.free_moments[0], argmin.free_moments[1]);
    csv << buf;
  };

  if (!sweep.empty()) {
    const GridDim s = parse_dim(sweep);
    if (s.name != "eps") throw ConfigError("--sweep currently supports eps only");
    for (Index i = 0; i < s.count(); ++i) run_one(s.point(i), true);
  } else {
    run_one(0.0, false);
  }

  if (config.output_path.empty()) {
    std::cout << rows.dump(2) << "\n";
  } else if (config.format == "csv") {
    std::ofstream out(config.output_path);
    out << csv.str();
  } else {
    std::ofstream out(config.output_path);
    out << rows.dump(2) << "\n";
  }
  return 0;
}

int cmd_refine(const CommonArgs& args, const std::string& in_path) {
  ParsedScanResult prev = read_scan_result_json(in_path);
  RunConfig config;
  config.model = prev.model;
  config.grid = prev.grid;
  config.grid.threads = env_threads();
  if (args.refine_iters >= 0) config.grid.refine_iters = args.refine_iters;
  if (args.tol > 0) config.grid.tol_scale = args.tol;
  if (!args.out.empty()) config.output_path = args.out;
  if (!args.format.empty()) config.format = args.format;
  config.validate();

  ScanResult result;
  result.model = config.model;
  result.grid = config.grid;
  for (const auto& w : prev.windows)
    result.windows.push_back(refine_window(config.model, w, config.grid));
  write_result(result, config);
  return 0;
}

int cmd_oracle(const std::string& model, const std::vector<std::string>& params) {
  std::map<std::string, double> kv;
  for (const auto& p : params) {
    const auto eq = p.find('=');
    if (eq == std::string::npos) throw ConfigError("--param expects key=value");
    kv[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
  }
  auto get = [&kv](const std::string& k, double fallback) {
    return kv.count(k) ? kv[k] : fallback;
  };

  nlohmann::json j;
  if (model == "exact_shifted_sho") {
    j["value"] = exact_shifted_sho(static_cast<int>(get("n", 0)), get("eps", 0.0));
  } else if (model == "exact_swanson") {
    j["value"] = exact_swanson(static_cast<int>(get("n", 0)), get("c", 0.0));
  } else if (model == "exact_poschl_teller") {
    j["values"] = exact_poschl_teller(static_cast<int>(get("lambda", 1)));
  } else if (model == "exact_2x2") {
    const auto [lo, hi] = exact_2x2(get("r", 0.0), get("s", 1.0), get("theta", 0.0));
    j["values"] = {lo, hi};
  } else if (model == "exact_coupled_sho_ground") {
    j["value"] = exact_coupled_sho_ground(get("eps", 0.0));
  } else if (model == "fd_poschl_teller" || model == "fd_quartic_pt" ||
             model == "fd_quartic_direct") {
    OracleModel om = OracleModel::poschl_teller_hermitian;
    double param = get("lambda", 3);
    double L = get("L", 12.0);
    if (model == "fd_quartic_pt") {
      om = OracleModel::quartic_pt;
      param = get("alpha", 16.0);
    } else if (model == "fd_quartic_direct") {
      om = OracleModel::quartic_direct;
      param = 0.0;
      L = get("L", 8.0);
    }
    const auto spec = fd_diagonalize(om, param, static_cast<int>(get("N", 1000)), L,
                                     static_cast<int>(get("count", 3)));
    j["values"] = spec.eigenvalues;
    j["richardson_error"] = spec.richardson_error;
    j["N"] = spec.grid_points;
    j["L"] = spec.box_halfwidth;
  } else {
    throw ConfigError("unknown oracle model: " + model);
  }
  std::cout << j.dump(2) << "\n";
  return 0;
}

int cmd_validate_v(double r, double s, double theta) {
  const VValidation v = validate_v_2x2(r, s, theta);
  auto line = [](const char* name, bool ok) {
    std::cout << name << ": " << (ok ? "PASS" : "FAIL") << "\n";
  };
  line("similarity VHV^-1 = H^dagger", v.similarity_ok);
  line("hermiticity V = V^dagger", v.hermitian_ok);
  line("positivity eig(V) > 0", v.positive_ok);
  std::cout << "max deviation: " << v.max_deviation << "\n";
  return v.all_ok() ? 0 : 2;
}

int cmd_derive(const std::string& coeffs) {
  PolynomialPotential V;
  std::stringstream ss(coeffs);
  std::string tok;
  while (std::getline(ss, tok, ',')) V.coefficients.push_back(std::stod(tok));
  const RecursionRelation rel = derive_x_moment_recursion(V);
  std::cout << rel.to_json() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bootstrap solver for Hermitian and PT-symmetric spectra"};
  app.require_subcommand(1);

  CommonArgs scan_args, minimize_args, refine_args;
  std::string sweep, refine_in, oracle_model, derive_coeffs;
  std::vector<std::string> oracle_params;
  double vr = 0, vs = 1, vtheta = 0;

  add_common(app.add_subcommand("scan", "scan a search grid and extract windows"), scan_args);

  auto* minimize = app.add_subcommand("minimize", "minimize energy over the feasible region");
  add_common(minimize, minimize_args);
  minimize->add_option("--sweep", sweep, "sweep spec eps:lo:hi:step");

  auto* refine = app.add_subcommand("refine", "re-refine windows from a JSON result");
  add_common(refine, refine_args);
  refine->add_option("--in", refine_in, "input scan result (json)")->required();

  auto* oracle = app.add_subcommand("oracle", "print reference spectra");
  oracle->add_option("--model", oracle_model, "oracle id")->required();
  oracle->add_option("--param", oracle_params, "key=value (repeatable)");

  auto* validate = app.add_subcommand("validate-v", "check the 2x2 metric operator");
  validate->add_option("--r", vr)->required();
  validate->add_option("--s", vs)->required();
  validate->add_option("--theta", vtheta)->required();

  auto* derive = app.add_subcommand("derive", "derive the x-moment recursion for p^2 + V(x)");
  derive->add_option("--coeffs", derive_coeffs, "comma-separated c_0,c_1,... of V")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand("scan")) return cmd_scan(scan_args);
    if (app.got_subcommand("minimize")) return cmd_minimize(minimize_args, sweep);
    if (app.got_subcommand("refine")) return cmd_refine(refine_args, refine_in);
    if (app.got_subcommand("oracle")) return cmd_oracle(oracle_model, oracle_params);
    if (app.got_subcommand("validate-v")) return cmd_validate_v(vr, vs, vtheta);
    if (app.got_subcommand("derive")) return cmd_derive(derive_coeffs);
  } catch (const NoFeasiblePoint& err) {
    std::cerr << "no feasible point: " << err.what() << "\n";
    return 2;
  } catch (const ConfigError& err) {
    std::cerr << "config error: " << err.what() << "\n";
    return 1;
  } catch (const Error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 1;
  }
  return 1;
}
