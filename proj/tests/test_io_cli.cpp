#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "ptboot/io.hpp"

using namespace ptboot;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("ptboot_test_" + name);
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunConfig small_sho_config() {
  RunConfig c;
  c.model.id = ModelId::shifted_sho;
  c.model.params["eps"] = 0.5;
  c.grid.dims = {{"E", 1.0, 1.6, 0.01}};
  c.grid.K = 8;
  return c;
}

}  // namespace

TEST_CASE("dim parsing") {
  const GridDim d = parse_dim("E:0:5:0.01");
  CHECK(d.name == "E");
  CHECK(d.lo == 0.0);
  CHECK(d.hi == 5.0);
  CHECK(d.step == 0.01);
  CHECK_THROWS_AS(parse_dim("E:0:5"), ConfigError);
  CHECK_THROWS_AS(parse_dim("E:0:5:zero"), ConfigError);
}

TEST_CASE("flat config file parsing with comments and overrides") {
  const auto path = temp_file("config.cfg");
  {
    std::ofstream out(path);
    out << "# scan setup\n"
        << "model = shifted_sho\n"
        << "eps = 0.5\n"
        << "K = 8\n"
        << "tol = 1e-9\n"
        << "dim = E:0:5:0.01   # energy axis\n"
        << "out = w.json\n";
  }
  RunConfig c = parse_config_file(path.string());
  CHECK(c.model.id == ModelId::shifted_sho);
  CHECK(c.model.params.at("eps") == 0.5);
  CHECK(c.grid.K == 8);
  CHECK(c.grid.dims.size() == 1);
  CHECK(c.output_path == "w.json");

  apply_config_entry(c, "K", "10");  // flag-style override
  CHECK(c.grid.K == 10);
  fs::remove(path);
}

TEST_CASE("config errors carry line context") {
  const auto path = temp_file("bad.cfg");
  {
    std::ofstream out(path);
    out << "model = shifted_sho\nnot a kv line\n";
  }
  try {
    parse_config_file(path.string());
    FAIL("expected ConfigError");
  } catch (const ConfigError& err) {
    CHECK(std::string(err.what()).find(":2") != std::string::npos);
  }
  fs::remove(path);
}

TEST_CASE("json round-trip reproduces identical windows") {
  const RunConfig c = small_sho_config();
  const ScanResult first = scan(c.model, c.grid);
  REQUIRE_FALSE(first.windows.empty());

  const ParsedScanResult parsed = parse_scan_result_json(scan_result_to_json(first));
  CHECK(parsed.model.id == c.model.id);
  CHECK(parsed.model.params.at("eps") == 0.5);
  CHECK(parsed.grid.K == c.grid.K);

  const ScanResult second = scan(parsed.model, parsed.grid);
  REQUIRE(second.windows.size() == first.windows.size());
  for (std::size_t i = 0; i < first.windows.size(); ++i) {
    CHECK(second.windows[i].e_lo == first.windows[i].e_lo);
    CHECK(second.windows[i].e_hi == first.windows[i].e_hi);
    CHECK(parsed.windows[i].e_lo == first.windows[i].e_lo);
    CHECK(parsed.windows[i].e_hi == first.windows[i].e_hi);
  }
}

TEST_CASE("csv and json encode the same windows") {
  const RunConfig c = small_sho_config();
  const ScanResult res = scan(c.model, c.grid);
  const auto from_json = parse_scan_result_json(scan_result_to_json(res)).windows;
  const auto from_csv = parse_windows_csv(scan_result_to_csv(res));
  REQUIRE(from_json.size() == from_csv.size());
  for (std::size_t i = 0; i < from_json.size(); ++i) {
    CHECK(from_json[i].e_lo == from_csv[i].e_lo);
    CHECK(from_json[i].e_hi == from_csv[i].e_hi);
    CHECK(from_json[i].K == from_csv[i].K);
  }
}

TEST_CASE("csv point clouds carry coordinates and margins") {
  RunConfig c = small_sho_config();
  const ScanResult res = scan(c.model, c.grid, true);
  const std::string csv = scan_result_to_csv(res);
  CHECK(csv.rfind("E,min_eigenvalue\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') ==
        static_cast<long>(res.feasible_points.size()) + 1);
}

#ifdef PTBOOT_CLI_PATH

namespace {
int run_cli(const std::string& args) {
  const std::string cmd = std::string(PTBOOT_CLI_PATH) + " " + args + " 2>/dev/null >/dev/null";
  const int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}
}  // namespace

TEST_CASE("cli scan writes windows that bracket the ground state") {
  const auto out = temp_file("scan.json");
  const int rc = run_cli("scan --model shifted_sho --param eps=0.5 --K 8 --dim E:1.0:1.6:0.01 "
                         "--threads 2 --out " + out.string());
  CHECK(rc == 0);
  const auto parsed = read_scan_result_json(out.string());
  REQUIRE_FALSE(parsed.windows.empty());
  bool found = false;
  for (const auto& w : parsed.windows)
    if (w.e_lo <= 1.25 && 1.25 <= w.e_hi) found = true;
  CHECK(found);
  fs::remove(out);
}

TEST_CASE("cli refine consumes a previous result") {
  const auto out = temp_file("scan2.json");
  const auto refined = temp_file("refined.json");
  REQUIRE(run_cli("scan --model two_by_two --param r=1 --param s=1.4142135623730951 "
                  "--param theta=1.5707963267948966 --K 3 --tol 1e-14 "
                  "--dim E:0.5:1.5:0.005 --out " + out.string()) == 0);
  CHECK(run_cli("refine --in " + out.string() + " --out " + refined.string()) == 0);
  const auto parsed = read_scan_result_json(refined.string());
  REQUIRE(parsed.windows.size() == 1);
  CHECK(parsed.windows[0].e_hi - parsed.windows[0].e_lo <= 1e-6);
  fs::remove(out);
  fs::remove(refined);
}

TEST_CASE("cli minimize exits 2 on an infeasible box") {
  CHECK(run_cli("minimize --model coupled_sho --param eps=0.3 --K 5 "
                "--dim x2:0.01:0.1:0.01 --dim p2:0.01:0.1:0.01") == 2);
}

TEST_CASE("cli config errors exit 1") {
  CHECK(run_cli("scan --model no_such_model --dim E:0:1:0.1") == 1);
}

TEST_CASE("cli oracle and validate-v and derive run clean") {
  CHECK(run_cli("oracle --model exact_swanson --param n=0 --param c=1") == 0);
  CHECK(run_cli("validate-v --r 1 --s 1.41421 --theta 1.5708") == 0);
  CHECK(run_cli("derive --coeffs 0,0,2") == 0);
}

#endif  // PTBOOT_CLI_PATH
