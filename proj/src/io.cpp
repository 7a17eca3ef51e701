#include "ptboot/io.hpp"

#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace ptboot {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return {};
  const auto b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

double to_double(const std::string& s, const std::string& what) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("cannot parse number '" + s + "' for " + what);
  }
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

json witness_to_json(const SearchPoint& p) {
  json j;
  j["E"] = p.E;
  j["free_moments"] = std::vector<double>(p.free_moments.begin(), p.free_moments.end());
  return j;
}

SearchPoint witness_from_json(const json& j) {
  SearchPoint p;
  p.E = j.at("E").get<double>();
  const auto fm = j.at("free_moments").get<std::vector<double>>();
  p.free_moments = Eigen::Map<const Eigen::VectorXd>(fm.data(), static_cast<Index>(fm.size()));
  return p;
}

}  // namespace

void RunConfig::validate() const {
  model.validate();
  grid.validate();
  if (format != "json" && format != "csv")
    throw ConfigError("format must be 'json' or 'csv', got '" + format + "'");
}

GridDim parse_dim(const std::string& text) {
  std::stringstream ss(text);
  std::string part;
  std::vector<std::string> parts;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (parts.size() != 4)
    throw ConfigError("dim must be 'name:lo:hi:step', got '" + text + "'");
  GridDim d;
  d.name = trim(parts[0]);
  d.lo = to_double(parts[1], "dim lo");
  d.hi = to_double(parts[2], "dim hi");
  d.step = to_double(parts[3], "dim step");
  d.validate();
  return d;
}

void apply_config_entry(RunConfig& config, const std::string& key, const std::string& value) {
  if (key == "model") {
    config.model.id = model_from_string(value);
  } else if (key == "K") {
    config.grid.K = static_cast<Index>(to_double(value, key));
  } else if (key == "tol") {
    config.grid.tol_scale = to_double(value, key);
  } else if (key == "refine_iters") {
    config.grid.refine_iters = static_cast<int>(to_double(value, key));
  } else if (key == "threads") {
    config.grid.threads = static_cast<int>(to_double(value, key));
  } else if (key == "out") {
    config.output_path = value;
  } else if (key == "format") {
    config.format = value;
  } else if (key == "emit_points") {
    config.emit_points = (value == "true" || value == "1");
  } else if (key == "dim") {
    config.grid.dims.push_back(parse_dim(value));
  } else {
    config.model.params[key] = to_double(value, "parameter " + key);
  }
}

RunConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  RunConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(lineno) + ": expected 'key = value'");
    try {
      apply_config_entry(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const ConfigError& err) {
      throw ConfigError(path + ":" + std::to_string(lineno) + ": " + err.what());
    }
  }
  return config;
}

std::string scan_result_to_json(const ScanResult& result) {
  json j;
  j["model"] = to_string(result.model.id);
  j["params"] = result.model.params;
  j["K"] = result.grid.K;
  j["tol"] = result.grid.tol_scale;
  j["refine_iters"] = result.grid.refine_iters;
  j["dims"] = json::array();
  for (const auto& d : result.grid.dims)
    j["dims"].push_back({{"name", d.name}, {"lo", d.lo}, {"hi", d.hi}, {"step", d.step}});
  j["windows"] = json::array();
  for (const auto& w : result.windows)
    j["windows"].push_back(
        {{"e_lo", w.e_lo}, {"e_hi", w.e_hi}, {"K", w.K}, {"witness", witness_to_json(w.witness)}});
  if (result.min_energy) {
    j["min_energy"] = {{"value", result.min_energy->first},
                       {"argmin", witness_to_json(result.min_energy->second)}};
  }
  if (!result.feasible_points.empty()) {
    j["feasible_points"] = json::array();
    for (const auto& fp : result.feasible_points) {
      json p = witness_to_json(fp.point);
      p["min_eigenvalue"] = fp.min_eigenvalue;
      j["feasible_points"].push_back(p);
    }
  }
  j["stats"] = {{"points_tested", result.stats.points_tested},
                {"points_feasible", result.stats.points_feasible},
                {"points_skipped", result.stats.points_skipped},
                {"max_abs_moment", result.stats.max_abs_moment},
                {"runtime_ms", result.stats.runtime_ms}};
  return j.dump(2);
}

void write_scan_result_json(const ScanResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << scan_result_to_json(result) << "\n";
}

std::string scan_result_to_csv(const ScanResult& result) {
  std::ostringstream out;
  if (!result.feasible_points.empty()) {
    const auto names = search_coordinates(result.model.id);
    out << "E";
    for (std::size_t i = has_energy_objective(result.model.id) ? 0 : 1; i < names.size(); ++i)
      out << "," << names[i];
    out << ",min_eigenvalue\n";
    for (const auto& fp : result.feasible_points) {
      out << fmt(fp.point.E);
      for (Index i = 0; i < fp.point.free_moments.size(); ++i)
        out << "," << fmt(fp.point.free_moments[i]);
      out << "," << fmt(fp.min_eigenvalue) << "\n";
    }
  } else {
    out << "e_lo,e_hi,K\n";
    for (const auto& w : result.windows)
      out << fmt(w.e_lo) << "," << fmt(w.e_hi) << "," << w.K << "\n";
  }
  return out.str();
}

void write_scan_result_csv(const ScanResult& result, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot open output file: " + path);
  out << scan_result_to_csv(result);
}

ParsedScanResult parse_scan_result_json(const std::string& text) {
  const json j = json::parse(text);
  ParsedScanResult out;
  out.model.id = model_from_string(j.at("model").get<std::string>());
  out.model.params = j.at("params").get<std::map<std::string, double>>();
  out.grid.K = j.at("K").get<Index>();
  out.grid.tol_scale = j.at("tol").get<double>();
  out.grid.refine_iters = j.at("refine_iters").get<int>();
  for (const auto& jd : j.at("dims")) {
    GridDim d;
    d.name = jd.at("name").get<std::string>();
    d.lo = jd.at("lo").get<double>();
    d.hi = jd.at("hi").get<double>();
    d.step = jd.at("step").get<double>();
    out.grid.dims.push_back(d);
  }
  for (const auto& jw : j.at("windows")) {
    FeasibleWindow w;
    w.e_lo = jw.at("e_lo").get<double>();
    w.e_hi = jw.at("e_hi").get<double>();
    w.K = jw.at("K").get<Index>();
    w.witness = witness_from_json(jw.at("witness"));
    out.windows.push_back(std::move(w));
  }
  return out;
}

ParsedScanResult read_scan_result_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open result file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_scan_result_json(ss.str());
}

std::vector<FeasibleWindow> parse_windows_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<FeasibleWindow> out;
  bool header = true;
  while (std::getline(in, line)) {
    line = trim(line);
    if (line.empty()) continue;
    if (header) {
      if (line != "e_lo,e_hi,K") throw ConfigError("not a window CSV: " + line);
      header = false;
      continue;
    }
    std::stringstream ss(line);
    std::string a, b, c;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    std::getline(ss, c, ',');
    FeasibleWindow w;
    w.e_lo = to_double(a, "e_lo");
    w.e_hi = to_double(b, "e_hi");
    w.K = static_cast<Index>(to_double(c, "K"));
    out.push_back(w);
  }
  return out;
}

}  // namespace ptboot
