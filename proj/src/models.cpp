#include "ptboot/models.hpp"

#include <cmath>

#include "ptboot/coupled.hpp"
#include "ptboot/moments.hpp"
#include "ptboot/two_by_two.hpp"

namespace ptboot {

std::string to_string(ModelId id) {
  switch (id) {
    case ModelId::two_by_two: return "two_by_two";
    case ModelId::shifted_sho: return "shifted_sho";
    case ModelId::swanson: return "swanson";
    case ModelId::poschl_teller_hermitian: return "poschl_teller_hermitian";
    case ModelId::poschl_teller_pt: return "poschl_teller_pt";
    case ModelId::quartic_pt: return "quartic_pt";
    case ModelId::coupled_sho: return "coupled_sho";
    case ModelId::coupled_swanson: return "coupled_swanson";
  }
  throw Error("unknown ModelId");
}

ModelId model_from_string(const std::string& name) {
  if (name == "two_by_two") return ModelId::two_by_two;
  if (name == "shifted_sho") return ModelId::shifted_sho;
  if (name == "swanson") return ModelId::swanson;
  if (name == "poschl_teller_hermitian") return ModelId::poschl_teller_hermitian;
  if (name == "poschl_teller_pt") return ModelId::poschl_teller_pt;
  if (name == "quartic_pt") return ModelId::quartic_pt;
  if (name == "coupled_sho") return ModelId::coupled_sho;
  if (name == "coupled_swanson") return ModelId::coupled_swanson;
  throw ConfigError("unknown model id: " + name);
}

double ModelSpec::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw ConfigError("missing model parameter: " + name);
  return it->second;
}

double ModelSpec::param_or(const std::string& name, double fallback) const {
  auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

void ModelSpec::validate() const {
  switch (id) {
    case ModelId::two_by_two: {
      const double r = param("r"), s = param("s"), theta = param("theta");
      if (s * s - r * r * std::sin(theta) * std::sin(theta) < 0)
        throw BrokenPT("two_by_two requires s^2 - r^2 sin^2 theta >= 0");
      break;
    }
    case ModelId::shifted_sho:
      param("eps");
      break;
    case ModelId::swanson:
      param("c");
      break;
    case ModelId::poschl_teller_hermitian:
    case ModelId::poschl_teller_pt: {
      const double lambda = param("lambda");
      if (lambda < 1 || lambda != std::floor(lambda))
        throw Error("lambda must be a positive integer");
      break;
    }
    case ModelId::quartic_pt:
      if (param_or("alpha", 16.0) <= 0) throw Error("alpha must be positive");
      break;
    case ModelId::coupled_sho:
    case ModelId::coupled_swanson: {
      const double eps = param("eps");
      if (!(std::abs(eps) > 0.0 && std::abs(eps) < 1.0))
        throw Error("coupled models require 0 < |eps| < 1");
      if (id == ModelId::coupled_swanson) param("c");
      break;
    }
  }
}

std::vector<std::string> search_coordinates(ModelId id) {
  switch (id) {
    case ModelId::two_by_two:
    case ModelId::shifted_sho:
    case ModelId::swanson: return {"E"};
    case ModelId::poschl_teller_hermitian:
    case ModelId::poschl_teller_pt: return {"E", "s2"};
    case ModelId::quartic_pt: return {"E", "m1", "m2"};
    case ModelId::coupled_sho:
    case ModelId::coupled_swanson: return {"x2", "p2"};
  }
  throw Error("unknown ModelId");
}

int search_dimension(ModelId id) { return static_cast<int>(search_coordinates(id).size()); }

bool has_energy_objective(ModelId id) {
  return id == ModelId::coupled_sho || id == ModelId::coupled_swanson;
}

PointEval evaluate_point(const ModelSpec& spec, const Eigen::VectorXd& coords, Index K,
                         double tol_scale) {
  if (coords.size() != search_dimension(spec.id))
    throw DimensionMismatch("coords size does not match the model's search dimension");

  PointEval out;
  BootstrapMatrix M;
  switch (spec.id) {
    case ModelId::shifted_sho: {
      auto seq = shifted_sho_moments(coords[0], spec.param("eps"), 2 * K - 2);
      out.max_abs_moment = seq.values.cwiseAbs().maxCoeff();
      M = assemble_hankel(seq.values, K, 1, "shifted_sho");
      break;
    }
    case ModelId::swanson: {
      auto seq = swanson_moments(coords[0], spec.param("c"), 2 * K - 2);
      out.max_abs_moment = seq.values.cwiseAbs().maxCoeff();
      M = assemble_hankel(seq.values, K, 1, "swanson");
      break;
    }
    case ModelId::poschl_teller_hermitian:
    case ModelId::poschl_teller_pt: {
      // values are indexed by even sech powers, so the Hankel stride is 1.
      auto seq = poschl_teller_moments(coords[0], coords[1],
                                       static_cast<int>(spec.param("lambda")), 2 * K - 2);
      out.max_abs_moment = seq.values.cwiseAbs().maxCoeff();
      M = assemble_hankel(seq.values, K, 1, "poschl_teller");
      break;
    }
    case ModelId::quartic_pt: {
      auto seq = quartic_pt_moments(coords[0], coords[1], coords[2],
                                    spec.param_or("alpha", 16.0), 2 * K - 2);
      out.max_abs_moment = seq.values.cwiseAbs().maxCoeff();
      M = assemble_hankel(seq.values, K, 1, "quartic_pt");
      break;
    }
    case ModelId::two_by_two:
      M = two_by_two_form(coords[0], spec.param("r"), spec.param("s"), spec.param("theta"));
      out.max_abs_moment = max_abs_entry(M.entries);
      break;
    case ModelId::coupled_sho: {
      auto cp = coupled_sho_matrix(coords[0], coords[1], spec.param("eps"));
      M = std::move(cp.matrix);
      out.energy = cp.energy;
      out.max_abs_moment = max_abs_entry(M.entries);
      break;
    }
    case ModelId::coupled_swanson: {
      auto cp = coupled_swanson_matrix(coords[0], coords[1], spec.param("eps"), spec.param("c"));
      M = std::move(cp.matrix);
      out.energy = cp.energy;
      out.max_abs_moment = max_abs_entry(M.entries);
      break;
    }
  }

  const PsdVerdict v = is_psd(M, tol_scale);
  out.feasible = v.feasible;
  out.min_eigenvalue = v.min_eigenvalue;
  out.tolerance_used = v.tolerance_used;
  return out;
}

}  // namespace ptboot
