#pragma once

#include <Eigen/Dense>
#include <map>
#include <string>
#include <vector>

#include "ptboot/errors.hpp"
#include "ptboot/psd.hpp"

namespace ptboot {

enum class ModelId {
  two_by_two,
  shifted_sho,
  swanson,
  poschl_teller_hermitian,
  poschl_teller_pt,
  quartic_pt,
  coupled_sho,
  coupled_swanson,
};

std::string to_string(ModelId id);
ModelId model_from_string(const std::string& name);

/// Which Hamiltonian plus its physical parameters.
/// Recognized parameters: eps, c, lambda, alpha, r, s, theta.
struct ModelSpec {
  ModelId id = ModelId::shifted_sho;
  std::map<std::string, double> params;

  double param(const std::string& name) const;
  double param_or(const std::string& name, double fallback) const;

  /// Enforces the per-model invariants (unbroken PT region, integer lambda >= 1,
  /// alpha > 0, 0 < |eps| < 1 for coupled models). Throws on violation.
  void validate() const;
};

/// One point of the search space: trial energy plus the model's free moments.
/// For the coupled models E is the derived energy and free_moments = (x2, p2).
struct SearchPoint {
  double E = 0.0;
  Eigen::VectorXd free_moments;
};

/// Names of the scan coordinates, in grid order. The first coordinate is "E"
/// for every model except the coupled pair, which scans (x2, p2) directly.
std::vector<std::string> search_coordinates(ModelId id);

/// Search-space dimensionality (coordinates incl. E where applicable).
int search_dimension(ModelId id);

/// True for models whose scan minimizes an energy objective instead of
/// extracting windows in E.
bool has_energy_objective(ModelId id);

/// Feasibility of one search point at bootstrap size K.
struct PointEval {
  bool feasible = false;
  double min_eigenvalue = 0.0;
  double tolerance_used = 0.0;
  double energy = 0.0;          // derived energy (coupled models only)
  double max_abs_moment = 0.0;  // overflow diagnostic
};

/// Build the model's bootstrap matrix at `coords` (ordered per
/// search_coordinates) and test positivity. Propagates SingularPoint /
/// SingularRecursion for points the caller should skip.
PointEval evaluate_point(const ModelSpec& spec, const Eigen::VectorXd& coords, Index K,
                         double tol_scale);

}  // namespace ptboot
