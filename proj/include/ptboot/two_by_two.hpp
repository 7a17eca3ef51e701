#pragma once

#include <Eigen/Dense>

#include "ptboot/psd.hpp"

namespace ptboot {

/// Closed-form 3x3 positivity matrix for the 2x2 PT family
/// H = [[r e^{i theta}, s], [s, r e^{-i theta}]] probed with O = a0 + a1 sx + a2 sz.
/// With D = s^2 - r^2 sin^2 theta and e = s (D + (E - r cos theta)^2) / (D (E - r cos theta)):
///   G00 = G22 = 1,  G11 = 1 + 2 r^2 sin^2 theta / D,
///   G01 = e/2,      G12 = (r sin theta / s) e / 2,  G02 = 0.
/// The feasible set of E is exactly the two exact eigenvalues
/// r cos theta +- sqrt(D); see tests.
/// Throws BrokenPT when D <= 0 and SingularPoint at E = r cos theta.
BootstrapMatrix two_by_two_form(double E, double r, double s, double theta);

/// Result of the numerical checks on the 2x2 metric operator
/// V = (1/cos alpha) [[1, -i sin alpha], [i sin alpha, 1]], sin alpha = (r/s) sin theta.
struct VValidation {
  bool similarity_ok = false;  // V H V^{-1} = H^dagger within 1e-10
  bool hermitian_ok = false;   // V = V^dagger within 1e-10
  bool positive_ok = false;    // both eigenvalues of V positive
  double max_deviation = 0.0;

  bool all_ok() const { return similarity_ok && hermitian_ok && positive_ok; }
};

VValidation validate_v_2x2(double r, double s, double theta);

}  // namespace ptboot
