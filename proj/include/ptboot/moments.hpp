#pragma once

#include <Eigen/Dense>
#include <string>

#include "ptboot/errors.hpp"

namespace ptboot {

using Eigen::Index;
using Eigen::VectorXd;

/// Ordered expectation values m_0..m_depth generated by a recursion from seeds.
/// All catalog recursions have real coefficients and real seeds, so values are
/// kept in real arithmetic; m_0 = 1 is the normalization.
struct MomentSequence {
  VectorXd values;
  std::string seed_description;

  Index depth() const { return values.size() - 1; }
};

/// p-moments of the shifted oscillator p^2 + (x + i eps)^2 + eps^2:
///   m_{t+1} = [4t(E - eps^2) m_{t-1} + t(t-1)(t-2) m_{t-3}] / (4(t+1)).
MomentSequence shifted_sho_moments(double E, double eps, Index depth);

/// x-moments of the Swanson oscillator p^2 + x^2 + ic(xp+px):
///   m_{t+1} = [4tE m_{t-1} + t(t-1)(t-2) m_{t-3}] / (4(1+c^2)(t+1)).
MomentSequence swanson_moments(double E, double c, Index depth);

/// sech-moments of p^2 - lambda(lambda+1) sech^2(z), z = x + i eps.
/// values[k] = <sech^{2k} z>; values[1] = s2 is the free seed; the loop runs
/// over even t and solves the three-term identity
///   (2tE + t^3/2) m_{t/2}
///   + (-2(t+1)E + 2L(t+1) - t^3 - 3t^2 - 4t - 2) m_{t/2+1}
///   + (t^3/2 + 3t^2 + 4t + 2 + (3t+2)/2 - 2L(t+2)) m_{t/2+2} = 0,  L = lambda(lambda+1),
/// for the highest moment. Energies follow the E = -mu^2 convention
/// (ground state at -lambda^2); the identity is exact on closed-form
/// ground-state moments, see tests. The same code path serves the Hermitian
/// and the PT-shifted variant: eps only moves the integration contour and the
/// sech-moments are unchanged.
/// Throws SingularRecursion if the advancing coefficient vanishes (only
/// possible at odd t = 2 lambda - 1, never hit for integer lambda).
MomentSequence poschl_teller_moments(double E, double s2, int lambda, Index depth);

/// p-moments of the quartic PT Hamiltonian (the p^2 - x^4 problem mapped to
/// (1/2){(1+ix), p^2} - p/2 - alpha(1+ix)^2):
///   m_{t+3} = [4 alpha t E m_{t-1} + (2t+1) alpha m_t + alpha^2 t(t-1)(t-2) m_{t-3}] / (t+2),
/// with m_1, m_2 free search coordinates. m_3 = alpha/2 always.
MomentSequence quartic_pt_moments(double E, double m1, double m2, double alpha, Index depth);

}  // namespace ptboot
