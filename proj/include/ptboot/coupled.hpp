#pragma once

#include "ptboot/psd.hpp"

namespace ptboot {

/// Bootstrap matrix together with the energy of the search point.
struct CoupledPoint {
  BootstrapMatrix matrix;  // 5x5 Hermitian, rows {I, x1, y1, p, q}
  double energy = 0.0;
};

/// Coupled oscillator pair H = p^2 + x1^2 + q^2 + y1^2 + 2 eps x1 y1 + 1/(1-eps^2)
/// reduced to the two free moments x2 = <x1^2>, p2 = <p^2>:
///   <y1^2> = <x1^2>, <q^2> = <p^2>, <x1 y1> = (p2 - x2)/eps,
///   <p q>  = (p2 + (eps^2 - 1) x2)/eps,
/// energy = 4 p2 + 1/(1-eps^2). Requires 0 < |eps| < 1.
CoupledPoint coupled_sho_matrix(double x2, double p2, double eps);

/// Oscillator coupled to a Swanson oscillator,
/// H = p^2 + x^2 + q1^2 + alpha y^2 + 2 eps x y with alpha = 1 + c^2,
/// reduced to x2 = <x^2>, p2 = <p^2>:
///   <x y>   = (p2 - x2)/eps,
///   <y^2>   = p2 (alpha-1)/eps^2 + x2 (1 - (alpha-1)/eps^2),
///   <p q1>  = p2 alpha/eps + x2 (eps - alpha/eps),
///   <q1^2>  = p2 (1 - alpha(alpha-1)/eps^2) + x2 (alpha - (1 - alpha(alpha-1)/eps^2)),
/// energy = 4 p2 + 2 (alpha - 1) x2. At c = 0 this reduces entrywise to
/// coupled_sho_matrix without the 1/(1-eps^2) shift.
CoupledPoint coupled_swanson_matrix(double x2, double p2, double eps, double c);

}  // namespace ptboot
