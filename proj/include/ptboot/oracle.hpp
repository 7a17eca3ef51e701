#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ptboot/errors.hpp"

namespace ptboot {

/// Closed-form spectra quoted by the catalog models. Never used by the
/// bootstrap path; acceptance tests compare against these independently.

/// Shifted oscillator p^2 + (x + i eps)^2: E_n = (2n+1) + eps^2.
double exact_shifted_sho(int n, double eps);

/// Swanson oscillator: E_n = (2n+1) sqrt(1+c^2).
double exact_swanson(int n, double c);

/// Poschl-Teller well p^2 - lambda(lambda+1) sech^2 x in the E = -mu^2
/// convention: {-mu^2 : mu = 1..lambda}, ascending.
std::vector<double> exact_poschl_teller(int lambda);

/// 2x2 PT matrix: r cos theta -+ sqrt(s^2 - r^2 sin^2 theta), ascending.
std::pair<double, double> exact_2x2(double r, double s, double theta);

/// Coupled oscillator pair ground state: sqrt(1+eps) + sqrt(1-eps) + 1/(1-eps^2).
double exact_coupled_sho_ground(double eps);

enum class OracleModel {
  poschl_teller_hermitian,  // p^2 - lambda(lambda+1) sech^2 x on [-L, L]
  quartic_pt,               // (1/2){(1+ix), p^2} - p/2 - alpha(1+ix)^2, momentum space
  quartic_direct,           // p^2 + x^4 (Hermitian control for the discretizer)
  sho_control,              // p^2 + x^2 (levels 1, 3, 5, ...)
};

struct OracleSpectrum {
  std::vector<double> eigenvalues;        // ascending
  std::string method;                     // "exact_formula" or "finite_difference"
  int grid_points = 0;
  double box_halfwidth = 0.0;
  std::vector<double> richardson_error;   // |E(N) - E(2N)| per retained state
};

/// Finite-difference diagonalization on [-L, L] with Dirichlet walls, keeping
/// the lowest `count` states. The quartic PT Hamiltonian is discretized in
/// momentum space (x = i d/dp keeps it tridiagonal) and balanced to a
/// symmetric tridiagonal problem when the off-diagonal products allow it;
/// otherwise the non-normal matrix is diagonalized densely and eigenvalues
/// with |Im| >= 1e-6 are dropped. Richardson estimates come from an N vs 2N
/// comparison; throws NotConverged if the lowest two exceed 1e-3.
OracleSpectrum fd_diagonalize(OracleModel model, double param, int N, double L, int count = 3);

}  // namespace ptboot
