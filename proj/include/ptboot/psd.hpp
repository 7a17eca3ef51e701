#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>

#include "ptboot/errors.hpp"

namespace ptboot {

using Complex = std::complex<double>;
using Eigen::Index;
using Eigen::MatrixXcd;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// A K x K Hermitian positivity matrix together with its provenance.
struct BootstrapMatrix {
  MatrixXcd entries;
  std::string label;

  Index dim() const { return entries.rows(); }
};

/// Outcome of a PSD test. feasible <=> min_eigenvalue >= -tolerance_used.
struct PsdVerdict {
  bool feasible = false;
  double min_eigenvalue = 0.0;
  double tolerance_used = 0.0;
};

/// Hankel block M(j,k) = moments[stride*(j+k)] from a scalar moment list.
/// stride 1 for power-moment bases, 2 for sequences indexed by raw sech power.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic>
hankel_from_moments(const Eigen::DenseBase<Derived>& moments, Index K, Index stride = 1) {
  if (K < 1 || stride < 1) throw Error("hankel_from_moments: K and stride must be positive");
  if (moments.size() < stride * (2 * K - 2) + 1)
    throw InsufficientDepth("moment sequence shorter than stride*(2K-2)+1");
  Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> M(K, K);
  for (Index j = 0; j < K; ++j)
    for (Index k = 0; k < K; ++k) M(j, k) = moments(stride * (j + k));
  return M;
}

/// Real-moment convenience wrapper carrying a label.
BootstrapMatrix assemble_hankel(const VectorXd& moments, Index K, Index stride = 1,
                                std::string label = {});

/// Largest absolute entry, used to anchor relative tolerances.
double max_abs_entry(const MatrixXcd& M);

/// Infinity norm (max absolute row sum).
double inf_norm(const MatrixXcd& M);

/// Smallest eigenvalue of a Hermitian matrix (no tolerance semantics).
double min_eigenvalue(const MatrixXcd& M);

/// Decide positive semidefiniteness with tolerance tol_scale * max(1, ||M||_inf).
/// Throws NotHermitian when |M - M^dagger| exceeds 1e-12 * max(1, max entry).
PsdVerdict is_psd(const BootstrapMatrix& M, double tol_scale = 1e-9);
PsdVerdict is_psd(const MatrixXcd& M, double tol_scale = 1e-9);

}  // namespace ptboot
