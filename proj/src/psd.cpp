#include "ptboot/psd.hpp"

#include <Eigen/Eigenvalues>

namespace ptboot {

BootstrapMatrix assemble_hankel(const VectorXd& moments, Index K, Index stride,
                                std::string label) {
  BootstrapMatrix M;
  M.entries = hankel_from_moments(moments, K, stride).cast<Complex>();
  M.label = std::move(label);
  return M;
}

double max_abs_entry(const MatrixXcd& M) { return M.cwiseAbs().maxCoeff(); }

double inf_norm(const MatrixXcd& M) { return M.cwiseAbs().rowwise().sum().maxCoeff(); }

double min_eigenvalue(const MatrixXcd& M) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(M, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

PsdVerdict is_psd(const MatrixXcd& M, double tol_scale) {
  if (tol_scale <= 0) throw Error("is_psd: tol_scale must be positive");
  const double herm_dev = (M - M.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > 1e-12 * std::max(1.0, max_abs_entry(M)))
    throw NotHermitian("matrix deviates from Hermitian by " + std::to_string(herm_dev));

  PsdVerdict v;
  v.min_eigenvalue = min_eigenvalue(M);
  v.tolerance_used = tol_scale * std::max(1.0, inf_norm(M));
  v.feasible = v.min_eigenvalue >= -v.tolerance_used;
  return v;
}

PsdVerdict is_psd(const BootstrapMatrix& M, double tol_scale) {
  return is_psd(M.entries, tol_scale);
}

}  // namespace ptboot
