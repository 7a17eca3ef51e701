#include "ptboot/two_by_two.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>

namespace ptboot {

namespace {

double unbroken_gap(double r, double s, double theta) {
  const double rs = r * std::sin(theta);
  return s * s - rs * rs;
}

}  // namespace

BootstrapMatrix two_by_two_form(double E, double r, double s, double theta) {
  const double D = unbroken_gap(r, s, theta);
  if (D <= 0) throw BrokenPT("s^2 - r^2 sin^2 theta <= 0: spectrum not guaranteed real");
  const double delta = E - r * std::cos(theta);
  if (std::abs(delta) <= 1e-12) throw SingularPoint("E = r cos theta is a pole of the form");

  const double rs = r * std::sin(theta);
  const double e = s * (D + delta * delta) / (D * delta);
  const double g11 = 1.0 + 2.0 * rs * rs / D;
  const double beta = rs / s;

  Eigen::Matrix3d G;
  G << 1.0, e / 2.0, 0.0,
       e / 2.0, g11, beta * e / 2.0,
       0.0, beta * e / 2.0, 1.0;

  BootstrapMatrix M;
  M.entries = G.cast<Complex>();
  M.label = "two_by_two(E=" + std::to_string(E) + ")";
  return M;
}

VValidation validate_v_2x2(double r, double s, double theta) {
  const double D = unbroken_gap(r, s, theta);
  if (D <= 0) throw BrokenPT("s^2 - r^2 sin^2 theta <= 0: no positive metric");

  const double sin_a = (r / s) * std::sin(theta);
  const double cos_a = std::sqrt(1.0 - sin_a * sin_a);
  const Complex i(0.0, 1.0);

  Eigen::Matrix2cd H, V;
  H << r * std::exp(i * theta), s,
       s, r * std::exp(-i * theta);
  V << 1.0 / cos_a, -i * sin_a / cos_a,
       i * sin_a / cos_a, 1.0 / cos_a;

  VValidation out;
  const double sim_dev = (V * H * V.inverse() - H.adjoint()).cwiseAbs().maxCoeff();
  const double herm_dev = (V - V.adjoint()).cwiseAbs().maxCoeff();
  out.similarity_ok = sim_dev <= 1e-10;
  out.hermitian_ok = herm_dev <= 1e-10;

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(V, Eigen::EigenvaluesOnly);
  out.positive_ok = es.eigenvalues().minCoeff() > 0.0;
  out.max_deviation = std::max(sim_dev, herm_dev);
  return out;
}

}  // namespace ptboot
