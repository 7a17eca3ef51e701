#include "ptboot/coupled.hpp"

#include <cmath>

namespace ptboot {

namespace {

void check_eps(double eps) {
  if (!(std::abs(eps) > 0.0 && std::abs(eps) < 1.0))
    throw Error("coupled models require 0 < |eps| < 1");
}

}  // namespace

CoupledPoint coupled_sho_matrix(double x2, double p2, double eps) {
  check_eps(eps);
  const double w = (p2 - x2) / eps;
  const double g = (p2 + (eps * eps - 1.0) * x2) / eps;
  const Complex ih(0.0, 0.5);

  MatrixXcd M = MatrixXcd::Zero(5, 5);
  M(0, 0) = 1.0;
  M(1, 1) = x2;  M(1, 2) = w;   M(1, 3) = ih;
  M(2, 1) = w;   M(2, 2) = x2;  M(2, 4) = ih;
  M(3, 1) = -ih; M(3, 3) = p2;  M(3, 4) = g;
  M(4, 2) = -ih; M(4, 3) = g;   M(4, 4) = p2;

  CoupledPoint out;
  out.matrix.entries = std::move(M);
  out.matrix.label = "coupled_sho";
  out.energy = 4.0 * p2 + 1.0 / (1.0 - eps * eps);
  return out;
}

CoupledPoint coupled_swanson_matrix(double x2, double p2, double eps, double c) {
  check_eps(eps);
  const double a = 1.0 + c * c;
  const double e2 = eps * eps;
  const double w = (p2 - x2) / eps;
  const double yy = p2 * (a - 1.0) / e2 + x2 * (1.0 - (a - 1.0) / e2);
  const double pq = p2 * a / eps + x2 * (eps - a / eps);
  const double qq = p2 * (1.0 - a * (a - 1.0) / e2) + x2 * (a - (1.0 - a * (a - 1.0) / e2));
  const Complex ih(0.0, 0.5);

  MatrixXcd M = MatrixXcd::Zero(5, 5);
  M(0, 0) = 1.0;
  M(1, 1) = x2;  M(1, 2) = w;   M(1, 3) = ih;
  M(2, 1) = w;   M(2, 2) = yy;  M(2, 4) = ih;
  M(3, 1) = -ih; M(3, 3) = p2;  M(3, 4) = pq;
  M(4, 2) = -ih; M(4, 3) = pq;  M(4, 4) = qq;

  CoupledPoint out;
  out.matrix.entries = std::move(M);
  out.matrix.label = "coupled_swanson";
  out.energy = 4.0 * p2 + 2.0 * (a - 1.0) * x2;
  return out;
}

}  // namespace ptboot
