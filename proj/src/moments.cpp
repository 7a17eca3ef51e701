#include "ptboot/moments.hpp"

#include <cmath>

namespace ptboot {

MomentSequence shifted_sho_moments(double E, double eps, Index depth) {
  if (depth < 0) throw Error("shifted_sho_moments: depth must be >= 0");
  MomentSequence seq;
  seq.values.setZero(depth + 1);
  seq.values[0] = 1.0;
  const double w = E - eps * eps;
  for (Index t = 0; t < depth; ++t) {
    double acc = 0.0;
    if (t >= 1) acc += 4.0 * t * w * seq.values[t - 1];
    if (t >= 3) acc += static_cast<double>(t) * (t - 1) * (t - 2) * seq.values[t - 3];
    seq.values[t + 1] = acc / (4.0 * (t + 1));
  }
  seq.seed_description = "m0=1";
  return seq;
}

MomentSequence swanson_moments(double E, double c, Index depth) {
  if (depth < 0) throw Error("swanson_moments: depth must be >= 0");
  MomentSequence seq;
  seq.values.setZero(depth + 1);
  seq.values[0] = 1.0;
  const double a = 1.0 + c * c;
  for (Index t = 0; t < depth; ++t) {
    double acc = 0.0;
    if (t >= 1) acc += 4.0 * t * E * seq.values[t - 1];
    if (t >= 3) acc += static_cast<double>(t) * (t - 1) * (t - 2) * seq.values[t - 3];
    seq.values[t + 1] = acc / (4.0 * a * (t + 1));
  }
  seq.seed_description = "m0=1";
  return seq;
}

MomentSequence poschl_teller_moments(double E, double s2, int lambda, Index depth) {
  if (lambda < 1) throw Error("poschl_teller_moments: lambda must be a positive integer");
  if (depth < 2) throw Error("poschl_teller_moments: depth must be >= 2");
  const double L = static_cast<double>(lambda) * (lambda + 1);
  MomentSequence seq;
  seq.values.setZero(depth + 1);
  seq.values[0] = 1.0;
  seq.values[1] = s2;
  for (Index k = 0; k + 2 <= depth; ++k) {
    const double t = 2.0 * k;
    const double c_low = 2.0 * t * E + 0.5 * t * t * t;
    const double c_mid =
        -2.0 * (t + 1) * E + 2.0 * L * (t + 1) - t * t * t - 3.0 * t * t - 4.0 * t - 2.0;
    const double c_high =
        0.5 * t * t * t + 3.0 * t * t + 4.0 * t + 2.0 + 0.5 * (3.0 * t + 2.0) - 2.0 * L * (t + 2);
    if (std::abs(c_high) < 1e-12)
      throw SingularRecursion("advancing coefficient vanished at t = " + std::to_string(t));
    seq.values[k + 2] = -(c_low * seq.values[k] + c_mid * seq.values[k + 1]) / c_high;
  }
  seq.seed_description = "m0=1, m1=<sech^2>";
  return seq;
}

MomentSequence quartic_pt_moments(double E, double m1, double m2, double alpha, Index depth) {
  if (alpha <= 0) throw Error("quartic_pt_moments: alpha must be positive");
  if (depth < 3) throw Error("quartic_pt_moments: depth must be >= 3");
  MomentSequence seq;
  seq.values.setZero(depth + 1);
  seq.values[0] = 1.0;
  seq.values[1] = m1;
  seq.values[2] = m2;
  for (Index t = 0; t + 3 <= depth; ++t) {
    double acc = (2.0 * t + 1.0) * alpha * seq.values[t];
    if (t >= 1) acc += 4.0 * alpha * t * E * seq.values[t - 1];
    if (t >= 3) acc += alpha * alpha * t * (t - 1) * (t - 2) * seq.values[t - 3];
    seq.values[t + 3] = acc / (t + 2);
  }
  seq.seed_description = "m0=1, m1=<p>, m2=<p^2>";
  return seq;
}

}  // namespace ptboot
