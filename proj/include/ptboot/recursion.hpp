#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "ptboot/errors.hpp"
#include "ptboot/moments.hpp"

namespace ptboot {

/// V(x) = sum_k coefficients[k] x^k, degree 1..8, trailing coefficient nonzero.
struct PolynomialPotential {
  std::vector<double> coefficients;

  int degree() const;
  void validate() const;
};

/// One monomial coeff * t^t_pow * E^e_pow of a recursion coefficient.
struct Monomial {
  double coeff = 0.0;
  int t_pow = 0;
  int e_pow = 0;
};

/// One term w(t, E) * m_{t + offset} of a linear moment identity.
struct RecursionTerm {
  int offset = 0;
  std::vector<Monomial> poly;

  double eval(double t, double E) const;
};

/// Linear identity sum_j w_j(t, E) m_{t + offset_j} = 0, advanced by solving
/// for the largest offset. For H = p^2 + V the leading coefficient is
/// -(4t + 2 deg V) c_deg, nonzero for every t >= 0 (empty exceptional set).
struct RecursionRelation {
  std::vector<RecursionTerm> terms;  // sorted by offset ascending
  int solved_offset = 0;

  /// Seeds required by evaluate_recursion: m_1 .. m_{solved_offset - 1}.
  int seed_count() const { return std::max(0, solved_offset - 1); }

  std::string to_json() const;
};

/// Moment identity for H = p^2 + V(x) with polynomial V, from the bootstrap
/// pair <[H, O]> = 0 / <H O> = E <O> applied to O = x^t and O = x^{t-1} p:
///   4 t E m_{t-1} + t(t-1)(t-2) m_{t-3} - sum_k (4t + 2k) c_k m_{t+k-1} = 0.
/// For V = (1+c^2) x^2 this is exactly the Swanson identity
/// {4tE, t(t-1)(t-2), -4(1+c^2)(t+1)} on offsets {-1, -3, +1}.
RecursionRelation derive_x_moment_recursion(const PolynomialPotential& V);

/// Advance the relation: m_0 = 1, m_1..m_{so-1} from seeds, then row t solves
/// m_{t + so}. Throws SeedCountMismatch / SingularRecursion.
MomentSequence evaluate_recursion(const RecursionRelation& rel, double E,
                                  const std::vector<double>& seeds, Index depth);

}  // namespace ptboot
