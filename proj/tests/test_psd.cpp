#include <doctest.h>

#include <Eigen/Dense>
#include <random>

#include "ptboot/moments.hpp"
#include "ptboot/psd.hpp"
#include "ptboot/two_by_two.hpp"

using namespace ptboot;

namespace {

// Brute-force PSD oracle: a symmetric matrix is PSD iff every principal minor
// is nonnegative. Determinants via LU, independent of the eigensolver path.
bool psd_by_principal_minors(const Eigen::MatrixXd& M, double tiny = 1e-11) {
  const int n = static_cast<int>(M.rows());
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (mask & (1u << i)) idx.push_back(i);
    Eigen::MatrixXd sub(idx.size(), idx.size());
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) sub(a, b) = M(idx[a], idx[b]);
    if (sub.determinant() < -tiny * std::max(1.0, sub.cwiseAbs().maxCoeff())) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("hankel assembly places moments on antidiagonals") {
  VectorXd m(3);
  m << 1.0, 0.0, 0.5;
  const auto M = assemble_hankel(m, 2, 1);
  CHECK(M.entries(0, 0).real() == 1.0);
  CHECK(M.entries(0, 1).real() == 0.0);
  CHECK(M.entries(1, 0).real() == 0.0);
  CHECK(M.entries(1, 1).real() == 0.5);
}

TEST_CASE("hankel stride 2 reads raw even positions") {
  // raw sech-power indexing: odd slots unused
  VectorXd m(5);
  const double s2 = 0.7, m4 = 0.55;
  m << 1.0, 0.0, s2, 0.0, m4;
  const auto M = assemble_hankel(m, 2, 2);
  CHECK(M.entries(0, 0).real() == 1.0);
  CHECK(M.entries(0, 1).real() == s2);
  CHECK(M.entries(1, 0).real() == s2);
  CHECK(M.entries(1, 1).real() == m4);
}

TEST_CASE("hankel from shifted oscillator moments at the ground state") {
  const auto seq = shifted_sho_moments(1.25, 0.5, 4);
  const auto M = assemble_hankel(seq.values, 3, 1);
  Eigen::Matrix3d expect;
  expect << 1, 0, 0.5, 0, 0.5, 0, 0.5, 0, 0.75;
  CHECK((M.entries.real() - expect).cwiseAbs().maxCoeff() == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("hankel rejects short sequences") {
  VectorXd m(3);
  m << 1, 0, 0.5;
  CHECK_THROWS_AS(assemble_hankel(m, 3, 1), InsufficientDepth);
  CHECK_THROWS_AS(assemble_hankel(m, 2, 2), InsufficientDepth);
}

TEST_CASE("hankel output is exactly symmetric for real input") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    VectorXd m(11);
    for (int i = 0; i < 11; ++i) m[i] = u(rng);
    const auto M = assemble_hankel(m, 6, 1);
    CHECK((M.entries - M.entries.transpose()).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("hankel core is scalar-generic") {
  Eigen::Matrix<long double, Eigen::Dynamic, 1> m(3);
  m << 1.0L, 0.25L, 0.5L;
  const auto M = hankel_from_moments(m, 2, 1);
  CHECK(M(0, 1) == 0.25L);
  CHECK(M(1, 1) == 0.5L);
}

TEST_CASE("is_psd on the identity") {
  const MatrixXcd I = MatrixXcd::Identity(3, 3);
  const auto v = is_psd(I, 1e-9);
  CHECK(v.feasible);
  CHECK(v.min_eigenvalue == doctest::Approx(1.0));
}

TEST_CASE("is_psd flags an indefinite matrix") {
  MatrixXcd M(2, 2);
  M << 1, 2, 2, 1;
  const auto v = is_psd(M, 1e-9);
  CHECK_FALSE(v.feasible);
  CHECK(v.min_eigenvalue == doctest::Approx(-1.0));
}

TEST_CASE("is_psd accepts the 2x2 family form exactly at an eigenvalue") {
  // det = 3 - 3u^2/4 vanishes at u = E + 1/E = 2
  const auto G = two_by_two_form(1.0, 1.0, std::sqrt(2.0), M_PI / 2);
  const auto v = is_psd(G, 1e-9);
  CHECK(v.feasible);
  CHECK(std::abs(v.min_eigenvalue) <= 1e-9);
}

TEST_CASE("is_psd rejects non-Hermitian input") {
  MatrixXcd M(2, 2);
  M << 1.0, Complex(0, 1), Complex(0, 1), 1.0;  // both corners +i
  CHECK_THROWS_AS(is_psd(M, 1e-9), NotHermitian);
}

TEST_CASE("is_psd agrees with the principal-minor oracle on random matrices") {
  std::mt19937 rng(123);
  std::uniform_real_distribution<double> entry(-10, 10);
  std::uniform_int_distribution<int> dim(1, 6);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = dim(rng);
    Eigen::MatrixXd A(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) A(i, j) = entry(rng);
    Eigen::MatrixXd M = 0.5 * (A + A.transpose());
    if (trial % 3 == 0) M = (A * A.transpose()).eval();  // exercise the PSD branch too

    const auto v = is_psd(M.cast<Complex>(), 1e-9);
    if (std::abs(v.min_eigenvalue) <= 10 * v.tolerance_used) continue;  // tolerance-boundary tie
    ++checked;
    CHECK(v.feasible == psd_by_principal_minors(M));
  }
  CHECK(checked > 300);
}

TEST_CASE("is_psd verdict is monotone in tol_scale") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> entry(-1, 1);
  for (int trial = 0; trial < 50; ++trial) {
    Eigen::MatrixXd A(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) A(i, j) = entry(rng);
    const MatrixXcd M = (0.5 * (A + A.transpose())).cast<Complex>();
    for (double tol : {1e-12, 1e-9, 1e-6, 1e-3}) {
      if (is_psd(M, tol).feasible) CHECK(is_psd(M, tol * 1e3).feasible);
    }
  }
}
