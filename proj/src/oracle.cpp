#include "ptboot/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace ptboot {

double exact_shifted_sho(int n, double eps) {
  if (n < 0) throw Error("state index must be >= 0");
  return (2.0 * n + 1.0) + eps * eps;
}

double exact_swanson(int n, double c) {
  if (n < 0) throw Error("state index must be >= 0");
  return (2.0 * n + 1.0) * std::sqrt(1.0 + c * c);
}

std::vector<double> exact_poschl_teller(int lambda) {
  if (lambda < 1) throw Error("lambda must be a positive integer");
  std::vector<double> out;
  for (int mu = lambda; mu >= 1; --mu) out.push_back(-static_cast<double>(mu) * mu);
  return out;
}

std::pair<double, double> exact_2x2(double r, double s, double theta) {
  const double D = s * s - r * r * std::sin(theta) * std::sin(theta);
  if (D < 0) throw BrokenPT("broken PT phase: complex eigenvalues");
  const double c = r * std::cos(theta), rad = std::sqrt(D);
  return {c - rad, c + rad};
}

double exact_coupled_sho_ground(double eps) {
  return std::sqrt(1.0 + eps) + std::sqrt(1.0 - eps) + 1.0 / (1.0 - eps * eps);
}

namespace {

// Lowest-k eigenvalues of a symmetric tridiagonal matrix by Sturm bisection.
// diag has n entries, off has n-1 (off[i] couples i and i+1).
std::vector<double> sturm_lowest(const std::vector<double>& diag, const std::vector<double>& off,
                                 int k) {
  const int n = static_cast<int>(diag.size());
  auto count_below = [&](double x) {
    // negative-pivot count of the LDL^T factorization of T - xI
    int cnt = 0;
    double q = 0.0;
    for (int i = 0; i < n; ++i) {
      const double off2 = i > 0 ? off[i - 1] * off[i - 1] : 0.0;
      const double prev = (i > 0 && q == 0.0) ? 1e-300 : q;
      q = diag[i] - x - (i > 0 ? off2 / prev : 0.0);
      if (q < 0) ++cnt;
    }
    return cnt;
  };

  double lo = diag[0], hi = diag[0];
  for (int i = 0; i < n; ++i) {
    const double r = (i > 0 ? std::abs(off[i - 1]) : 0.0) + (i < n - 1 ? std::abs(off[i]) : 0.0);
    lo = std::min(lo, diag[i] - r);
    hi = std::max(hi, diag[i] + r);
  }

  std::vector<double> out;
  for (int j = 0; j < k; ++j) {
    double a = lo, b = hi;
    for (int it = 0; it < 200 && b - a > 1e-13 * std::max(1.0, std::abs(b)); ++it) {
      const double mid = 0.5 * (a + b);
      if (count_below(mid) >= j + 1)
        b = mid;
      else
        a = mid;
    }
    out.push_back(0.5 * (a + b));
  }
  return out;
}

struct Tridiag {
  std::vector<double> diag;
  std::vector<double> sub;  // row i+1, col i
  std::vector<double> sup;  // row i, col i+1
};

Tridiag discretize(OracleModel model, double param, int N, double L) {
  Tridiag T;
  T.diag.resize(N);
  T.sub.assign(N - 1, 0.0);
  T.sup.assign(N - 1, 0.0);
  const double h = 2.0 * L / (N - 1);

  switch (model) {
    case OracleModel::poschl_teller_hermitian: {
      const double lam = param;
      for (int i = 0; i < N; ++i) {
        const double x = -L + i * h;
        const double sech = 1.0 / std::cosh(x);
        T.diag[i] = 2.0 / (h * h) - lam * (lam + 1.0) * sech * sech;
      }
      std::fill(T.sub.begin(), T.sub.end(), -1.0 / (h * h));
      T.sup = T.sub;
      break;
    }
    case OracleModel::quartic_direct: {
      for (int i = 0; i < N; ++i) {
        const double x = -L + i * h;
        T.diag[i] = 2.0 / (h * h) + x * x * x * x;
      }
      std::fill(T.sub.begin(), T.sub.end(), -1.0 / (h * h));
      T.sup = T.sub;
      break;
    }
    case OracleModel::sho_control: {
      for (int i = 0; i < N; ++i) {
        const double x = -L + i * h;
        T.diag[i] = 2.0 / (h * h) + x * x;
      }
      std::fill(T.sub.begin(), T.sub.end(), -1.0 / (h * h));
      T.sup = T.sub;
      break;
    }
    case OracleModel::quartic_pt: {
      // momentum representation, x = i d/dp:
      //   H f = -alpha f'' + (2 alpha - p^2) f' + (p^2 - (3/2) p - alpha) f
      const double alpha = param;
      for (int i = 0; i < N; ++i) {
        const double p = -L + i * h;
        const double b = 2.0 * alpha - p * p;
        T.diag[i] = 2.0 * alpha / (h * h) + p * p - 1.5 * p - alpha;
        if (i < N - 1) T.sup[i] = -alpha / (h * h) + b / (2.0 * h);
        if (i > 0) T.sub[i - 1] = -alpha / (h * h) - b / (2.0 * h);
      }
      break;
    }
  }
  return T;
}

std::vector<double> lowest_eigenvalues(const Tridiag& T, int count) {
  const int n = static_cast<int>(T.diag.size());
  bool balanceable = true;
  for (int i = 0; i < n - 1; ++i)
    if (T.sub[i] * T.sup[i] <= 0) {
      balanceable = false;
      break;
    }

  if (balanceable) {
    // diagonal similarity maps the matrix to symmetric tridiagonal form with
    // off-diagonal sqrt(sub * sup); the spectrum is unchanged (and real)
    std::vector<double> off(n - 1);
    for (int i = 0; i < n - 1; ++i) off[i] = std::sqrt(T.sub[i] * T.sup[i]);
    return sturm_lowest(T.diag, off, count);
  }

  // general fallback: dense non-normal eigensolve, keep near-real eigenvalues
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    M(i, i) = T.diag[i];
    if (i < n - 1) {
      M(i, i + 1) = T.sup[i];
      M(i + 1, i) = T.sub[i];
    }
  }
  Eigen::EigenSolver<Eigen::MatrixXd> es(M, false);
  std::vector<double> real;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i)
    if (std::abs(es.eigenvalues()[i].imag()) < 1e-6) real.push_back(es.eigenvalues()[i].real());
  std::sort(real.begin(), real.end());
  real.resize(std::min<std::size_t>(real.size(), count));
  return real;
}

}  // namespace

OracleSpectrum fd_diagonalize(OracleModel model, double param, int N, double L, int count) {
  if (N < 200) throw Error("fd_diagonalize: N must be >= 200");
  if (count < 1) throw Error("fd_diagonalize: count must be >= 1");

  const auto coarse = lowest_eigenvalues(discretize(model, param, N, L), count);
  const auto fine = lowest_eigenvalues(discretize(model, param, 2 * N, L), count);
  if (coarse.size() < static_cast<std::size_t>(count) ||
      fine.size() < static_cast<std::size_t>(count))
    throw NotConverged("discretization produced fewer real eigenvalues than requested");

  OracleSpectrum out;
  out.method = "finite_difference";
  out.grid_points = N;
  out.box_halfwidth = L;
  out.eigenvalues = fine;
  for (int i = 0; i < count; ++i) out.richardson_error.push_back(std::abs(fine[i] - coarse[i]));
  const int gate = std::min(count, 2);
  for (int i = 0; i < gate; ++i)
    if (out.richardson_error[i] > 1e-3)
      throw NotConverged("Richardson estimate " + std::to_string(out.richardson_error[i]) +
                         " exceeds 1e-3 for state " + std::to_string(i));
  return out;
}

}  // namespace ptboot
