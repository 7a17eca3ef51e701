#include <doctest.h>

#include <cmath>

#include "ptboot/oracle.hpp"
#include "ptboot/search.hpp"

using namespace ptboot;

namespace {

GridSpec grid1d(double lo, double hi, double step, Index K, double tol = 1e-9) {
  GridSpec g;
  g.dims = {{"E", lo, hi, step}};
  g.K = K;
  g.tol_scale = tol;
  return g;
}

const FeasibleWindow* window_containing(const std::vector<FeasibleWindow>& ws, double E,
                                        double slack = 0.0) {
  for (const auto& w : ws)
    if (w.contains(E, slack)) return &w;
  return nullptr;
}

}  // namespace

TEST_CASE("grid point arithmetic") {
  GridDim d{"E", -12.0, 0.0, 0.05};
  CHECK(d.count() == 241);
  CHECK(d.point(0) == -12.0);
  CHECK(d.point(240) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS((GridDim{"E", 1.0, 0.0, 0.1}.validate()), ConfigError);
}

TEST_CASE("shifted oscillator scan finds both low-lying windows") {
  ModelSpec model{ModelId::shifted_sho, {{"eps", 0.5}}};
  const auto r8 = scan(model, grid1d(0.0, 5.0, 0.01, 8));
  const auto* g8 = window_containing(r8.windows, 1.25, 0.005);
  const auto* x8 = window_containing(r8.windows, 3.25, 0.005);
  REQUIRE(g8 != nullptr);
  REQUIRE(x8 != nullptr);

  // windows narrow as K grows, and K=10 windows sit inside K=8 windows
  const auto r5 = scan(model, grid1d(0.0, 5.0, 0.01, 5));
  const auto* g5 = window_containing(r5.windows, 1.25, 0.005);
  REQUIRE(g5 != nullptr);
  CHECK(g8->width() < g5->width());

  const auto r10 = scan(model, grid1d(0.0, 5.0, 0.01, 10));
  for (const auto& w : r10.windows) {
    const auto* outer = window_containing(r8.windows, 0.5 * (w.e_lo + w.e_hi));
    REQUIRE(outer != nullptr);
    CHECK(w.e_lo >= outer->e_lo - 1e-12);
    CHECK(w.e_hi <= outer->e_hi + 1e-12);
  }
}

TEST_CASE("two_by_two special scan: single-point windows at the eigenvalues") {
  ModelSpec model{ModelId::two_by_two, {{"r", 1.0}, {"s", std::sqrt(2.0)}, {"theta", M_PI / 2}}};
  GridSpec g = grid1d(-3.0, 3.0, 0.005, 3, 1e-9);
  const auto res = scan(model, g);
  REQUIRE(res.windows.size() == 2);
  CHECK(res.windows[0].contains(-1.0, 0.0025));
  CHECK(res.windows[1].contains(1.0, 0.0025));
  CHECK(res.windows[0].width() <= 0.01);
  CHECK(res.windows[1].width() <= 0.01);
  CHECK(res.stats.points_skipped >= 1);  // the pole at E = r cos theta = 0
}

TEST_CASE("refinement shrinks the special-case window to the exact point") {
  ModelSpec model{ModelId::two_by_two, {{"r", 1.0}, {"s", std::sqrt(2.0)}, {"theta", M_PI / 2}}};
  GridSpec g = grid1d(-3.0, 3.0, 0.005, 3, 1e-14);
  const auto res = scan(model, g);
  REQUIRE(res.windows.size() == 2);
  const auto refined = refine_window(model, res.windows[1], g);
  CHECK(refined.width() <= 1e-6);
  CHECK(refined.contains(1.0, 1e-6));
}

TEST_CASE("refinement rejects a bogus witness") {
  ModelSpec model{ModelId::two_by_two, {{"r", 1.0}, {"s", std::sqrt(2.0)}, {"theta", M_PI / 2}}};
  GridSpec g = grid1d(-3.0, 3.0, 0.005, 3, 1e-9);
  FeasibleWindow fake;
  fake.e_lo = fake.e_hi = fake.witness.E = 2.0;  // hard infeasible
  fake.K = 3;
  fake.witness.free_moments.resize(0);
  CHECK_THROWS_AS(refine_window(model, fake, g), WitnessLost);
}

TEST_CASE("scan rejects mismatched grids") {
  ModelSpec model{ModelId::shifted_sho, {{"eps", 0.5}}};
  GridSpec g;
  g.dims = {{"E", 0.0, 5.0, 0.01}, {"s2", 0.0, 1.0, 0.1}};
  g.K = 8;
  CHECK_THROWS_AS(scan(model, g), DimensionMismatch);

  GridSpec g2 = grid1d(0.0, 5.0, 0.01, 8);
  g2.dims[0].name = "s2";
  CHECK_THROWS_AS(scan(model, g2), DimensionMismatch);
}

TEST_CASE("scan is deterministic across thread counts") {
  ModelSpec model{ModelId::poschl_teller_hermitian, {{"lambda", 3.0}}};
  GridSpec g;
  g.dims = {{"E", -10.0, -0.5, 0.1}, {"s2", 0.1, 1.0, 0.05}};
  g.K = 5;

  g.threads = 1;
  const auto a = scan(model, g, true);
  g.threads = 2;
  const auto b = scan(model, g, true);

  REQUIRE(a.windows.size() == b.windows.size());
  for (std::size_t i = 0; i < a.windows.size(); ++i) {
    CHECK(a.windows[i].e_lo == b.windows[i].e_lo);
    CHECK(a.windows[i].e_hi == b.windows[i].e_hi);
    CHECK(a.windows[i].witness.E == b.windows[i].witness.E);
  }
  REQUIRE(a.feasible_points.size() == b.feasible_points.size());
  for (std::size_t i = 0; i < a.feasible_points.size(); ++i) {
    CHECK(a.feasible_points[i].point.E == b.feasible_points[i].point.E);
    CHECK(a.feasible_points[i].min_eigenvalue == b.feasible_points[i].min_eigenvalue);
  }
}

TEST_CASE("pt and hermitian poschl-teller windows are bit-identical") {
  GridSpec g;
  g.dims = {{"E", -10.0, -0.5, 0.1}, {"s2", 0.1, 1.0, 0.05}};
  g.K = 5;
  ModelSpec herm{ModelId::poschl_teller_hermitian, {{"lambda", 3.0}}};
  ModelSpec pt{ModelId::poschl_teller_pt, {{"lambda", 3.0}, {"eps", 0.4}}};
  const auto a = scan(herm, g);
  const auto b = scan(pt, g);
  REQUIRE(a.windows.size() == b.windows.size());
  for (std::size_t i = 0; i < a.windows.size(); ++i) {
    CHECK(a.windows[i].e_lo == b.windows[i].e_lo);
    CHECK(a.windows[i].e_hi == b.windows[i].e_hi);
  }
}

TEST_CASE("halving the scan step keeps the eigenvalue containment") {
  ModelSpec model{ModelId::shifted_sho, {{"eps", 0.5}}};
  const auto coarse = scan(model, grid1d(0.5, 2.0, 0.01, 8));
  const auto fine = scan(model, grid1d(0.5, 2.0, 0.005, 8));
  CHECK(window_containing(coarse.windows, 1.25, 0.005) != nullptr);
  CHECK(window_containing(fine.windows, 1.25, 0.0025) != nullptr);
}

TEST_CASE("coupled oscillator minimization tracks the closed form") {
  ModelSpec model{ModelId::coupled_sho, {{"eps", 0.3}}};
  GridSpec g;
  g.dims = {{"x2", 0.05, 1.5, 0.01}, {"p2", 0.05, 1.5, 0.01}};
  g.K = 5;
  const auto [emin, argmin] = minimize_energy_feasible(model, g);
  CHECK(std::abs(emin - exact_coupled_sho_ground(0.3)) / exact_coupled_sho_ground(0.3) < 0.02);
  CHECK(argmin.free_moments.size() == 2);
}

TEST_CASE("minimization reports an empty feasible box") {
  // moments this small violate the x2 * p2 >= 1/4 uncertainty block
  ModelSpec model{ModelId::coupled_sho, {{"eps", 0.3}}};
  GridSpec g;
  g.dims = {{"x2", 0.01, 0.1, 0.01}, {"p2", 0.01, 0.1, 0.01}};
  g.K = 5;
  CHECK_THROWS_AS(minimize_energy_feasible(model, g), NoFeasiblePoint);
}

TEST_CASE("scan on a coupled model returns the minimum instead of windows") {
  ModelSpec model{ModelId::coupled_sho, {{"eps", 0.3}}};
  GridSpec g;
  g.dims = {{"x2", 0.3, 0.8, 0.02}, {"p2", 0.3, 0.8, 0.02}};
  g.K = 5;
  const auto res = scan(model, g);
  CHECK(res.windows.empty());
  REQUIRE(res.min_energy.has_value());
  CHECK(res.min_energy->first >= exact_coupled_sho_ground(0.3) - 1e-9);
}
