#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "ptboot/models.hpp"

namespace ptboot {

/// One scan axis. Points are lo, lo+step, ..., hi (inclusive up to rounding).
struct GridDim {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  double step = 0.0;

  Index count() const;
  double point(Index i) const { return lo + static_cast<double>(i) * step; }
  void validate() const;
};

struct GridSpec {
  std::vector<GridDim> dims;
  Index K = 2;
  double tol_scale = 1e-9;
  int refine_iters = 40;
  int threads = 0;  // 0 = hardware concurrency

  void validate() const;
};

/// Interval of trial energies surviving the PSD test, with a feasible witness.
struct FeasibleWindow {
  double e_lo = 0.0;
  double e_hi = 0.0;
  SearchPoint witness;
  Index K = 0;

  double width() const { return e_hi - e_lo; }
  bool contains(double E, double slack = 0.0) const {
    return E >= e_lo - slack && E <= e_hi + slack;
  }
};

struct FeasiblePoint {
  SearchPoint point;
  double min_eigenvalue = 0.0;
};

struct ScanStats {
  long points_tested = 0;
  long points_feasible = 0;
  long points_skipped = 0;  // singular recursion / singular closed-form points
  double max_abs_moment = 0.0;
  double runtime_ms = 0.0;
};

struct ScanResult {
  ModelSpec model;
  GridSpec grid;
  std::vector<FeasiblePoint> feasible_points;  // filled when emit_points
  std::vector<FeasibleWindow> windows;         // disjoint, sorted by e_lo
  std::optional<std::pair<double, SearchPoint>> min_energy;
  ScanStats stats;
};

/// Evaluate feasibility at every grid point. For windowed models the first
/// dim must be E and an E value is feasible iff any companion point is
/// feasible; windows are maximal runs of feasible E values. For the coupled
/// models the grid is (x2, p2) and min_energy is tracked instead of windows.
/// Deterministic for a fixed grid and tolerance, independent of thread count.
ScanResult scan(const ModelSpec& model, const GridSpec& grid, bool emit_points = false);

/// Sharpen both window edges by bisecting between the outermost feasible and
/// innermost infeasible samples; runs refine_iters bisection steps per edge.
/// Multi-dimensional models re-test companion moments on a local grid of the
/// same step around the window's witness. Throws WitnessLost if the witness
/// fails its own feasibility re-check.
FeasibleWindow refine_window(const ModelSpec& model, const FeasibleWindow& window,
                             const GridSpec& grid);

/// Exhaustive feasibility scan over (x2, p2) followed by two local grid
/// shrink-refinements around the argmin; returns the minimal feasible energy.
/// Throws NoFeasiblePoint when nothing in the scanned box is feasible.
std::pair<double, SearchPoint> minimize_energy_feasible(const ModelSpec& model,
                                                        const GridSpec& grid);

}  // namespace ptboot
