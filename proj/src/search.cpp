#include "ptboot/search.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

namespace ptboot {

namespace {

// Flat index odometer over the companion dims (dims[1..]).
class CompanionIter {
 public:
  explicit CompanionIter(const std::vector<GridDim>& dims) : dims_(dims) {
    counts_.reserve(dims.size());
    for (const auto& d : dims_) counts_.push_back(d.count());
    total_ = 1;
    for (Index c : counts_) total_ *= c;
  }

  Index total() const { return total_; }

  Eigen::VectorXd coords(Index flat) const {
    Eigen::VectorXd out(static_cast<Index>(dims_.size()));
    for (Index i = static_cast<Index>(dims_.size()) - 1; i >= 0; --i) {
      out[i] = dims_[i].point(flat % counts_[i]);
      flat /= counts_[i];
    }
    return out;
  }

 private:
  std::vector<GridDim> dims_;
  std::vector<Index> counts_;
  Index total_ = 1;
};

struct RowResult {
  bool any_feasible = false;
  Eigen::VectorXd witness_companion;
  double witness_margin = 0.0;
  double best_energy = std::numeric_limits<double>::infinity();
  Eigen::VectorXd best_coords;
  double best_margin = 0.0;
  std::vector<FeasiblePoint> points;
  long tested = 0;
  long skipped = 0;
  double max_abs_moment = 0.0;
};

int worker_count(const GridSpec& grid, Index rows) {
  int n = grid.threads > 0 ? grid.threads
                           : static_cast<int>(std::thread::hardware_concurrency());
  if (n < 1) n = 1;
  return static_cast<int>(std::min<Index>(n, rows));
}

// Runs fn(row) for every row index on a small pool. Each row is owned by
// exactly one worker, so the merged result is independent of scheduling.
template <typename Fn>
void parallel_rows(Index rows, int workers, Fn&& fn) {
  if (workers <= 1) {
    for (Index r = 0; r < rows; ++r) fn(r);
    return;
  }
  std::atomic<Index> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (Index r = next.fetch_add(1); r < rows; r = next.fetch_add(1)) fn(r);
    });
  for (auto& t : pool) t.join();
}

void check_grid_matches_model(const ModelSpec& model, const GridSpec& grid) {
  const auto names = search_coordinates(model.id);
  if (grid.dims.size() != names.size())
    throw DimensionMismatch("grid has " + std::to_string(grid.dims.size()) + " dims, model " +
                            to_string(model.id) + " needs " + std::to_string(names.size()));
  for (std::size_t i = 0; i < names.size(); ++i)
    if (grid.dims[i].name != names[i])
      throw DimensionMismatch("grid dim " + std::to_string(i) + " is '" + grid.dims[i].name +
                              "', expected '" + names[i] + "'");
}

}  // namespace

Index GridDim::count() const {
  return static_cast<Index>(std::floor((hi - lo) / step + 1e-9)) + 1;
}

void GridDim::validate() const {
  if (!(lo < hi)) throw ConfigError("grid dim '" + name + "': lo must be < hi");
  if (!(step > 0)) throw ConfigError("grid dim '" + name + "': step must be > 0");
}

void GridSpec::validate() const {
  if (dims.empty()) throw ConfigError("grid needs at least one dim");
  for (const auto& d : dims) d.validate();
  if (K < 2) throw ConfigError("K must be >= 2");
  if (!(tol_scale > 0)) throw ConfigError("tol_scale must be > 0");
  if (refine_iters < 0) throw ConfigError("refine_iters must be >= 0");
}

ScanResult scan(const ModelSpec& model, const GridSpec& grid, bool emit_points) {
  const auto t0 = std::chrono::steady_clock::now();
  model.validate();
  grid.validate();
  check_grid_matches_model(model, grid);

  ScanResult result;
  result.model = model;
  result.grid = grid;

  const bool objective = has_energy_objective(model.id);
  const GridDim row_dim = grid.dims[0];
  const Index rows = row_dim.count();
  CompanionIter companions(
      std::vector<GridDim>(grid.dims.begin() + 1, grid.dims.end()));

  std::vector<RowResult> row_results(rows);
  parallel_rows(rows, worker_count(grid, rows), [&](Index r) {
    RowResult& out = row_results[r];
    const double row_value = row_dim.point(r);
    const Index n_comp = companions.total();
    for (Index c = 0; c < n_comp; ++c) {
      Eigen::VectorXd coords(static_cast<Index>(grid.dims.size()));
      coords[0] = row_value;
      if (coords.size() > 1) coords.tail(coords.size() - 1) = companions.coords(c);
      PointEval ev;
      try {
        ev = evaluate_point(model, coords, grid.K, grid.tol_scale);
      } catch (const SingularPoint&) {
        ++out.skipped;
        continue;
      } catch (const SingularRecursion&) {
        ++out.skipped;
        continue;
      }
      ++out.tested;
      out.max_abs_moment = std::max(out.max_abs_moment, ev.max_abs_moment);
      if (!ev.feasible) continue;

      if (!out.any_feasible) {
        out.any_feasible = true;
        out.witness_companion = coords.tail(coords.size() - 1);
        out.witness_margin = ev.min_eigenvalue;
      }
      if (objective && ev.energy < out.best_energy) {
        out.best_energy = ev.energy;
        out.best_coords = coords;
        out.best_margin = ev.min_eigenvalue;
      }
      if (emit_points) {
        FeasiblePoint fp;
        fp.point.E = objective ? ev.energy : row_value;
        fp.point.free_moments =
            objective ? coords : Eigen::VectorXd(coords.tail(coords.size() - 1));
        fp.min_eigenvalue = ev.min_eigenvalue;
        out.points.push_back(std::move(fp));
      } else if (!objective) {
        break;  // one feasible companion settles this E
      }
    }
  });

  for (const auto& rr : row_results) {
    result.stats.points_tested += rr.tested;
    result.stats.points_skipped += rr.skipped;
    result.stats.max_abs_moment = std::max(result.stats.max_abs_moment, rr.max_abs_moment);
    if (emit_points)
      result.feasible_points.insert(result.feasible_points.end(), rr.points.begin(),
                                    rr.points.end());
    if (rr.any_feasible) ++result.stats.points_feasible;
  }

  if (objective) {
    const RowResult* best = nullptr;
    for (const auto& rr : row_results)
      if (rr.any_feasible && (best == nullptr || rr.best_energy < best->best_energy))
        best = &rr;
    if (best != nullptr) {
      SearchPoint argmin;
      argmin.E = best->best_energy;
      argmin.free_moments = best->best_coords;
      result.min_energy = {best->best_energy, argmin};
    }
  } else {
    // windows = maximal runs of feasible E indices
    Index run_start = -1;
    for (Index r = 0; r <= rows; ++r) {
      const bool feas = r < rows && row_results[r].any_feasible;
      if (feas && run_start < 0) run_start = r;
      if (!feas && run_start >= 0) {
        const Index run_end = r - 1;
        const Index mid = run_start + (run_end - run_start) / 2;
        FeasibleWindow w;
        w.e_lo = row_dim.point(run_start);
        w.e_hi = row_dim.point(run_end);
        w.K = grid.K;
        w.witness.E = row_dim.point(mid);
        w.witness.free_moments = row_results[mid].witness_companion;
        result.windows.push_back(std::move(w));
        run_start = -1;
      }
    }
  }

  result.stats.runtime_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

namespace {

// Feasibility of the model at energy E; multi-dim models re-test a local
// companion grid (same step, +-5 steps clamped to the dim range) around the
// witness companions. Singular points count as infeasible.
bool feasible_at_energy(const ModelSpec& model, const GridSpec& grid, double E,
                        const Eigen::VectorXd& witness_companion) {
  const Index d = static_cast<Index>(grid.dims.size());
  std::vector<std::vector<double>> axes;
  for (Index i = 1; i < d; ++i) {
    const GridDim& dim = grid.dims[i];
    std::vector<double> axis;
    for (int j = -5; j <= 5; ++j) {
      const double v = witness_companion[i - 1] + j * dim.step;
      if (v >= dim.lo - 1e-12 && v <= dim.hi + 1e-12) axis.push_back(v);
    }
    axes.push_back(std::move(axis));
  }

  std::vector<std::size_t> idx(axes.size(), 0);
  while (true) {
    Eigen::VectorXd coords(d);
    coords[0] = E;
    for (std::size_t i = 0; i < axes.size(); ++i) coords[1 + i] = axes[i][idx[i]];
    try {
      if (evaluate_point(model, coords, grid.K, grid.tol_scale).feasible) return true;
    } catch (const SingularPoint&) {
    } catch (const SingularRecursion&) {
    }
    std::size_t i = 0;
    for (; i < axes.size(); ++i) {
      if (++idx[i] < axes[i].size()) break;
      idx[i] = 0;
    }
    if (i == axes.size()) return false;  // odometer wrapped
  }
}

}  // namespace

FeasibleWindow refine_window(const ModelSpec& model, const FeasibleWindow& window,
                             const GridSpec& grid) {
  model.validate();
  grid.validate();
  check_grid_matches_model(model, grid);
  if (window.K != grid.K)
    throw Error("refine_window: window was produced at a different K");

  const double step = grid.dims[0].step;
  const auto& wc = window.witness.free_moments;
  if (!feasible_at_energy(model, grid, window.witness.E, wc))
    throw WitnessLost("window witness is no longer feasible at this tolerance");

  FeasibleWindow refined = window;

  // Edges abutting the scanned range have no infeasible sample to bracket
  // against and are left as found.
  if (window.e_lo - step >= grid.dims[0].lo - 0.5 * step) {
    double bad = window.e_lo - step;
    double good = window.e_lo;
    for (int i = 0; i < grid.refine_iters; ++i) {
      const double mid = 0.5 * (bad + good);
      if (feasible_at_energy(model, grid, mid, wc))
        good = mid;
      else
        bad = mid;
    }
    refined.e_lo = good;
  }
  if (window.e_hi + step <= grid.dims[0].hi + 0.5 * step) {
    double good = window.e_hi;
    double bad = window.e_hi + step;
    for (int i = 0; i < grid.refine_iters; ++i) {
      const double mid = 0.5 * (bad + good);
      if (feasible_at_energy(model, grid, mid, wc))
        good = mid;
      else
        bad = mid;
    }
    refined.e_hi = good;
  }
  return refined;
}

std::pair<double, SearchPoint> minimize_energy_feasible(const ModelSpec& model,
                                                        const GridSpec& grid) {
  if (!has_energy_objective(model.id))
    throw Error("minimize_energy_feasible: model has no energy objective");
  ScanResult coarse = scan(model, grid);
  if (!coarse.min_energy) {
    std::string box;
    for (const auto& d : grid.dims)
      box += " " + d.name + " in [" + std::to_string(d.lo) + ", " + std::to_string(d.hi) + "]";
    throw NoFeasiblePoint("no feasible point in scanned box:" + box);
  }

  auto best = *coarse.min_energy;
  // two local refinements: re-grid +-2 old steps around the argmin at step/5
  GridSpec local = grid;
  for (int round = 0; round < 2; ++round) {
    for (std::size_t i = 0; i < local.dims.size(); ++i) {
      GridDim& d = local.dims[i];
      const double center = best.second.free_moments[static_cast<Index>(i)];
      const double halfspan = 2.0 * d.step;
      d.lo = std::max(grid.dims[i].lo, center - halfspan);
      d.hi = std::min(grid.dims[i].hi, center + halfspan);
      d.step /= 5.0;
    }
    ScanResult fine = scan(model, local);
    if (fine.min_energy && fine.min_energy->first < best.first) best = *fine.min_energy;
  }
  return best;
}

}  // namespace ptboot
