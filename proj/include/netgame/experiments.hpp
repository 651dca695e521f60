#ifndef NETGAME_EXPERIMENTS_HPP
#define NETGAME_EXPERIMENTS_HPP

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "netgame/game.hpp"
#include "netgame/graphs.hpp"
#include "netgame/pricing.hpp"

namespace netgame {

enum class ExperimentKind { AlphaSweep, GbarSweep, Single };
enum class PricingMode { Discriminatory, Uniform };

struct SolverSettings {
  double tol = 1e-10;
  long max_iter = 100000;
};

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::AlphaSweep;
  GraphParams graph;
  double a_scalar = 1.0;  ///< common marginal utility
  double b_scalar = 1.0;  ///< common quadratic cost
  /// Ring sweeps only: couple the cost to the swept edge weight (b = g_bar).
  bool b_tracks_gbar = false;
  InteractionFunction f = InteractionFunction::log1p();
  PricingMode mode = PricingMode::Discriminatory;
  /// Swept parameter values; empty selects the family default grid.
  std::vector<double> sweep_grid;
  SolverSettings tolerances;
  std::string output_dir = ".";
};

/// One evaluated sweep point. status is "ok", "skipped" (the point was not
/// solvable under the declared preconditions, e.g. rho <= 0 on a uniform
/// sweep) or "failed" (a solver raised); non-ok rows carry NaN values.
struct SweepRow {
  double param = 0.0;
  double j_star = std::numeric_limits<double>::quiet_NaN();
  double j_agnostic = std::numeric_limits<double>::quiet_NaN();
  double inverse_poi = std::numeric_limits<double>::quiet_NaN();
  double gap = std::numeric_limits<double>::quiet_NaN();
  double bound = std::numeric_limits<double>::quiet_NaN();
  long iterations = 0;
  std::string status = "ok";
};

/// 101 evenly spaced mixing weights covering [0, 1].
inline std::vector<double> default_alpha_grid() {
  std::vector<double> g(101);
  for (int k = 0; k <= 100; ++k) g[static_cast<size_t>(k)] = k / 100.0;
  return g;
}

/// 100 evenly spaced edge weights covering (0, 1].
inline std::vector<double> default_gbar_grid() {
  std::vector<double> g(100);
  for (int k = 1; k <= 100; ++k) g[static_cast<size_t>(k - 1)] = k / 100.0;
  return g;
}

namespace detail {

inline SweepRow discriminatory_row(const GameSpec& game, double param,
                                   const SolverSettings& s) {
  SweepRow row;
  row.param = param;
  try {
    const AgnosticBaseline base =
        agnostic_baseline(game, NeOptions{s.tol, s.max_iter});
    const PricingSolution sol =
        solve_optimal_price(game, PgOptions{s.tol, s.max_iter});
    row.j_star = sol.revenue;
    row.j_agnostic = base.revenue;
    row.inverse_poi = base.revenue / sol.revenue;
    row.gap = sol.revenue / base.revenue - 1.0;
    row.iterations = sol.iterations;
    try {
      row.bound = poi_lower_bound(game);
    } catch (const error&) {
      row.bound = std::numeric_limits<double>::quiet_NaN();
    }
  } catch (const error&) {
    row = SweepRow{};
    row.param = param;
    row.status = "failed";
  }
  return row;
}

}  // namespace detail

/// Discriminatory-pricing sweep over the direction-mixing weight alpha for
/// the star or preferential-attachment family: each grid point rebuilds the
/// graph (same seed), solves the optimal and agnostic problems, and records
/// the revenue ratio and — where the instance admits it — the certified gap
/// bound. Rows keep grid order.
inline std::vector<SweepRow> run_alpha_sweep(const ExperimentConfig& cfg) {
  if (cfg.graph.family == GraphFamily::Ring)
    throw std::invalid_argument("run_alpha_sweep: use run_gbar_sweep for the ring family");
  const std::vector<double> grid =
      cfg.sweep_grid.empty() ? default_alpha_grid() : cfg.sweep_grid;
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double alpha : grid) {
    GraphParams gp = cfg.graph;
    gp.alpha = alpha;
    const int n = gp.n;
    const GameSpec game = make_game(Vec::Constant(n, cfg.a_scalar),
                                    Vec::Constant(n, cfg.b_scalar),
                                    make_graph(gp), cfg.f);
    rows.push_back(detail::discriminatory_row(game, alpha, cfg.tolerances));
  }
  return rows;
}

/// Sweep over the ring edge weight g_bar, in discriminatory or uniform
/// pricing mode. With b_tracks_gbar the cost follows the swept weight
/// (b = g_bar). Points whose instance leaves the certified regime
/// (rho <= 0 or rho' <= 0, or a nonpositive cost) are flagged "skipped".
inline std::vector<SweepRow> run_gbar_sweep(const ExperimentConfig& cfg) {
  if (cfg.graph.family != GraphFamily::Ring)
    throw std::invalid_argument("run_gbar_sweep: only the ring family is uniform");
  const std::vector<double> grid =
      cfg.sweep_grid.empty() ? default_gbar_grid() : cfg.sweep_grid;
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double g_bar : grid) {
    SweepRow row;
    row.param = g_bar;
    const double b_val = cfg.b_tracks_gbar ? g_bar : cfg.b_scalar;
    if (!(b_val > 0.0)) {
      row.status = "skipped";
      rows.push_back(row);
      continue;
    }
    const int n = cfg.graph.n;
    const GameSpec game = make_game(Vec::Constant(n, cfg.a_scalar),
                                    Vec::Constant(n, b_val),
                                    ring_graph(n, g_bar), cfg.f);
    const AssumptionReport rep = check_assumptions(game);
    if (!rep.assumption3_ok) {
      row.status = "skipped";
      rows.push_back(row);
      continue;
    }
    if (cfg.mode == PricingMode::Discriminatory) {
      rows.push_back(detail::discriminatory_row(game, g_bar, cfg.tolerances));
      continue;
    }
    try {
      const UniformPricing opt = solve_uniform_price(game, cfg.tolerances.tol);
      const UniformAgnostic base = uniform_agnostic(game, cfg.tolerances.tol);
      row.j_star = opt.revenue;
      row.j_agnostic = base.revenue;
      row.inverse_poi = base.revenue / opt.revenue;
      row.gap = opt.revenue / base.revenue - 1.0;
      row.bound = uniform_poi_lower_bound(game);
      row.iterations = opt.iterations;
    } catch (const error&) {
      row = SweepRow{};
      row.param = g_bar;
      row.status = "failed";
    }
    rows.push_back(row);
  }
  return rows;
}

/// Evaluates the configured instance at its fixed graph parameters and
/// returns the single resulting row (param = alpha or g_bar as applicable).
inline SweepRow run_single(const ExperimentConfig& cfg) {
  const int n = cfg.graph.n;
  const double b_val =
      (cfg.graph.family == GraphFamily::Ring && cfg.b_tracks_gbar)
          ? cfg.graph.g_bar : cfg.b_scalar;
  if (!(b_val > 0.0)) throw std::invalid_argument("run_single: nonpositive cost");
  const GameSpec game = make_game(Vec::Constant(n, cfg.a_scalar),
                                  Vec::Constant(n, b_val),
                                  make_graph(cfg.graph), cfg.f);
  const double param = cfg.graph.family == GraphFamily::Ring
                           ? cfg.graph.g_bar : cfg.graph.alpha;
  if (cfg.mode == PricingMode::Uniform) {
    SweepRow row;
    row.param = param;
    const UniformPricing opt = solve_uniform_price(game, cfg.tolerances.tol);
    const UniformAgnostic base = uniform_agnostic(game, cfg.tolerances.tol);
    row.j_star = opt.revenue;
    row.j_agnostic = base.revenue;
    row.inverse_poi = base.revenue / opt.revenue;
    row.gap = opt.revenue / base.revenue - 1.0;
    row.bound = uniform_poi_lower_bound(game);
    row.iterations = opt.iterations;
    return row;
  }
  return detail::discriminatory_row(game, param, cfg.tolerances);
}

struct BruteForceResult {
  Vec x;          ///< best profile found
  double revenue = 0.0;
};

/// Exhaustive reference maximizer of J for n <= 3: scans the grid
/// {0, step, 2 step, ...} up to x_max in every coordinate, then rescans a
/// one-cell neighbourhood of the best point at step / 100. Intended as an
/// independent check on the gradient solver, not for production use.
inline BruteForceResult brute_force_optimal(const GameSpec& g, double x_max,
                                            double coarse_step) {
  if (g.n() > 3)
    throw std::invalid_argument("brute_force_optimal: grid search only supports n <= 3");
  if (!(x_max > 0.0) || !(coarse_step > 0.0) || !(coarse_step <= x_max))
    throw std::invalid_argument("brute_force_optimal: need 0 < coarse_step <= x_max");

  const int n = static_cast<int>(g.n());
  auto scan = [&](const Vec& lo, const Vec& hi, double step, Vec& best_x) {
    std::vector<long> counts(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      counts[static_cast<size_t>(i)] =
          static_cast<long>(std::floor((hi[i] - lo[i]) / step)) + 1;
    std::vector<long> idx(static_cast<size_t>(n), 0);
    Vec x(n);
    double best = -std::numeric_limits<double>::infinity();
    for (;;) {
      for (int i = 0; i < n; ++i) x[i] = lo[i] + step * idx[static_cast<size_t>(i)];
      const double j = revenue_J(g, x);
      if (j > best) {
        best = j;
        best_x = x;
      }
      int d = 0;
      while (d < n && ++idx[static_cast<size_t>(d)] == counts[static_cast<size_t>(d)])
        idx[static_cast<size_t>(d++)] = 0;
      if (d == n) break;
    }
    return best;
  };

  Vec best_x(n);
  scan(Vec::Zero(n), Vec::Constant(n, x_max), coarse_step, best_x);
  const Vec lo = (best_x.array() - coarse_step).max(0.0).matrix();
  const Vec hi = (best_x.array() + coarse_step).min(x_max).matrix();
  Vec refined(n);
  const double best = scan(lo, hi, coarse_step / 100.0, refined);
  return BruteForceResult{refined, best};
}

/// Sub-grid location of the minimum of a sampled curve: fits a parabola
/// through the best sample and its neighbours and returns the vertex
/// abscissa (clamped to the neighbour interval; falls back to the grid
/// point at the boundary or under degeneracy). NaN samples are ignored.
inline double quadratic_argmin(const std::vector<double>& xs,
                               const std::vector<double>& ys) {
  if (xs.size() != ys.size() || xs.empty())
    throw std::invalid_argument("quadratic_argmin: need equal-size nonempty samples");
  size_t best = xs.size();
  for (size_t i = 0; i < xs.size(); ++i)
    if (!std::isnan(ys[i]) && (best == xs.size() || ys[i] < ys[best])) best = i;
  if (best == xs.size())
    throw std::invalid_argument("quadratic_argmin: all samples are NaN");
  if (best == 0 || best + 1 == xs.size()) return xs[best];
  if (std::isnan(ys[best - 1]) || std::isnan(ys[best + 1])) return xs[best];

  const double x0 = xs[best - 1], x1 = xs[best], x2 = xs[best + 1];
  const double y0 = ys[best - 1], y1 = ys[best], y2 = ys[best + 1];
  const double d0 = (y1 - y0) / (x1 - x0);
  const double d1 = (y2 - y1) / (x2 - x1);
  const double curv = (d1 - d0) / (x2 - x0);
  if (!(curv > 0.0)) return x1;
  const double vertex = 0.5 * (x0 + x1 - d0 / curv);
  return std::min(std::max(vertex, x0), x2);
}

}  // namespace netgame

#endif  // NETGAME_EXPERIMENTS_HPP
