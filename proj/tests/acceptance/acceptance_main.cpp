// Acceptance gate: eight end-to-end criteria, one [PASS]/[FAIL] line each,
// exit code = number of failed criteria. Tolerances are pinned here, next to
// the checks that use them, so the gate cannot drift silently.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "../support.hpp"

using namespace netgame;

namespace {

std::string strf(const char* fmt, ...) {
  char buf[256];
  va_list args;
  va_start(args, fmt);
  std::vsnprintf(buf, sizeof(buf), fmt, args);
  va_end(args);
  return buf;
}

struct Check {
  std::vector<std::string>* notes;
  bool ok = true;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes->push_back("unmet: " + what);
    }
  }
  void info(const std::string& what) { notes->push_back(what); }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// ---------------------------------------------------------------------------
// C1: hub-and-spokes mixing sweep, n = 10, a = b = 1, 101-point grid.
// Linear interaction: ratio exactly 1 at the symmetric mix, below 1 elsewhere,
// rising monotonically toward the center from both ends. Concave kinds: the
// ratio stays strictly below 1 and its peak (the mix where discriminatory
// pricing helps least) sits at the reference height and location, skewed
// below the symmetric mix.
bool criterion1(std::vector<std::string>& notes) {
  Check c{&notes};
  const auto t0 = std::chrono::steady_clock::now();

  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::AlphaSweep;
  cfg.graph.family = GraphFamily::Star;
  cfg.graph.n = 10;
  cfg.a_scalar = 1.0;
  cfg.b_scalar = 1.0;

  auto sweep = [&](InteractionFunction f) {
    cfg.f = std::move(f);
    const auto rows = run_alpha_sweep(cfg);
    c.require(rows.size() == 101, "default grid has 101 points");
    for (const SweepRow& r : rows) {
      c.require(r.status == "ok", strf("row alpha=%.2f solved", r.param));
      c.require(r.inverse_poi <= 1.0 + 1e-9,
                strf("revenue ratio <= 1 + 1e-9 at alpha=%.2f", r.param));
    }
    return rows;
  };

  const auto lin = sweep(InteractionFunction::linear());
  c.require(std::abs(lin[50].inverse_poi - 1.0) <= 1e-6,
            "linear: ratio = 1 at the symmetric mix (1e-6)");
  for (size_t k = 0; k < lin.size(); ++k)
    if (k != 50)
      c.require(lin[k].inverse_poi < 1.0 - 1e-7,
                strf("linear: ratio < 1 off-center (alpha=%.2f)", lin[k].param));
  for (size_t k = 1; k <= 50; ++k)
    c.require(lin[k].inverse_poi >= lin[k - 1].inverse_poi - 1e-9,
              strf("linear: nondecreasing toward the center (alpha=%.2f)",
                   lin[k].param));
  for (size_t k = 51; k < lin.size(); ++k)
    c.require(lin[k].inverse_poi <= lin[k - 1].inverse_poi + 1e-9,
              strf("linear: nonincreasing past the center (alpha=%.2f)",
                   lin[k].param));

  // Peak of the ratio curve: height from the grid, location refined by a
  // parabola through the three points around the grid maximum (fit on the
  // negated curve so the vertex formula applies).
  auto locate_peak = [&](const std::vector<SweepRow>& rows, double& hi,
                         double& at) {
    std::vector<double> xs, neg;
    hi = -2.0;
    for (const SweepRow& r : rows) {
      xs.push_back(r.param);
      neg.push_back(-r.inverse_poi);
      if (r.inverse_poi > hi) hi = r.inverse_poi;
    }
    at = quadratic_argmin(xs, neg);
  };

  double hi1 = 0, at1 = 0, hi2 = 0, at2 = 0;
  const auto log_rows = sweep(InteractionFunction::log1p());
  locate_peak(log_rows, hi1, at1);
  for (const SweepRow& r : log_rows)
    c.require(r.inverse_poi < 1.0 - 1e-7,
              strf("log interaction: ratio strictly below 1 (alpha=%.2f)",
                   r.param));
  c.require(std::abs(hi1 - 0.989) <= 0.002,
            strf("log interaction: peak height %.6f within 0.989 +- 0.002",
                 hi1));
  c.require(std::abs(at1 - 0.41) <= 0.02,
            strf("log interaction: peak location %.4f within 0.41 +- 0.02",
                 at1));
  c.require(at1 < 0.5, "log interaction: peak skewed below the symmetric mix");

  const auto sharp_rows = sweep(InteractionFunction::scaled_log(10.0));
  locate_peak(sharp_rows, hi2, at2);
  for (const SweepRow& r : sharp_rows)
    c.require(r.inverse_poi < 1.0 - 1e-7,
              strf("sharper log: ratio strictly below 1 (alpha=%.2f)",
                   r.param));
  c.require(std::abs(hi2 - 0.995) <= 0.002,
            strf("sharper log: peak height %.6f within 0.995 +- 0.002", hi2));
  c.require(std::abs(at2 - 0.32) <= 0.03,
            strf("sharper log: peak location %.4f within 0.32 +- 0.03", at2));
  c.require(at2 < 0.5, "sharper log: peak skewed below the symmetric mix");

  const double secs = seconds_since(t0);
  c.require(secs < 30.0, strf("runtime %.1fs under 30s", secs));
  c.info(strf("peaks: log %.6f @ %.4f, sharper log %.6f @ %.4f (%.1fs)",
              hi1, at1, hi2, at2, secs));
  return c.ok;
}

// ---------------------------------------------------------------------------
// C2: preferential-attachment mixing sweep, n = 100, m = 2, a = 1, b = 2,
// seed-averaged over seeds 1..5; banded targets for the peak of the
// averaged ratio curve.
bool criterion2(std::vector<std::string>& notes) {
  Check c{&notes};
  const auto t0 = std::chrono::steady_clock::now();
  const auto grid = default_alpha_grid();

  auto averaged_peak = [&](InteractionFunction f, double& hi, double& at) {
    std::vector<double> sum(grid.size(), 0.0);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      ExperimentConfig cfg;
      cfg.experiment = ExperimentKind::AlphaSweep;
      cfg.graph.family = GraphFamily::PreferentialAttachment;
      cfg.graph.n = 100;
      cfg.graph.m = 2;
      cfg.graph.seed = seed;
      cfg.a_scalar = 1.0;
      cfg.b_scalar = 2.0;
      cfg.f = f;
      const auto rows = run_alpha_sweep(cfg);
      for (size_t k = 0; k < rows.size(); ++k) {
        c.require(rows[k].status == "ok",
                  strf("seed %llu alpha=%.2f solved",
                       static_cast<unsigned long long>(seed), rows[k].param));
        c.require(rows[k].inverse_poi <= 1.0 + 1e-9,
                  strf("seed %llu ratio <= 1 + 1e-9 at alpha=%.2f",
                       static_cast<unsigned long long>(seed), rows[k].param));
        sum[k] += rows[k].inverse_poi;
      }
    }
    std::vector<double> neg(grid.size());
    hi = -2.0;
    for (size_t k = 0; k < grid.size(); ++k) {
      const double avg = sum[k] / 5.0;
      neg[k] = -avg;
      if (avg > hi) hi = avg;
    }
    at = quadratic_argmin(grid, neg);
  };

  double hi1 = 0, at1 = 0, hi2 = 0, at2 = 0;
  averaged_peak(InteractionFunction::log1p(), hi1, at1);
  c.require(std::abs(hi1 - 0.999) <= 0.005,
            strf("log interaction: averaged peak %.6f within 0.999 +- 0.005",
                 hi1));
  c.require(std::abs(at1 - 0.44) <= 0.10,
            strf("log interaction: peak location %.4f within 0.44 +- 0.10",
                 at1));
  c.require(at1 < 0.5, "log interaction: peak skewed below the symmetric mix");

  averaged_peak(InteractionFunction::scaled_log(10.0), hi2, at2);
  c.require(std::abs(hi2 - 0.998) <= 0.005,
            strf("sharper log: averaged peak %.6f within 0.998 +- 0.005", hi2));
  c.require(std::abs(at2 - 0.32) <= 0.10,
            strf("sharper log: peak location %.4f within 0.32 +- 0.10", at2));
  c.require(at2 < 0.5, "sharper log: peak skewed below the symmetric mix");

  const double secs = seconds_since(t0);
  c.require(secs < 300.0, strf("runtime %.1fs under 300s", secs));
  c.info(strf("peaks: log %.6f @ %.4f, sharper log %.6f @ %.4f (%.1fs)",
              hi1, at1, hi2, at2, secs));
  return c.ok;
}

// ---------------------------------------------------------------------------
// C3: discriminatory pricing on the directed cycle with the cost tied to the
// edge weight (a = 2, b = g_bar, n = 100): the measured relative gap
// dominates the certified bound at every point; the bound is nonnegative and
// vanishes as the weight goes to zero.
bool criterion3(std::vector<std::string>& notes) {
  Check c{&notes};
  const auto t0 = std::chrono::steady_clock::now();

  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::GbarSweep;
  cfg.graph.family = GraphFamily::Ring;
  cfg.graph.n = 100;
  cfg.a_scalar = 2.0;
  cfg.b_tracks_gbar = true;
  cfg.f = InteractionFunction::log1p();
  cfg.mode = PricingMode::Discriminatory;

  const auto rows = run_gbar_sweep(cfg);
  c.require(rows.size() == 100, "default grid has 100 points");
  double max_bound = 0.0;
  for (const SweepRow& r : rows) {
    c.require(r.status == "ok", strf("row g_bar=%.2f solved", r.param));
    if (r.status != "ok") continue;
    c.require(std::isfinite(r.bound) && r.bound >= 0.0,
              strf("bound finite and nonnegative at g_bar=%.2f", r.param));
    c.require(r.gap >= r.bound - 1e-9,
              strf("gap %.3e >= bound %.3e - 1e-9 at g_bar=%.2f", r.gap,
                   r.bound, r.param));
    if (r.bound > max_bound) max_bound = r.bound;
  }
  c.require(rows.front().bound < 1e-6,
            strf("bound %.3e vanishes at the smallest weight",
                 rows.front().bound));
  c.info(strf("largest certified bound %.3e (%.1fs)", max_bound,
              seconds_since(t0)));
  return c.ok;
}

// ---------------------------------------------------------------------------
// C4: uniform pricing on the directed cycle (a = 2, b = 1, n = 100): gap
// dominates the certified bound everywhere, and at g_bar = 0.5 the bound
// matches the hand-computed value 1.83e-4.
bool criterion4(std::vector<std::string>& notes) {
  Check c{&notes};
  const auto t0 = std::chrono::steady_clock::now();

  ExperimentConfig cfg;
  cfg.experiment = ExperimentKind::GbarSweep;
  cfg.graph.family = GraphFamily::Ring;
  cfg.graph.n = 100;
  cfg.a_scalar = 2.0;
  cfg.b_scalar = 1.0;
  cfg.f = InteractionFunction::log1p();
  cfg.mode = PricingMode::Uniform;

  const auto rows = run_gbar_sweep(cfg);
  c.require(rows.size() == 100, "default grid has 100 points");
  const SweepRow* mid = nullptr;
  for (const SweepRow& r : rows) {
    c.require(r.status == "ok", strf("row g_bar=%.2f solved", r.param));
    if (r.status != "ok") continue;
    c.require(r.bound >= 0.0, strf("bound nonnegative at g_bar=%.2f", r.param));
    c.require(r.gap >= r.bound - 1e-9,
              strf("gap %.3e >= bound %.3e - 1e-9 at g_bar=%.2f", r.gap,
                   r.bound, r.param));
    if (r.param == 0.5) mid = &r;
  }
  c.require(mid != nullptr, "grid contains g_bar = 0.5");
  if (mid != nullptr) {
    c.require(std::abs(mid->bound - 1.83e-4) <= 1e-6,
              strf("bound %.6e at g_bar=0.5 within 1.83e-4 +- 1e-6", mid->bound));
    c.info(strf("bound at g_bar=0.5: %.6e, gap %.6e (%.1fs)", mid->bound,
                mid->gap, seconds_since(t0)));
  }
  return c.ok;
}

// ---------------------------------------------------------------------------
// C5: the projected-gradient solution matches the exhaustive grid oracle on
// 20 randomized two-agent instances inside the admissible regime.
bool criterion5(std::vector<std::string>& notes) {
  Check c{&notes};
  const auto t0 = std::chrono::steady_clock::now();
  Xoshiro256 rng(50);
  double worst_j = 0.0, worst_x = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = trial % 2 == 0 ? InteractionFunction::log1p()
                                  : InteractionFunction::scaled_log(10.0);
    const GameSpec g = testsupport::random_instance(rng, 2, f);
    const PricingSolution sol = solve_optimal_price(g);
    const double x_max = 1.2 * xbar_max(g).maxCoeff() + 0.1;
    const BruteForceResult bf = brute_force_optimal(g, x_max, 1e-3);
    const double dj = std::abs(sol.revenue - bf.revenue);
    const double dx = (sol.x_star - bf.x).lpNorm<Eigen::Infinity>();
    worst_j = std::max(worst_j, dj);
    worst_x = std::max(worst_x, dx);
    c.require(dj <= 1e-4, strf("trial %d: |J_pg - J_grid| = %.3e <= 1e-4",
                               trial, dj));
    c.require(dx <= 1e-2, strf("trial %d: action mismatch %.3e <= 1e-2",
                               trial, dx));
  }
  const double secs = seconds_since(t0);
  c.require(secs < 120.0, strf("runtime %.1fs under 120s", secs));
  c.info(strf("worst |dJ| %.3e, worst |dx| %.3e over 20 trials (%.1fs)",
              worst_j, worst_x, secs));
  return c.ok;
}

// ---------------------------------------------------------------------------
// C6: analytic gradient and Hessian of the revenue objective agree with
// central finite differences on 50 random instances.
bool criterion6(std::vector<std::string>& notes) {
  Check c{&notes};
  Xoshiro256 rng(60);
  double worst_g = 0.0, worst_h = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(9));  // 2..10 agents
    const auto f = trial % 2 == 0 ? InteractionFunction::log1p()
                                  : InteractionFunction::scaled_log(10.0);
    const GameSpec g = testsupport::random_instance(rng, n, f);
    Vec x(n);
    for (int i = 0; i < n; ++i) x[i] = rng.uniform(0.0, 2.0);

    const Vec ag = grad_J(g, x);
    const Vec fg = testsupport::fd_grad(
        [&](const Vec& y) { return revenue_J(g, y); }, x, 1e-6);
    const double ge = (ag - fg).lpNorm<Eigen::Infinity>() /
                      std::max(1.0, ag.lpNorm<Eigen::Infinity>());
    worst_g = std::max(worst_g, ge);
    c.require(ge < 1e-6, strf("trial %d: gradient error %.3e < 1e-6", trial, ge));

    const Mat ah = hessian_J(g, x);
    const Mat fh = testsupport::fd_jacobian(
        [&](const Vec& y) { return grad_J(g, y); }, x, 1e-5);
    const double he = (ah - fh).lpNorm<Eigen::Infinity>() /
                      std::max(1.0, ah.lpNorm<Eigen::Infinity>());
    worst_h = std::max(worst_h, he);
    c.require(he < 1e-5, strf("trial %d: curvature error %.3e < 1e-5", trial, he));
  }
  c.info(strf("worst gradient error %.3e, worst curvature error %.3e",
              worst_g, worst_h));
  return c.ok;
}

// ---------------------------------------------------------------------------
// C7: equilibrium solver properties — a unique fixed point across 100 random
// starts, the certified per-step contraction rate on symmetric instances,
// and exact equivalence of the canonical-form rewrite.
bool criterion7(std::vector<std::string>& notes) {
  Check c{&notes};

  {  // uniqueness across starts
    Xoshiro256 rng(71);
    const GameSpec g =
        testsupport::random_instance(rng, 6, InteractionFunction::log1p());
    const Vec p = 0.6 * g.a;
    const double reach = 2.0 * xbar_max(g).maxCoeff();
    const SolveReport ref = solve_ne(g, p);
    c.require(ref.converged, "reference solve converged");
    double worst = 0.0;
    for (int s = 0; s < 100; ++s) {
      Vec start(g.n());
      for (Eigen::Index i = 0; i < g.n(); ++i)
        start[i] = rng.uniform(0.0, reach);
      const SolveReport rep = solve_ne_from(g, p, start);
      c.require(rep.converged, strf("start %d converged", s));
      worst = std::max(worst, (rep.x - ref.x).lpNorm<Eigen::Infinity>());
    }
    c.require(worst <= 1e-8,
              strf("all starts agree: spread %.3e <= 1e-8", worst));
    c.info(strf("start-independence spread %.3e over 100 starts", worst));
  }

  {  // per-step contraction at the certified rate (symmetric coupling,
     // common cost: the rate holds in the plain Euclidean norm there)
    Xoshiro256 rng(72);
    for (int inst = 0; inst < 5; ++inst) {
      const GameSpec g = testsupport::random_symmetric_instance(
          rng, 6, InteractionFunction::log1p());
      const double rate = check_assumptions(g).contraction_factor;
      c.require(rate < 1.0, strf("instance %d is a certified contraction", inst));
      const Vec p = 0.5 * g.a;
      Vec x(6);
      for (int i = 0; i < 6; ++i) x[i] = rng.uniform(0.0, 2.0);
      Vec prev_step = best_response_map(g, x, p) - x;
      x += prev_step;
      for (int it = 0; it < 40; ++it) {
        const Vec step = best_response_map(g, x, p) - x;
        if (prev_step.norm() < 1e-12) break;
        c.require(step.norm() <= rate * prev_step.norm() * (1.0 + 1e-9),
                  strf("instance %d step %d contracts at rate %.4f", inst, it,
                       rate));
        x += step;
        prev_step = step;
      }
    }
    c.info("per-step contraction held on 5 symmetric instances");
  }

  {  // canonical-form rewrite preserves equilibria (threshold: twice the
     // default solver tolerance; both solves run tighter than that)
    Xoshiro256 rng(73);
    const double threshold = 2.0 * NeOptions{}.tol;
    const NeOptions tight{1e-12, 200000};
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
      const double offset = rng.uniform(0.1, 0.5);
      const double slope = rng.uniform(1.2, 2.0);
      const auto f = InteractionFunction::custom(
          "offset_log",
          [offset, slope](double x) { return offset + slope * std::log1p(x); },
          [slope](double x) { return slope / (1.0 + x); },
          [slope](double x) { return -slope / ((1.0 + x) * (1.0 + x)); },
          slope, slope);
      GameSpec g = testsupport::random_instance(rng, 5, f);
      g.b *= slope;  // keep the dominance margins at the larger slope
      const GameSpec gn = normalize_game(g);
      const Vec p = 0.4 * g.a;
      const SolveReport r1 = solve_ne(g, p, tight);
      const SolveReport r2 = solve_ne(gn, p, tight);
      c.require(r1.converged && r2.converged,
                strf("trial %d: both forms converged", trial));
      worst = std::max(worst, (r1.x - r2.x).lpNorm<Eigen::Infinity>());
    }
    c.require(worst <= threshold,
              strf("canonical-form equilibria agree: %.3e <= %.1e", worst,
                   threshold));
    c.info(strf("canonical-form worst disagreement %.3e", worst));
  }

  return c.ok;
}

// ---------------------------------------------------------------------------
// C8: structural guarantees on a mixed pool — strictly positive optimal
// actions, strict revenue gain over the agnostic baseline for strictly
// concave interactions, the equilibrium sandwich, and uniform instances
// keeping a uniform equilibrium that matches the scalar reduction.
bool criterion8(std::vector<std::string>& notes) {
  Check c{&notes};

  struct Item {
    std::string label;
    GameSpec g;
  };
  std::vector<Item> pool;
  for (double gb : {0.3, 0.7})
    pool.push_back({strf("cycle n=20 w=%.1f", gb),
                    make_game(Vec::Constant(20, 2.0), Vec::Ones(20),
                              ring_graph(20, gb), InteractionFunction::log1p())});
  for (double alpha : {0.2, 0.5, 0.8}) {
    pool.push_back({strf("hub n=10 mix=%.1f log", alpha),
                    make_game(Vec::Ones(10), Vec::Ones(10),
                              star_graph(10, alpha), InteractionFunction::log1p())});
    pool.push_back({strf("hub n=10 mix=%.1f sharper", alpha),
                    make_game(Vec::Ones(10), Vec::Ones(10), star_graph(10, alpha),
                              InteractionFunction::scaled_log(10.0))});
  }
  pool.push_back({"attachment n=30",
                  make_game(Vec::Ones(30), Vec::Constant(30, 2.0),
                            pa_graph(30, 2, 3, 0.35), InteractionFunction::log1p())});
  Xoshiro256 rng(80);
  for (int t = 0; t < 10; ++t) {
    const int n = 3 + static_cast<int>(rng.below(6));  // 3..8 agents
    const auto f = t % 2 == 0 ? InteractionFunction::log1p()
                              : InteractionFunction::scaled_log(10.0);
    pool.push_back({strf("random %d (n=%d)", t, n),
                    testsupport::random_instance(rng, n, f)});
  }

  for (const Item& item : pool) {
    try {
      const PricingSolution sol = solve_optimal_price(item.g);
      const AgnosticBaseline base = agnostic_baseline(item.g);
      c.require(sol.x_star.minCoeff() > 0.0,
                item.label + ": optimal actions strictly positive");
      c.require(sol.revenue / base.revenue >= 1.0 - 1e-9,
                item.label + ": revenue ratio >= 1 - 1e-9");
      c.require(sol.revenue - base.revenue > 1e-9,
                item.label + ": strict revenue gain under strict concavity");
      const Vec lower = (item.g.a.array() / (4.0 * item.g.b.array())).matrix();
      const Vec upper = xbar_max(item.g);
      c.require((sol.x_star - lower).minCoeff() >= -1e-9,
                item.label + ": optimum above the half-incentive floor");
      c.require((upper - sol.x_star).minCoeff() >= -1e-9,
                item.label + ": optimum below the equilibrium cap");
    } catch (const std::exception& e) {
      c.require(false, item.label + ": solved (" + e.what() + ")");
    }
  }

  {  // uniform instance keeps a uniform equilibrium matching the scalar root
    const int n = 50;
    const double a_bar = 2.0, b_bar = 1.0, g_bar = 0.6;
    const GameSpec g = make_game(Vec::Constant(n, a_bar), Vec::Constant(n, b_bar),
                                 ring_graph(n, g_bar), InteractionFunction::log1p());
    for (double frac : {0.3, 0.5, 0.8}) {
      const double p_bar = frac * a_bar;
      const SolveReport rep = solve_ne(g, Vec::Constant(n, p_bar));
      c.require(rep.converged, strf("uniform price %.1f: solve converged", p_bar));
      const double spread = rep.x.maxCoeff() - rep.x.minCoeff();
      c.require(spread <= 1e-10,
                strf("uniform price %.1f: coordinate spread %.3e <= 1e-10",
                     p_bar, spread));
      const double root = testsupport::bisect_decreasing(
          [&](double x) {
            return g_bar * g.f(x) + a_bar - p_bar - 2.0 * b_bar * x;
          },
          0.0, 1.1 * (a_bar - p_bar) / (2.0 * b_bar - g_bar));
      c.require(std::abs(rep.x[0] - root) <= 1e-8,
                strf("uniform price %.1f: action matches scalar root (%.3e)",
                     p_bar, std::abs(rep.x[0] - root)));
    }
    c.info("uniform-equilibrium reduction verified at three price levels");
  }

  c.info(strf("pool size: %zu instances", pool.size()));
  return c.ok;
}

}  // namespace

int main() {
  struct Entry {
    const char* name;
    bool (*fn)(std::vector<std::string>&);
  };
  const Entry entries[] = {
      {"C1 hub-and-spokes sweep reproduces the reference ratio curve",
       criterion1},
      {"C2 preferential-attachment sweep hits seed-averaged bands", criterion2},
      {"C3 per-agent pricing gap dominates its certified bound", criterion3},
      {"C4 single-price gap dominates its certified bound", criterion4},
      {"C5 gradient solver matches the exhaustive oracle", criterion5},
      {"C6 analytic derivatives match finite differences", criterion6},
      {"C7 equilibrium solver: uniqueness, contraction, rewrites", criterion7},
      {"C8 structural guarantees on a mixed instance pool", criterion8},
  };

  int failures = 0;
  for (const Entry& e : entries) {
    std::vector<std::string> notes;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = e.fn(notes);
    } catch (const std::exception& ex) {
      notes.push_back(std::string("exception: ") + ex.what());
    }
    std::printf("[%s] %s (%.1fs)\n", ok ? "PASS" : "FAIL", e.name,
                seconds_since(t0));
    for (const std::string& n : notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures;
}
