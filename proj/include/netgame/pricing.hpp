#ifndef NETGAME_PRICING_HPP
#define NETGAME_PRICING_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "netgame/errors.hpp"
#include "netgame/game.hpp"

namespace netgame {

/// Seller revenue when every agent is charged exactly the price that makes
/// profile x an interior equilibrium:
///
///   J(x) = x^T (a + G f(x) - B x),  B = 2 diag(b).
inline double revenue_J(const GameSpec& g, const Vec& x) {
  if (x.size() != g.n()) throw std::invalid_argument("revenue_J: profile size mismatch");
  if ((x.array() < 0.0).any())
    throw std::domain_error("revenue_J: actions must be nonnegative");
  return x.dot(g.a + g.G * g.f.eval(x) - (2.0 * g.b.array() * x.array()).matrix());
}

/// Gradient of J:  a - 2 B x + G f(x) + diag(f'(x)) G^T x.
inline Vec grad_J(const GameSpec& g, const Vec& x) {
  if (x.size() != g.n()) throw std::invalid_argument("grad_J: profile size mismatch");
  return g.a - (4.0 * g.b.array() * x.array()).matrix() + g.G * g.f.eval(x)
         + (g.f.deriv(x).array() * (g.G.transpose() * x).array()).matrix();
}

/// Hessian of J:
///   H(i,i) = -4 b_i + (G^T x)_i f''(x_i)
///   H(i,j) =  G(i,j) f'(x_j) + G(j,i) f'(x_i)   for i != j.
inline Mat hessian_J(const GameSpec& g, const Vec& x) {
  if (x.size() != g.n()) throw std::invalid_argument("hessian_J: profile size mismatch");
  const Vec d1 = g.f.deriv(x);
  const Vec d2 = g.f.second_deriv(x);
  const Vec gtx = g.G.transpose() * x;
  Mat h = g.G * d1.asDiagonal();
  h += h.transpose().eval();
  // G has a zero diagonal, so the products contributed nothing there.
  h.diagonal() = (-4.0 * g.b.array() + gtx.array() * d2.array()).matrix();
  return h;
}

namespace detail {

/// Solves A y = rhs and verifies that the solution is entrywise nonnegative
/// (tiny negative round-off is clamped). Used where the theory requires an
/// inverse-positive system matrix; a negative solution or a singular matrix
/// means the instance is outside that regime, reported as assumption_error.
inline Vec solve_inverse_positive(const Mat& A, const Vec& rhs, const char* label) {
  Eigen::FullPivLU<Mat> lu(A);
  if (!lu.isInvertible())
    throw assumption_error(std::string("linear system ") + label + " is singular");
  Vec y = lu.solve(rhs);
  const double resid = (A * y - rhs).lpNorm<Eigen::Infinity>();
  if (!(resid <= 1e-8 * (1.0 + rhs.lpNorm<Eigen::Infinity>())))
    throw assumption_error(std::string("linear system ") + label + " is ill-conditioned");
  const double floor = -1e-9 * (1.0 + y.lpNorm<Eigen::Infinity>());
  if (y.minCoeff() < floor)
    throw assumption_error(std::string("inverse positivity failed for ") + label +
                           ": solution has negative entries");
  return y.cwiseMax(0.0);
}

}  // namespace detail

/// Entrywise upper envelope of the two equilibrium caps
///   (1/2) (B - G)^{-1} a   and   (1/2) (B - (G + G^T)/2)^{-1} a.
/// Every equilibrium action profile (for prices between 0 and a) lies below
/// this vector, which is what the smoothness constant is evaluated against.
inline Vec xbar_max(const GameSpec& g) {
  g.validate();
  const Mat B = (2.0 * g.b).asDiagonal();
  const Vec y1 = detail::solve_inverse_positive(B - g.G, g.a, "B - G");
  const Vec y2 =
      detail::solve_inverse_positive(B - 0.5 * (g.G + g.G.transpose()), g.a,
                                     "B - (G + G^T)/2");
  return 0.5 * y1.cwiseMax(y2);
}

/// Smoothness constant of J on the relevant box:
///
///   nu = || 4 b + (G + G^T) 1 + M * G^T xbar_max ||_inf
///
/// with M the declared curvature bound of f. For M = 0 (linear f) the last
/// term vanishes and no inverse-positivity is needed; otherwise the
/// equilibrium caps must exist, and failure of those solves is reported as
/// assumption_error. The reciprocal 1/nu is a safe ascent step size.
inline double nu_bound(const GameSpec& g) {
  g.validate();
  const double M = g.f.curvature_bound();
  if (std::isnan(M))
    throw assumption_error("nu bound not computable: interaction declares no curvature bound");
  Vec t = 4.0 * g.b + (g.G + g.G.transpose()) * Vec::Ones(g.n());
  if (M > 0.0) t += M * (g.G.transpose() * xbar_max(g));
  return t.lpNorm<Eigen::Infinity>();
}

struct PricingSolution {
  Vec x_star;             ///< revenue-optimal action profile
  Vec p_star;             ///< prices implementing it as the equilibrium
  double revenue = 0.0;   ///< J(x_star) = p_star . x_star
  long iterations = 0;    ///< projected gradient steps taken
  double step_size = 0.0; ///< 1 / nu
  double grad_norm = 0.0; ///< sup-norm of grad J at the returned point
};

struct PgOptions {
  double tol = 1e-10;
  long max_iter = 100000;
};

/// Revenue-optimal discriminatory prices by projected gradient ascent on J
/// over the nonnegative orthant, with step size 1/nu and start x = B^{-1}a/2.
/// Requires f in canonical form (run normalize_game first; prices transfer
/// unchanged). On success the returned point carries two certificates:
/// strictly positive actions and a stationary gradient; violation of either,
/// like non-convergence, raises solve_error with diagnostics.
inline PricingSolution solve_optimal_price(const GameSpec& g, PgOptions opts = {}) {
  g.validate();
  if (!g.f.normalized())
    throw std::invalid_argument(
        "solve_optimal_price: interaction must be in canonical form; "
        "apply normalize_game first (prices are unaffected)");
  if (!(opts.tol > 0.0) || opts.max_iter < 1)
    throw std::invalid_argument("solve_optimal_price: tol must be > 0, max_iter >= 1");

  const double nu = nu_bound(g);
  const double gamma = 1.0 / nu;
  Vec x = (g.a.array() / (4.0 * g.b.array())).matrix();

  bool converged = false;
  long iters = 0;
  double res = std::numeric_limits<double>::infinity();
  for (long it = 1; it <= opts.max_iter; ++it) {
    Vec next = (x + gamma * grad_J(g, x)).cwiseMax(0.0);
    res = (next - x).lpNorm<Eigen::Infinity>();
    x = std::move(next);
    iters = it;
    if (!std::isfinite(res))
      throw solve_error("solve_optimal_price: ascent diverged", it, res);
    if (res <= opts.tol) {
      converged = true;
      break;
    }
  }
  if (!converged)
    throw solve_error("solve_optimal_price: no convergence within max_iter",
                      iters, res);
  if (!(x.minCoeff() > 0.0))
    throw solve_error(
        "solve_optimal_price: interior certificate failed (a zero action at opt)",
        iters, x.minCoeff());

  PricingSolution sol;
  sol.grad_norm = grad_J(g, x).lpNorm<Eigen::Infinity>();
  if (sol.grad_norm > 10.0 * opts.tol * nu)
    throw solve_error("solve_optimal_price: stationarity certificate failed",
                      iters, sol.grad_norm);
  sol.p_star = g.a + g.G * g.f.eval(x) - (2.0 * g.b.array() * x.array()).matrix();
  sol.revenue = revenue_J(g, x);
  if (std::abs(sol.revenue - sol.p_star.dot(x)) >
      1e-8 * (1.0 + std::abs(sol.revenue)))
    throw error("solve_optimal_price: revenue identity violated");
  sol.x_star = std::move(x);
  sol.iterations = iters;
  sol.step_size = gamma;
  return sol;
}

struct AgnosticBaseline {
  Vec p;                ///< the information-agnostic prices a / 2
  Vec x;                ///< equilibrium reached under them
  double revenue = 0.0; ///< p . x, equal to J at that equilibrium
};

/// Revenue of the seller who ignores the network and prices every agent at
/// half its marginal utility. The equilibrium is computed with the standard
/// fixed-point solver; the interior identity J(x0) = (a/2) . x0 is verified.
inline AgnosticBaseline agnostic_baseline(const GameSpec& g, NeOptions opts = {}) {
  AgnosticBaseline base;
  base.p = 0.5 * g.a;
  SolveReport rep = solve_ne(g, base.p, opts);
  if (!rep.converged)
    throw solve_error("agnostic_baseline: equilibrium solve did not converge",
                      rep.iterations, rep.final_residual);
  base.x = std::move(rep.x);
  base.revenue = revenue_J(g, base.x);
  const double direct = base.p.dot(base.x);
  if (std::abs(base.revenue - direct) >
      std::max(1e-8, 100.0 * opts.tol) * (1.0 + std::abs(base.revenue)))
    throw error("agnostic_baseline: revenue identity violated");
  return base;
}

/// Certified lower bound on the relative revenue gap J* / J0 - 1 for
/// discriminatory pricing:
///
///   (4 rho / nu^2) * (a^T B^{-1} G h(B^{-1} a / 2))^2
///                  / ((a^T (B-G)^{-1} a) * ||(B-G)^{-1} a||^2)
///
/// with h(x) = f(x) - f'(x) x. Requires canonical f, a declared curvature
/// bound, and rho, rho' > 0; otherwise assumption_error.
inline double poi_lower_bound(const GameSpec& g) {
  g.validate();
  if (!g.f.normalized())
    throw assumption_error("poi_lower_bound: canonical-form interaction required");
  const AssumptionReport rep = check_assumptions(g);
  if (!rep.assumption3_ok)
    throw assumption_error("poi_lower_bound: needs rho > 0 and rho' > 0 on this instance");
  const double nu = nu_bound(g);

  const Vec x0 = (g.a.array() / (4.0 * g.b.array())).matrix();  // B^{-1} a / 2
  const Vec h = g.f.concavity_gap(x0);
  const double num = (g.a.array() / (2.0 * g.b.array())).matrix().dot(g.G * h);

  const Mat B = (2.0 * g.b).asDiagonal();
  const Vec y = detail::solve_inverse_positive(B - g.G, g.a, "B - G");
  const double den = g.a.dot(y) * y.squaredNorm();
  if (!(den > 0.0))
    throw error("poi_lower_bound: degenerate denominator");
  return 4.0 * rep.rho / (nu * nu) * (num * num) / den;
}

struct PoiReport {
  double j_star = 0.0;      ///< revenue with network-aware prices
  double j_agnostic = 0.0;  ///< revenue of the a/2 baseline
  double poi = 0.0;         ///< j_star / j_agnostic
  double lower_bound = 0.0; ///< certified bound on poi - 1; NaN if unavailable
  double nu = 0.0;          ///< smoothness constant; NaN if unavailable
  double rho = 0.0;         ///< concavity margin from check_assumptions
};

/// Full discriminatory-pricing comparison on one instance: optimal revenue,
/// agnostic revenue, their ratio, and the certified gap bound where the
/// instance supports it (NaN otherwise).
inline PoiReport price_of_information(const GameSpec& g, PgOptions opts = {}) {
  const AgnosticBaseline base = agnostic_baseline(g, NeOptions{opts.tol, opts.max_iter});
  const PricingSolution sol = solve_optimal_price(g, opts);
  PoiReport r;
  r.j_star = sol.revenue;
  r.j_agnostic = base.revenue;
  r.poi = sol.revenue / base.revenue;
  r.rho = check_assumptions(g).rho;
  try {
    r.lower_bound = poi_lower_bound(g);
  } catch (const error&) {
    r.lower_bound = std::numeric_limits<double>::quiet_NaN();
  }
  try {
    r.nu = nu_bound(g);
  } catch (const error&) {
    r.nu = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

struct UniformReduction {
  bool ok = false;
  std::string reason;   ///< empty when ok
  double a_bar = 0.0;
  double b_bar = 0.0;
  double g_bar = 0.0;   ///< common row sum of G
};

/// Collapses an instance to scalar data (a_bar, b_bar, g_bar) when all
/// marginal utilities agree, all costs agree, and every row of G sums to the
/// same value — the regime where one price serves all agents and the game
/// has a uniform equilibrium. Returns ok = false with a reason otherwise.
inline UniformReduction uniform_reduce(const GameSpec& g) {
  g.validate();
  UniformReduction red;
  auto uniform = [](const Vec& v, double& out) {
    out = v.mean();
    return (v.array() - out).abs().maxCoeff() <= 1e-12 * (1.0 + std::abs(out));
  };
  if (!uniform(g.a, red.a_bar)) {
    red.reason = "marginal utilities are not uniform";
    return red;
  }
  if (!uniform(g.b, red.b_bar)) {
    red.reason = "quadratic costs are not uniform";
    return red;
  }
  if (!uniform(g.G.rowwise().sum(), red.g_bar)) {
    red.reason = "row sums of G are not uniform";
    return red;
  }
  red.ok = true;
  return red;
}

namespace detail {

struct BisectResult {
  double root = 0.0;
  long iterations = 0;
};

/// Bisection for a decreasing function with F(lo) >= 0 >= F(hi); shrinks the
/// bracket to the given absolute width.
inline BisectResult bisect_decreasing(const std::function<double(double)>& F,
                                      double lo, double hi, double width) {
  BisectResult r;
  while (hi - lo > width && r.iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (F(mid) >= 0.0)
      lo = mid;
    else
      hi = mid;
    ++r.iterations;
  }
  r.root = 0.5 * (lo + hi);
  return r;
}

}  // namespace detail

struct UniformPricing {
  double p_bar = 0.0;    ///< optimal single price
  double x_bar = 0.0;    ///< per-agent equilibrium action under it
  double revenue = 0.0;  ///< n * p_bar * x_bar
  long iterations = 0;   ///< bisection steps
};

/// Optimal single-price problem on a uniform instance: the per-agent action
/// solves u(x) = a_bar - 4 b_bar x + g_bar (x f'(x) + f(x)) = 0, a strictly
/// decreasing function that is positive at zero; the root is bracketed in
/// (0, 1.1 * a_bar / (4 b_bar - 2 g_bar)) and found by bisection.
inline UniformPricing solve_uniform_price(const GameSpec& g, double tol = 1e-12) {
  const UniformReduction red = uniform_reduce(g);
  if (!red.ok)
    throw assumption_error("solve_uniform_price: " + red.reason);
  const double denom = 4.0 * red.b_bar - 2.0 * red.g_bar;
  if (!(denom > 0.0))
    throw assumption_error("solve_uniform_price: requires 4 b_bar - 2 g_bar > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("solve_uniform_price: tol must be > 0");

  const auto& f = g.f;
  auto u = [&](double x) {
    return red.a_bar - 4.0 * red.b_bar * x + red.g_bar * (x * f.deriv(x) + f(x));
  };
  double hi = 1.1 * red.a_bar / denom;
  for (int k = 0; k < 64 && u(hi) >= 0.0; ++k) hi *= 2.0;
  if (!(u(0.0) > 0.0) || !(u(hi) < 0.0))
    throw solve_error("solve_uniform_price: could not bracket the root", 0, u(hi));

  const auto bis = detail::bisect_decreasing(u, 0.0, hi, tol);
  UniformPricing out;
  out.x_bar = bis.root;
  out.iterations = bis.iterations;
  out.p_bar = red.a_bar + red.g_bar * f(out.x_bar) - 2.0 * red.b_bar * out.x_bar;
  out.revenue = g.n() * out.p_bar * out.x_bar;
  return out;
}

struct UniformAgnostic {
  double p_bar = 0.0;    ///< the agnostic price a_bar / 2
  double x_bar = 0.0;    ///< per-agent equilibrium action under it
  double revenue = 0.0;  ///< n * x_bar * a_bar / 2
};

/// Equilibrium of a uniform instance under the agnostic price a_bar / 2:
/// the common action solves v(x) = a_bar - 4 b_bar x + 2 g_bar f(x) = 0,
/// whose root provably lies in [a_bar/(4 b_bar), a_bar/(4 b_bar - 2 g_bar)];
/// the bracket is widened by 10% on both sides and sign-checked before
/// bisection.
inline UniformAgnostic uniform_agnostic(const GameSpec& g, double tol = 1e-12) {
  const UniformReduction red = uniform_reduce(g);
  if (!red.ok)
    throw assumption_error("uniform_agnostic: " + red.reason);
  const double denom = 4.0 * red.b_bar - 2.0 * red.g_bar;
  if (!(denom > 0.0))
    throw assumption_error("uniform_agnostic: requires 4 b_bar - 2 g_bar > 0");
  if (!(tol > 0.0)) throw std::invalid_argument("uniform_agnostic: tol must be > 0");

  const auto& f = g.f;
  auto v = [&](double x) {
    return red.a_bar - 4.0 * red.b_bar * x + 2.0 * red.g_bar * f(x);
  };
  double lo = red.a_bar / (4.0 * red.b_bar) / 1.1;
  double hi = 1.1 * red.a_bar / denom;
  if (v(lo) < 0.0) lo = 0.0;  // re-check; v(0) = a_bar > 0 always
  for (int k = 0; k < 64 && v(hi) > 0.0; ++k) hi *= 2.0;
  if (!(v(lo) >= 0.0) || !(v(hi) <= 0.0))
    throw solve_error("uniform_agnostic: could not bracket the root", 0, v(hi));

  const auto bis = detail::bisect_decreasing(v, lo, hi, tol);
  UniformAgnostic out;
  out.x_bar = bis.root;
  out.p_bar = 0.5 * red.a_bar;
  out.revenue = g.n() * out.x_bar * out.p_bar;
  return out;
}

/// Certified lower bound on the uniform-pricing revenue gap:
///
///   ( (g_bar / a_bar) * (1 - g_bar / (2 b_bar)) * h(a_bar / (4 b_bar)) )^2
///
/// with h(x) = f(x) - f'(x) x. Zero for linear f or a decoupled network.
inline double uniform_poi_lower_bound(const GameSpec& g) {
  const UniformReduction red = uniform_reduce(g);
  if (!red.ok)
    throw assumption_error("uniform_poi_lower_bound: " + red.reason);
  const double t = (red.g_bar / red.a_bar)
                   * (1.0 - red.g_bar / (2.0 * red.b_bar))
                   * g.f.concavity_gap(red.a_bar / (4.0 * red.b_bar));
  return t * t;
}

/// Uniform-pricing comparison on one instance: optimal single-price revenue
/// against the agnostic single price a_bar / 2, with the certified bound.
inline PoiReport uniform_price_of_information(const GameSpec& g, double tol = 1e-12) {
  const UniformPricing opt = solve_uniform_price(g, tol);
  const UniformAgnostic base = uniform_agnostic(g, tol);
  PoiReport r;
  r.j_star = opt.revenue;
  r.j_agnostic = base.revenue;
  r.poi = opt.revenue / base.revenue;
  r.lower_bound = uniform_poi_lower_bound(g);
  r.rho = check_assumptions(g).rho;
  try {
    r.nu = nu_bound(g);
  } catch (const error&) {
    r.nu = std::numeric_limits<double>::quiet_NaN();
  }
  return r;
}

}  // namespace netgame

#endif  // NETGAME_PRICING_HPP
