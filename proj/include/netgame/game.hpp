#ifndef NETGAME_GAME_HPP
#define NETGAME_GAME_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <Eigen/Dense>

#include "netgame/errors.hpp"
#include "netgame/interaction.hpp"
#include "netgame/spectral.hpp"

namespace netgame {

/// One game instance. Agent i chooses x_i >= 0 and receives
///
///   u_i(x) = (sum_j G(i,j) f(x_j) + a_i - p_i) * x_i - b_i * x_i^2
///
/// where p_i is the per-unit price it is charged. G(i, j) is the influence
/// of agent j on agent i; the diagonal is zero and all weights are
/// nonnegative. B denotes the diagonal matrix with entries 2*b_i.
struct GameSpec {
  Vec a;                  ///< marginal utilities, entrywise positive
  Vec b;                  ///< quadratic costs, entrywise positive
  Mat G;                  ///< influence weights, n x n, zero diagonal
  InteractionFunction f;  ///< peer interaction applied to neighbour actions

  Eigen::Index n() const { return a.size(); }

  /// Diagonal of B = 2 * diag(b).
  Vec b_diag() const { return 2.0 * b; }

  /// Structural checks; throws std::invalid_argument on the first failure.
  void validate() const {
    const Eigen::Index m = n();
    if (m == 0) throw std::invalid_argument("game: empty instance");
    if (b.size() != m || G.rows() != m || G.cols() != m)
      throw std::invalid_argument("game: a, b, G dimensions disagree");
    for (Eigen::Index i = 0; i < m; ++i) {
      if (!(a[i] > 0.0) || !std::isfinite(a[i]))
        throw std::invalid_argument("game: entries of a must be positive and finite");
      if (!(b[i] > 0.0) || !std::isfinite(b[i]))
        throw std::invalid_argument("game: entries of b must be positive and finite");
      if (G(i, i) != 0.0)
        throw std::invalid_argument("game: G must have a zero diagonal");
      for (Eigen::Index j = 0; j < m; ++j)
        if (!(G(i, j) >= 0.0) || !std::isfinite(G(i, j)))
          throw std::invalid_argument("game: entries of G must be nonnegative and finite");
    }
  }
};

inline GameSpec make_game(Vec a, Vec b, Mat G, InteractionFunction f) {
  GameSpec g{std::move(a), std::move(b), std::move(G), std::move(f)};
  g.validate();
  return g;
}

/// Utility of agent i at action profile x under price p_i.
/// Throws std::out_of_range for a bad index and std::domain_error if x has
/// a negative entry.
inline double payoff(const GameSpec& g, Eigen::Index i, const Vec& x, double p_i) {
  if (i < 0 || i >= g.n()) throw std::out_of_range("payoff: agent index out of range");
  if (x.size() != g.n()) throw std::invalid_argument("payoff: profile size mismatch");
  if ((x.array() < 0.0).any())
    throw std::domain_error("payoff: actions must be nonnegative");
  const double peer = g.G.row(i).dot(g.f.eval(x));
  return (peer + g.a[i] - p_i) * x[i] - g.b[i] * x[i] * x[i];
}

/// Best-response map T(x): each agent's unconstrained maximizer clipped to
/// the nonnegative axis,
///
///   T_i(x) = max{0, (sum_j G(i,j) f(x_j) + a_i - p_i) / (2 b_i)}.
inline Vec best_response_map(const GameSpec& g, const Vec& x, const Vec& p) {
  if (x.size() != g.n() || p.size() != g.n())
    throw std::invalid_argument("best_response_map: size mismatch");
  const Vec peer = g.G * g.f.eval(x);
  return ((peer + g.a - p).array() / (2.0 * g.b.array())).max(0.0).matrix();
}

struct SolveReport {
  Vec x;                  ///< final iterate
  long iterations = 0;    ///< number of best-response map applications
  double final_residual = 0.0;  ///< sup-norm change of the last iterate
  bool converged = false;
};

struct NeOptions {
  double tol = 1e-10;
  long max_iter = 100000;
};

/// Equilibrium by fixed-point iteration of the best-response map from the
/// given starting profile. Stops once the sup-norm step falls to tol and
/// returns the iterate x whose residual was measured, so a converged report
/// certifies ||x - T(x)||_inf <= tol exactly. On max_iter exhaustion the
/// report comes back with converged = false and the diagnostics filled in.
inline SolveReport solve_ne_from(const GameSpec& g, const Vec& p, Vec start,
                                 NeOptions opts = {}) {
  if (start.size() != g.n())
    throw std::invalid_argument("solve_ne_from: start profile size mismatch");
  if (!(opts.tol > 0.0) || opts.max_iter < 1)
    throw std::invalid_argument("solve_ne_from: tol must be > 0, max_iter >= 1");

  SolveReport rep;
  Vec x = start.cwiseMax(0.0);
  for (long it = 1; it <= opts.max_iter; ++it) {
    Vec next = best_response_map(g, x, p);
    const double res = (next - x).lpNorm<Eigen::Infinity>();
    rep.iterations = it;
    rep.final_residual = res;
    if (res <= opts.tol) {
      rep.x = std::move(x);  // residual was measured at this iterate
      rep.converged = true;
      return rep;
    }
    if (!std::isfinite(res)) break;
    x = std::move(next);
  }
  rep.x = std::move(x);
  rep.converged = false;
  return rep;
}

/// Equilibrium from the all-zeros profile (the canonical start: iterates
/// then increase monotonically when the map is order-preserving).
inline SolveReport solve_ne(const GameSpec& g, const Vec& p, NeOptions opts = {}) {
  return solve_ne_from(g, p, Vec::Zero(g.n()), opts);
}

struct AssumptionReport {
  /// alpha * spectral_radius(B^{-1} G); the fixed-point iteration contracts
  /// in the spectral sense iff this is < 1.
  double contraction_factor = 0.0;
  /// Largest rho with B - (G + G^T)/2 - rho*I diagonally dominant:
  /// min_i [2 b_i - (row_i + col_i sums of G)/2].
  double rho = 0.0;
  /// min_i [2 b_i - row_i sum of G].
  double rho_prime = 0.0;
  /// Strict row-wise dominance 2 b_i > alpha * sum_j G(i,j) for all i.
  bool assumption1_ok = false;
  /// rho > 0 and rho' > 0.
  bool assumption3_ok = false;
};

/// Evaluates the standing assumptions on an instance. Purely diagnostic:
/// the solvers do not refuse instances that fail these checks, but the
/// uniqueness/contraction guarantees only hold when they pass.
inline AssumptionReport check_assumptions(const GameSpec& g) {
  g.validate();
  const double alpha = g.f.lipschitz_alpha();
  const Vec row = g.G.rowwise().sum();
  const Vec col = g.G.colwise().sum().transpose();

  AssumptionReport rep;
  rep.rho = (2.0 * g.b - 0.5 * (row + col)).minCoeff();
  rep.rho_prime = (2.0 * g.b - row).minCoeff();
  rep.assumption1_ok = ((2.0 * g.b - alpha * row).array() > 0.0).all();
  rep.assumption3_ok = rep.rho > 0.0 && rep.rho_prime > 0.0;

  const Mat binv_g = (1.0 / (2.0 * g.b.array())).matrix().asDiagonal() * g.G;
  rep.contraction_factor = alpha * spectral_radius(binv_g);
  if (rep.assumption1_ok && !(rep.contraction_factor < 1.0))
    throw error("check_assumptions: row dominance holds but contraction factor >= 1");
  return rep;
}

/// Equivalent instance with f in canonical form: the constant offset f(0)
/// moves into the marginal utilities and the slope alpha into the weights,
///
///   a_hat = a + f(0) * G * 1,  G_hat = alpha * G,  f_hat = (f - f(0)) / alpha.
///
/// Best responses (hence equilibria, payoffs and revenues) are unchanged
/// for every price vector. Instances already in canonical form are returned
/// as-is.
inline GameSpec normalize_game(const GameSpec& g) {
  g.validate();
  if (g.f.normalized()) return g;
  const double f0 = g.f(0.0);
  const double alpha = g.f.lipschitz_alpha();
  GameSpec out;
  out.a = g.a + f0 * (g.G * Vec::Ones(g.n()));
  out.b = g.b;
  out.G = alpha * g.G;
  out.f = g.f.normalize();
  out.validate();
  return out;
}

}  // namespace netgame

#endif  // NETGAME_GAME_HPP
