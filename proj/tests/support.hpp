#ifndef NETGAME_TESTS_SUPPORT_HPP
#define NETGAME_TESTS_SUPPORT_HPP

// Shared helpers for the unit and acceptance suites: random admissible
// instances and small independent numerical oracles (finite differences,
// scalar bisection) used to cross-check the library implementations.

#include <cmath>
#include <stdexcept>
#include <utility>

#include "netgame/netgame.hpp"

namespace testsupport {

using netgame::GameSpec;
using netgame::InteractionFunction;
using netgame::Mat;
using netgame::Vec;
using netgame::Xoshiro256;

/// Random instance with margins built in: every row of the concavity check
/// clears zero by at least `margin`, so rho, rho' >= margin > 0 and the
/// standing assumptions hold by construction.
inline GameSpec random_instance(Xoshiro256& rng, int n, InteractionFunction f,
                                double density = 0.5, double margin = 0.4) {
  Vec a(n), b(n);
  Mat G = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a[i] = rng.uniform(0.5, 2.0);
    for (int j = 0; j < n; ++j)
      if (i != j && rng.uniform01() < density) G(i, j) = rng.uniform(0.1, 0.6);
  }
  const Vec row = G.rowwise().sum();
  const Vec col = G.colwise().sum().transpose();
  for (int i = 0; i < n; ++i) {
    const double need = std::max(row[i], 0.5 * (row[i] + col[i]));
    b[i] = 0.5 * (need + margin + rng.uniform(0.0, 0.8));
  }
  return netgame::make_game(std::move(a), std::move(b), std::move(G), std::move(f));
}

/// Symmetric-coupling variant with one common cost: the best-response map
/// is then provably a contraction in the plain Euclidean norm, which the
/// per-step contraction-rate checks rely on.
inline GameSpec random_symmetric_instance(Xoshiro256& rng, int n,
                                          InteractionFunction f,
                                          double margin = 0.4) {
  Vec a(n);
  Mat G = Mat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    a[i] = rng.uniform(0.5, 2.0);
    for (int j = i + 1; j < n; ++j)
      if (rng.uniform01() < 0.6) G(i, j) = G(j, i) = rng.uniform(0.1, 0.5);
  }
  const double need = G.rowwise().sum().maxCoeff();
  const Vec b = Vec::Constant(n, 0.5 * (need + margin));
  return netgame::make_game(std::move(a), b, std::move(G), std::move(f));
}

/// Central-difference gradient of a scalar function.
template <typename F>
Vec fd_grad(F&& fn, const Vec& x, double h) {
  Vec g(x.size());
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    Vec xp = x, xm = x;
    xp[i] += h;
    xm[i] -= h;
    g[i] = (fn(xp) - fn(xm)) / (2.0 * h);
  }
  return g;
}

/// Central-difference Jacobian of a vector function (used against Hessians).
template <typename F>
Mat fd_jacobian(F&& fn, const Vec& x, double h) {
  const Vec f0 = fn(x);
  Mat jac(f0.size(), x.size());
  for (Eigen::Index j = 0; j < x.size(); ++j) {
    Vec xp = x, xm = x;
    xp[j] += h;
    xm[j] -= h;
    jac.col(j) = (fn(xp) - fn(xm)) / (2.0 * h);
  }
  return jac;
}

/// Bisection root for a strictly decreasing function with fn(lo) >= 0 >= fn(hi).
template <typename F>
double bisect_decreasing(F&& fn, double lo, double hi, double width = 1e-13) {
  if (!(fn(lo) >= 0.0) || !(fn(hi) <= 0.0))
    throw std::invalid_argument("bisect_decreasing: bad bracket");
  for (int it = 0; it < 200 && hi - lo > width; ++it) {
    const double mid = 0.5 * (lo + hi);
    (fn(mid) >= 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace testsupport

#endif  // NETGAME_TESTS_SUPPORT_HPP
