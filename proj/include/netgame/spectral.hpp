#ifndef NETGAME_SPECTRAL_HPP
#define NETGAME_SPECTRAL_HPP

#include <cmath>
#include <queue>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "netgame/errors.hpp"
#include "netgame/interaction.hpp"

namespace netgame {

struct SpectralOptions {
  double rel_tol = 1e-12;
  long max_iter = 1000000;
};

namespace detail {

/// True when the digraph with an edge u -> v for every m(u, v) > 0 has no
/// directed cycle (Kahn peeling). An acyclic nonnegative matrix is
/// nilpotent, so its spectral radius is exactly zero.
inline bool acyclic(const Mat& m) {
  const Eigen::Index n = m.rows();
  std::vector<int> indeg(static_cast<size_t>(n), 0);
  for (Eigen::Index v = 0; v < n; ++v)
    for (Eigen::Index u = 0; u < n; ++u)
      if (m(u, v) > 0.0) ++indeg[static_cast<size_t>(v)];

  std::queue<Eigen::Index> ready;
  for (Eigen::Index v = 0; v < n; ++v)
    if (indeg[static_cast<size_t>(v)] == 0) ready.push(v);

  Eigen::Index removed = 0;
  while (!ready.empty()) {
    const Eigen::Index u = ready.front();
    ready.pop();
    ++removed;
    for (Eigen::Index v = 0; v < n; ++v)
      if (m(u, v) > 0.0 && --indeg[static_cast<size_t>(v)] == 0) ready.push(v);
  }
  return removed == n;
}

}  // namespace detail

/// Spectral radius of an entrywise-nonnegative matrix.
///
/// Power iteration is run on the shifted matrix m + sigma*I with
/// sigma = max row sum. The shift makes the dominant eigenvalue of the
/// iterated matrix simple in modulus even when m itself has several
/// eigenvalues tied in absolute value (e.g. the +/-lambda pairs of bipartite
/// adjacency structures, on which the unshifted iteration oscillates
/// forever); by Perron-Frobenius the radius of m is then lambda(m + sigma*I)
/// - sigma. Nilpotent inputs (acyclic digraphs) are detected up front and
/// return exactly zero, since for them the iteration has no eigengap to
/// converge with.
///
/// Throws std::invalid_argument for non-square or negative input and
/// solve_error if the iteration fails to settle within max_iter.
inline double spectral_radius(const Mat& m, SpectralOptions opts = {}) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("spectral_radius: matrix must be square");
  const Eigen::Index n = m.rows();
  if (n == 0) return 0.0;
  if ((m.array() < 0.0).any())
    throw std::invalid_argument("spectral_radius: matrix must be entrywise nonnegative");

  const double sigma = m.rowwise().sum().maxCoeff();
  if (sigma == 0.0) return 0.0;           // zero matrix
  if (detail::acyclic(m)) return 0.0;     // nilpotent: radius exactly zero

  Vec v = Vec::Ones(n);
  double lambda = sigma;
  for (long it = 1; it <= opts.max_iter; ++it) {
    Vec w = m * v + sigma * v;
    const double estimate = v.dot(w) / v.dot(v);  // Rayleigh quotient
    const double norm = w.lpNorm<Eigen::Infinity>();
    if (!(norm > 0.0) || !std::isfinite(estimate))
      throw solve_error("spectral_radius: iteration left the cone", it, estimate);
    v = w / norm;
    const double change = std::abs(estimate - lambda);
    lambda = estimate;
    if (it >= 3 && change <= opts.rel_tol * std::abs(lambda))
      return std::max(lambda - sigma, 0.0);
  }
  throw solve_error("spectral_radius: power iteration did not converge",
                    opts.max_iter, lambda - sigma);
}

}  // namespace netgame

#endif  // NETGAME_SPECTRAL_HPP
