#ifndef NETGAME_GRAPHS_HPP
#define NETGAME_GRAPHS_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "netgame/interaction.hpp"
#include "netgame/rng.hpp"

namespace netgame {

enum class GraphFamily { Star, Ring, PreferentialAttachment };

struct GraphParams {
  GraphFamily family = GraphFamily::Star;
  int n = 10;
  /// Direction-mixing weight: G = alpha * E + (1 - alpha) * E^T for the
  /// family's base orientation E. alpha = 1 keeps the base direction,
  /// alpha = 0 reverses it, alpha = 0.5 symmetrizes.
  double alpha = 0.5;
  double g_bar = 0.5;      ///< ring edge weight
  int m = 2;               ///< attachment edges per arriving node
  std::uint64_t seed = 1;  ///< generator seed (preferential attachment only)
};

/// G = alpha * E + (1 - alpha) * E^T. Entrywise sums are preserved, so the
/// total edge weight is independent of alpha.
inline Mat directional_mix(const Mat& base, double alpha) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("directional_mix: alpha must lie in [0, 1]");
  return alpha * base + (1.0 - alpha) * base.transpose();
}

/// Star influence structure: the base orientation has the hub (agent 0)
/// influenced by every peripheral agent with unit weight, i.e.
/// E(0, j) = 1 for j >= 1 and zero elsewhere; the result is mixed with its
/// transpose by alpha.
inline Mat star_graph(int n, double alpha) {
  if (n < 2) throw std::invalid_argument("star_graph: need n >= 2");
  Mat base = Mat::Zero(n, n);
  for (int j = 1; j < n; ++j) base(0, j) = 1.0;
  return directional_mix(base, alpha);
}

/// Directed cycle: G(i, j) = g_bar exactly when i = j + 1 (mod n). Every
/// row and every column sums to g_bar, so the instance is uniform.
inline Mat ring_graph(int n, double g_bar) {
  if (n < 2) throw std::invalid_argument("ring_graph: need n >= 2");
  if (!(g_bar >= 0.0)) throw std::invalid_argument("ring_graph: g_bar must be >= 0");
  Mat g = Mat::Zero(n, n);
  for (int j = 0; j < n; ++j) g((j + 1) % n, j) = g_bar;
  return g;
}

/// Preferential-attachment graph: a complete core on m + 1 nodes, then each
/// arriving node v attaches to m distinct existing nodes drawn with
/// probability proportional to degree (repeat draws rejected). Every edge
/// carries weight 1/m, so each arrival distributes one unit of influence
/// across its m attachments and row sums stay bounded as the graph grows.
/// Edges are oriented low-index -> influence-on -> high-index, giving a
/// strictly upper-triangular base matrix, then mixed with its transpose by
/// alpha. Fully deterministic in (n, m, seed).
inline Mat pa_graph(int n, int m, std::uint64_t seed, double alpha) {
  if (n < 2) throw std::invalid_argument("pa_graph: need n >= 2");
  if (m < 1 || m >= n)
    throw std::invalid_argument("pa_graph: need 1 <= m < n");

  Xoshiro256 rng(seed);
  Mat base = Mat::Zero(n, n);
  const double w = 1.0 / m;
  std::vector<int> endpoints;  // each edge contributes both ends: degree pool
  const int core = m + 1;
  for (int i = 0; i < core; ++i)
    for (int j = i + 1; j < core; ++j) {
      base(i, j) = w;
      endpoints.push_back(i);
      endpoints.push_back(j);
    }
  std::vector<int> targets;
  for (int v = core; v < n; ++v) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m) {
      const int u = endpoints[rng.below(endpoints.size())];
      bool seen = false;
      for (int t : targets) seen = seen || (t == u);
      if (!seen) targets.push_back(u);
    }
    for (int u : targets) {
      base(u, v) = w;
      endpoints.push_back(u);
      endpoints.push_back(v);
    }
  }
  return directional_mix(base, alpha);
}

inline Mat make_graph(const GraphParams& p) {
  switch (p.family) {
    case GraphFamily::Star: return star_graph(p.n, p.alpha);
    case GraphFamily::Ring: return ring_graph(p.n, p.g_bar);
    case GraphFamily::PreferentialAttachment:
      return pa_graph(p.n, p.m, p.seed, p.alpha);
  }
  throw std::invalid_argument("make_graph: unknown family");
}

}  // namespace netgame

#endif  // NETGAME_GRAPHS_HPP
