#ifndef NETGAME_SERIALIZE_HPP
#define NETGAME_SERIALIZE_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "netgame/experiments.hpp"
#include "netgame/game.hpp"
#include "netgame/graphs.hpp"
#include "netgame/pricing.hpp"

namespace netgame {

inline nlohmann::json vec_to_json(const Vec& v) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
  return out;
}

inline Vec vec_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) + ": expected a JSON array");
  Vec v(static_cast<Eigen::Index>(j.size()));
  Eigen::Index i = 0;
  for (const auto& e : j) v[i++] = e.get<double>();
  return v;
}

inline nlohmann::json mat_to_json(const Mat& m) {
  nlohmann::json out = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(std::move(row));
  }
  return out;
}

inline Mat mat_from_json(const nlohmann::json& j, const char* what) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument(std::string(what) + ": expected a nonempty array of rows");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = static_cast<Eigen::Index>(j.front().size());
  Mat m(rows, cols);
  Eigen::Index i = 0;
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw std::invalid_argument(std::string(what) + ": ragged rows");
    Eigen::Index k = 0;
    for (const auto& e : row) m(i, k++) = e.get<double>();
    ++i;
  }
  return m;
}

/// Interaction functions serialize by kind; only the built-in kinds have a
/// data representation (a custom function is a set of callables).
inline nlohmann::json interaction_to_json(const InteractionFunction& f) {
  switch (f.kind()) {
    case InteractionKind::Linear: return {{"kind", "linear"}};
    case InteractionKind::Log1p: return {{"kind", "log1p"}};
    case InteractionKind::ScaledLog:
      return {{"kind", "scaled_log"}, {"params", {{"c", f.param()}}}};
    case InteractionKind::Custom: break;
  }
  throw std::invalid_argument("interaction_to_json: custom functions are not serializable");
}

inline InteractionFunction interaction_from_json(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "linear") return InteractionFunction::linear();
  if (kind == "log1p") return InteractionFunction::log1p();
  if (kind == "scaled_log") {
    double c = 10.0;
    if (j.contains("params")) c = j["params"].value("c", 10.0);
    return InteractionFunction::scaled_log(c);
  }
  throw std::invalid_argument("interaction_from_json: unknown kind '" + kind + "'");
}

inline void to_json(nlohmann::json& j, const GameSpec& g) {
  j = {{"n", g.n()},
       {"a", vec_to_json(g.a)},
       {"b", vec_to_json(g.b)},
       {"G", mat_to_json(g.G)},
       {"f", interaction_to_json(g.f)}};
}

inline void from_json(const nlohmann::json& j, GameSpec& g) {
  g.a = vec_from_json(j.at("a"), "game.a");
  g.b = vec_from_json(j.at("b"), "game.b");
  g.G = mat_from_json(j.at("G"), "game.G");
  g.f = interaction_from_json(j.at("f"));
  if (j.contains("n") &&
      j["n"].get<Eigen::Index>() != g.a.size())
    throw std::invalid_argument("game: declared n disagrees with array sizes");
  g.validate();
}

inline void to_json(nlohmann::json& j, const SolveReport& r) {
  j = {{"x", vec_to_json(r.x)},
       {"iterations", r.iterations},
       {"final_residual", r.final_residual},
       {"converged", r.converged}};
}

inline void to_json(nlohmann::json& j, const AssumptionReport& r) {
  j = {{"contraction_factor", r.contraction_factor},
       {"rho", r.rho},
       {"rho_prime", r.rho_prime},
       {"assumption1_ok", r.assumption1_ok},
       {"assumption3_ok", r.assumption3_ok}};
}

inline void to_json(nlohmann::json& j, const PricingSolution& s) {
  j = {{"x_star", vec_to_json(s.x_star)},
       {"p_star", vec_to_json(s.p_star)},
       {"revenue", s.revenue},
       {"iterations", s.iterations},
       {"step_size", s.step_size},
       {"grad_norm", s.grad_norm}};
}

inline void to_json(nlohmann::json& j, const AgnosticBaseline& b) {
  j = {{"p", vec_to_json(b.p)}, {"x", vec_to_json(b.x)}, {"revenue", b.revenue}};
}

inline void to_json(nlohmann::json& j, const PoiReport& r) {
  j = {{"j_star", r.j_star},
       {"j_agnostic", r.j_agnostic},
       {"poi", r.poi},
       {"lower_bound", r.lower_bound},
       {"nu", r.nu},
       {"rho", r.rho}};
}

inline void to_json(nlohmann::json& j, const UniformReduction& r) {
  j = {{"ok", r.ok},
       {"reason", r.reason},
       {"a_bar", r.a_bar},
       {"b_bar", r.b_bar},
       {"g_bar", r.g_bar}};
}

inline void to_json(nlohmann::json& j, const UniformPricing& u) {
  j = {{"p_bar", u.p_bar},
       {"x_bar", u.x_bar},
       {"revenue", u.revenue},
       {"iterations", u.iterations}};
}

inline void to_json(nlohmann::json& j, const UniformAgnostic& u) {
  j = {{"p_bar", u.p_bar}, {"x_bar", u.x_bar}, {"revenue", u.revenue}};
}

inline void to_json(nlohmann::json& j, const BruteForceResult& r) {
  j = {{"x", vec_to_json(r.x)}, {"revenue", r.revenue}};
}

inline void to_json(nlohmann::json& j, const SweepRow& r) {
  j = {{"param", r.param},
       {"j_star", r.j_star},
       {"j_agnostic", r.j_agnostic},
       {"inverse_poi", r.inverse_poi},
       {"gap", r.gap},
       {"bound", r.bound},
       {"iterations", r.iterations},
       {"status", r.status}};
}

inline void to_json(nlohmann::json& j, const GraphParams& p) {
  const char* family = p.family == GraphFamily::Star ? "star"
                       : p.family == GraphFamily::Ring ? "ring" : "pa";
  j = {{"family", family}, {"n", p.n},     {"alpha", p.alpha},
       {"g_bar", p.g_bar}, {"m", p.m},     {"seed", p.seed}};
}

inline void from_json(const nlohmann::json& j, GraphParams& p) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "star")
    p.family = GraphFamily::Star;
  else if (family == "ring")
    p.family = GraphFamily::Ring;
  else if (family == "pa")
    p.family = GraphFamily::PreferentialAttachment;
  else
    throw std::invalid_argument("graph: unknown family '" + family + "'");
  p.n = j.at("n").get<int>();
  p.alpha = j.value("alpha", 0.5);
  p.g_bar = j.value("g_bar", 0.5);
  p.m = j.value("m", 2);
  p.seed = j.value("seed", std::uint64_t{1});
}

inline void to_json(nlohmann::json& j, const ExperimentConfig& c) {
  const char* exp = c.experiment == ExperimentKind::AlphaSweep ? "alpha_sweep"
                    : c.experiment == ExperimentKind::GbarSweep ? "gbar_sweep"
                                                                : "single";
  j = {{"experiment", exp},
       {"graph", c.graph},
       {"a_scalar", c.a_scalar},
       {"b_scalar", c.b_scalar},
       {"b_tracks_gbar", c.b_tracks_gbar},
       {"f", interaction_to_json(c.f)},
       {"mode", c.mode == PricingMode::Uniform ? "uniform" : "discriminatory"},
       {"sweep_grid", c.sweep_grid},
       {"tolerances", {{"tol", c.tolerances.tol}, {"max_iter", c.tolerances.max_iter}}},
       {"output_dir", c.output_dir}};
}

inline void from_json(const nlohmann::json& j, ExperimentConfig& c) {
  const std::string exp = j.at("experiment").get<std::string>();
  if (exp == "alpha_sweep")
    c.experiment = ExperimentKind::AlphaSweep;
  else if (exp == "gbar_sweep")
    c.experiment = ExperimentKind::GbarSweep;
  else if (exp == "single")
    c.experiment = ExperimentKind::Single;
  else
    throw std::invalid_argument("config: unknown experiment '" + exp + "'");
  c.graph = j.at("graph").get<GraphParams>();
  c.a_scalar = j.value("a_scalar", 1.0);
  c.b_scalar = j.value("b_scalar", 1.0);
  c.b_tracks_gbar = j.value("b_tracks_gbar", false);
  c.f = j.contains("f") ? interaction_from_json(j["f"])
                        : InteractionFunction::log1p();
  const std::string mode = j.value("mode", std::string("discriminatory"));
  if (mode == "discriminatory")
    c.mode = PricingMode::Discriminatory;
  else if (mode == "uniform")
    c.mode = PricingMode::Uniform;
  else
    throw std::invalid_argument("config: unknown mode '" + mode + "'");
  c.sweep_grid.clear();
  if (j.contains("sweep_grid"))
    c.sweep_grid = j["sweep_grid"].get<std::vector<double>>();
  if (j.contains("tolerances")) {
    c.tolerances.tol = j["tolerances"].value("tol", 1e-10);
    c.tolerances.max_iter = j["tolerances"].value("max_iter", long{100000});
  }
  c.output_dir = j.value("output_dir", std::string("."));
}

}  // namespace netgame

#endif  // NETGAME_SERIALIZE_HPP
