// Command-line front end: validate instances, solve equilibria and pricing
// problems, and run the bundled sweep experiments. Inputs and outputs are
// JSON (sweeps also write CSV and an SVG chart); failures print a
// machine-readable error object to stderr and exit nonzero.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "netgame/netgame.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  json j;
  in >> j;
  return j;
}

netgame::GameSpec load_game(const std::string& path) {
  return read_json_file(path).get<netgame::GameSpec>();
}

void flatten_csv(const json& j, const std::string& prefix, std::string& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items())
      flatten_csv(value, prefix.empty() ? key : prefix + "." + key, out);
    return;
  }
  if (j.is_array()) {
    std::string joined;
    for (const auto& e : j) {
      if (!joined.empty()) joined += ';';
      joined += e.dump();
    }
    out += prefix + "," + joined + "\n";
    return;
  }
  out += prefix + "," + j.dump() + "\n";
}

/// Renders the payload as pretty JSON or flat key,value CSV and writes it to
/// the chosen sink (stdout by default).
void write_payload(const json& payload, const std::string& out_path,
                   const std::string& format) {
  std::string text;
  if (format == "csv") {
    text = "key,value\n";
    flatten_csv(payload, "", text);
  } else {
    text = payload.dump(2) + "\n";
  }
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open '" + out_path + "' for writing");
  out << text;
  if (!out.flush()) throw std::runtime_error("write failed for '" + out_path + "'");
}

std::string sanitize(const std::string& s) {
  std::string out;
  for (char c : s)
    out += (std::isalnum(static_cast<unsigned char>(c)) != 0) ? c : '_';
  return out;
}

struct CommonOpts {
  double tol = 1e-10;
  long max_iter = 100000;
  std::string out_path;
  std::string format = "json";
};

void add_common(CLI::App* sub, CommonOpts& c) {
  sub->add_option("--tol", c.tol, "solver tolerance")->check(CLI::PositiveNumber);
  sub->add_option("--max-iter", c.max_iter, "iteration cap")->check(CLI::PositiveNumber);
  sub->add_option("--out", c.out_path, "write the result here instead of stdout");
  sub->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
}

json run_validate(const std::string& game_path) {
  const netgame::GameSpec g = load_game(game_path);
  json out;
  out["n"] = g.n();
  out["interaction"] = g.f.name();
  out["normalized"] = g.f.normalized();
  out["assumptions"] = netgame::check_assumptions(g);
  out["interaction_audit"] = netgame::audit_interaction(g.f);
  return out;
}

json run_solve_ne(const std::string& game_path, const std::string& prices_path,
                  const CommonOpts& c) {
  const netgame::GameSpec g = load_game(game_path);
  const json pj = read_json_file(prices_path);
  const netgame::Vec p =
      netgame::vec_from_json(pj.is_object() ? pj.at("p") : pj, "prices");
  if (p.size() != g.n())
    throw std::invalid_argument("prices: size does not match the game");
  const netgame::SolveReport rep =
      netgame::solve_ne(g, p, netgame::NeOptions{c.tol, c.max_iter});
  if (!rep.converged)
    throw netgame::solve_error("equilibrium iteration did not converge",
                               rep.iterations, rep.final_residual);
  return json(rep);
}

json run_optimal_price(const std::string& game_path, const CommonOpts& c) {
  // Prices are invariant under normalization, so unnormalized instances are
  // accepted and canonicalized here.
  const netgame::GameSpec g = netgame::normalize_game(load_game(game_path));
  json out;
  out["solution"] =
      netgame::solve_optimal_price(g, netgame::PgOptions{c.tol, c.max_iter});
  out["comparison"] =
      netgame::price_of_information(g, netgame::PgOptions{c.tol, c.max_iter});
  return out;
}

json run_uniform_price(const std::string& game_path, const CommonOpts& c) {
  const netgame::GameSpec g = load_game(game_path);
  json out;
  out["reduction"] = netgame::uniform_reduce(g);
  out["optimal"] = netgame::solve_uniform_price(g, c.tol);
  out["agnostic"] = netgame::uniform_agnostic(g, c.tol);
  out["comparison"] = netgame::uniform_price_of_information(g, c.tol);
  return out;
}

json run_sweep(const std::string& config_path, const std::string& out_dir_flag,
               bool seed_set, std::uint64_t seed, const CommonOpts& c,
               bool tol_set) {
  netgame::ExperimentConfig cfg =
      read_json_file(config_path).get<netgame::ExperimentConfig>();
  if (!out_dir_flag.empty()) cfg.output_dir = out_dir_flag;
  if (seed_set) cfg.graph.seed = seed;
  if (tol_set) cfg.tolerances = netgame::SolverSettings{c.tol, c.max_iter};

  std::vector<netgame::SweepRow> rows;
  std::string kind_name;
  netgame::PlotKind plot_kind = netgame::PlotKind::InversePoi;
  switch (cfg.experiment) {
    case netgame::ExperimentKind::AlphaSweep:
      rows = netgame::run_alpha_sweep(cfg);
      kind_name = "alpha_sweep";
      break;
    case netgame::ExperimentKind::GbarSweep:
      rows = netgame::run_gbar_sweep(cfg);
      kind_name = "gbar_sweep";
      plot_kind = netgame::PlotKind::GapVsBound;
      break;
    case netgame::ExperimentKind::Single:
      rows.push_back(netgame::run_single(cfg));
      kind_name = "single";
      break;
  }

  const char* family = cfg.graph.family == netgame::GraphFamily::Star ? "star"
                       : cfg.graph.family == netgame::GraphFamily::Ring
                           ? "ring" : "pa";
  fs::create_directories(cfg.output_dir);
  const std::string base = (fs::path(cfg.output_dir) /
                            (kind_name + "_" + family + "_" + sanitize(cfg.f.name())))
                               .string();
  netgame::emit_csv(rows, base + ".csv");
  netgame::emit_plot(rows, base + ".svg", plot_kind);

  long ok = 0;
  std::vector<double> params, ipoi;
  double max_gap = -std::numeric_limits<double>::infinity();
  for (const auto& r : rows) {
    if (r.status == "ok") ++ok;
    params.push_back(r.param);
    ipoi.push_back(r.inverse_poi);
    if (!std::isnan(r.gap)) max_gap = std::max(max_gap, r.gap);
  }
  json summary;
  summary["rows"] = rows.size();
  summary["ok_rows"] = ok;
  summary["csv"] = base + ".csv";
  summary["svg"] = base + ".svg";
  if (ok > 0) {
    double min_ipoi = std::numeric_limits<double>::infinity();
    for (double v : ipoi)
      if (!std::isnan(v)) min_ipoi = std::min(min_ipoi, v);
    summary["min_inverse_poi"] = min_ipoi;
    summary["argmin_param"] = netgame::quadratic_argmin(params, ipoi);
    summary["max_gap"] = max_gap;
  }
  return summary;
}

json run_oracle(const std::string& game_path, double x_max, double step) {
  const netgame::GameSpec g = netgame::normalize_game(load_game(game_path));
  if (x_max <= 0.0) {
    // Default box: a generous margin above the equilibrium caps.
    x_max = 1.2 * netgame::xbar_max(g).maxCoeff() + 0.1;
  }
  json out = netgame::brute_force_optimal(g, x_max, step);
  out["x_max"] = x_max;
  out["step"] = step;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"linear-quadratic network game solvers and experiments"};
  app.require_subcommand(1);

  std::string game_path, prices_path, config_path, out_dir;
  std::uint64_t seed = 1;
  double x_max = 0.0, step = 1e-3;
  CommonOpts copts;

  CLI::App* validate = app.add_subcommand(
      "validate", "structural checks, assumption report and interaction audit");
  validate->add_option("game", game_path, "game JSON file")->required();
  add_common(validate, copts);

  CLI::App* solve_ne = app.add_subcommand(
      "solve-ne", "equilibrium under given prices (fixed-point iteration)");
  solve_ne->add_option("game", game_path, "game JSON file")->required();
  solve_ne->add_option("--prices", prices_path, "price vector JSON file")->required();
  add_common(solve_ne, copts);

  CLI::App* optimal = app.add_subcommand(
      "optimal-price", "revenue-optimal discriminatory prices and comparison");
  optimal->add_option("game", game_path, "game JSON file")->required();
  add_common(optimal, copts);

  CLI::App* uniform = app.add_subcommand(
      "uniform-price", "optimal single price on a uniform instance");
  uniform->add_option("game", game_path, "game JSON file")->required();
  add_common(uniform, copts);

  CLI::App* sweep = app.add_subcommand(
      "sweep", "run a sweep experiment from a config file (CSV + SVG output)");
  sweep->add_option("config", config_path, "experiment config JSON")->required();
  CLI::Option* sweep_seed = sweep->add_option("--seed", seed, "override the graph seed");
  sweep->add_option("--out", out_dir, "override the configured output directory");
  CLI::Option* sweep_tol = sweep->add_option("--tol", copts.tol, "solver tolerance")
                               ->check(CLI::PositiveNumber);
  sweep->add_option("--max-iter", copts.max_iter, "iteration cap")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--format", copts.format, "summary format")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* oracle = app.add_subcommand(
      "oracle", "exhaustive grid reference for the optimal-pricing problem (n <= 3)");
  oracle->add_option("game", game_path, "game JSON file")->required();
  oracle->add_option("--x-max", x_max, "grid upper limit (default: auto)");
  oracle->add_option("--step", step, "coarse grid step")->check(CLI::PositiveNumber);
  add_common(oracle, copts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    json err = {{"error", {{"type", "usage"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }

  try {
    json payload;
    if (*validate)
      payload = run_validate(game_path);
    else if (*solve_ne)
      payload = run_solve_ne(game_path, prices_path, copts);
    else if (*optimal)
      payload = run_optimal_price(game_path, copts);
    else if (*uniform)
      payload = run_uniform_price(game_path, copts);
    else if (*sweep)
      payload = run_sweep(config_path, out_dir, sweep_seed->count() > 0, seed,
                          copts, sweep_tol->count() > 0);
    else
      payload = run_oracle(game_path, x_max, step);
    write_payload(payload, copts.out_path, copts.format);
    return 0;
  } catch (const netgame::solve_error& e) {
    json err = {{"error",
                 {{"type", "solve_failure"},
                  {"message", e.what()},
                  {"iterations", e.iterations},
                  {"residual", e.residual}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const netgame::assumption_error& e) {
    json err = {{"error", {{"type", "assumption_violation"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    json err = {{"error", {{"type", "invalid_input"}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return 1;
  }
}
