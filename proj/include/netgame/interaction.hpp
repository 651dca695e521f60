#ifndef NETGAME_INTERACTION_HPP
#define NETGAME_INTERACTION_HPP

#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "netgame/errors.hpp"

namespace netgame {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;

enum class InteractionKind { Linear, Log1p, ScaledLog, Custom };

/// Interaction function f applied to each neighbour's action before network
/// aggregation, bundled with the two analytic constants the solvers need:
///
///   alpha = sup_{x>=0} |f'(x)|   (Lipschitz constant of f on the domain)
///   M     = curvature bound, f''(x) >= -M for all x >= 0 (NaN if undeclared)
///
/// Inputs are clamped at zero before evaluation: actions live on the
/// nonnegative orthant and solver iterates are projected there, so negative
/// arguments can only be numerical noise.
class InteractionFunction {
public:
  /// Defaults to the identity map (plain linear interaction).
  InteractionFunction() { *this = linear(); }

  /// f(x) = x. alpha = 1, M = 0.
  static InteractionFunction linear() {
    return InteractionFunction(
        InteractionKind::Linear, "linear", 0.0,
        [](double x) { return x; },
        [](double) { return 1.0; },
        [](double) { return 0.0; },
        1.0, 0.0);
  }

  /// f(x) = ln(1 + x). alpha = 1, M = 1.
  static InteractionFunction log1p() {
    return InteractionFunction(
        InteractionKind::Log1p, "log1p", 0.0,
        [](double x) { return std::log1p(x); },
        [](double x) { return 1.0 / (1.0 + x); },
        [](double x) { const double t = 1.0 + x; return -1.0 / (t * t); },
        1.0, 1.0);
  }

  /// f(x) = ln(1 + c*x) / c for c > 0. alpha = 1, M = c. The 1/c scaling
  /// keeps the slope at the origin equal to one for every c.
  static InteractionFunction scaled_log(double c = 10.0) {
    if (!(c > 0.0)) throw std::invalid_argument("scaled_log: c must be positive");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "scaled_log(c=%g)", c);
    return InteractionFunction(
        InteractionKind::ScaledLog, buf, c,
        [c](double x) { return std::log1p(c * x) / c; },
        [c](double x) { return 1.0 / (1.0 + c * x); },
        [c](double x) { const double t = 1.0 + c * x; return -c / (t * t); },
        1.0, c);
  }

  /// User-supplied triple (f, f', f'') with declared constants. Pass
  /// curvature = NaN if no curvature bound is known; operations that need M
  /// will then refuse with an explanatory error instead of guessing.
  static InteractionFunction custom(std::string name,
                                    std::function<double(double)> f,
                                    std::function<double(double)> df,
                                    std::function<double(double)> d2f,
                                    double alpha,
                                    double curvature =
                                        std::numeric_limits<double>::quiet_NaN()) {
    if (!f || !df || !d2f)
      throw std::invalid_argument("custom interaction: all three callables required");
    if (!(alpha > 0.0))
      throw std::invalid_argument("custom interaction: alpha must be positive");
    if (curvature < 0.0)  // NaN passes through
      throw std::invalid_argument("custom interaction: curvature bound must be >= 0");
    return InteractionFunction(InteractionKind::Custom, std::move(name), 0.0,
                               std::move(f), std::move(df), std::move(d2f),
                               alpha, curvature);
  }

  double operator()(double x) const { return f_(clamp(x)); }
  double deriv(double x) const { return df_(clamp(x)); }
  double second_deriv(double x) const { return d2f_(clamp(x)); }

  /// h(x) = f(x) - f'(x)*x, the gap between f and its tangent through the
  /// origin. Nonnegative for concave f with f(0) = 0; identically zero for
  /// linear f. Drives the revenue-gap lower bounds.
  double concavity_gap(double x) const {
    const double c = clamp(x);
    return f_(c) - df_(c) * c;
  }

  Vec eval(const Vec& x) const { return map(x, f_); }
  Vec deriv(const Vec& x) const { return map(x, df_); }
  Vec second_deriv(const Vec& x) const { return map(x, d2f_); }
  Vec concavity_gap(const Vec& x) const {
    Vec out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = concavity_gap(x[i]);
    return out;
  }

  double lipschitz_alpha() const { return alpha_; }
  /// Curvature bound M (f'' >= -M on the domain); NaN when undeclared.
  double curvature_bound() const { return curvature_; }

  InteractionKind kind() const { return kind_; }
  /// Shape parameter for parameterized kinds (c for scaled_log), else 0.
  double param() const { return param_; }
  const std::string& name() const { return name_; }

  /// True when f(0) = 0 and alpha = 1, i.e. f is already in the canonical
  /// form the pricing layer expects.
  bool normalized() const { return alpha_ == 1.0 && f_(0.0) == 0.0; }

  /// Canonical form (f - f(0)) / alpha: slope one at most, zero at zero.
  /// Returns *this unchanged if already normalized.
  InteractionFunction normalize() const {
    if (normalized()) return *this;
    const double f0 = f_(0.0);
    const double alpha = alpha_;
    auto f = f_;
    auto df = df_;
    auto d2f = d2f_;
    return InteractionFunction(
        InteractionKind::Custom, "normalized(" + name_ + ")", 0.0,
        [f, f0, alpha](double x) { return (f(x) - f0) / alpha; },
        [df, alpha](double x) { return df(x) / alpha; },
        [d2f, alpha](double x) { return d2f(x) / alpha; },
        1.0, curvature_ / alpha);
  }

private:
  InteractionFunction(InteractionKind kind, std::string name, double param,
                      std::function<double(double)> f,
                      std::function<double(double)> df,
                      std::function<double(double)> d2f,
                      double alpha, double curvature)
      : kind_(kind), name_(std::move(name)), param_(param),
        f_(std::move(f)), df_(std::move(df)), d2f_(std::move(d2f)),
        alpha_(alpha), curvature_(curvature) {}

  static double clamp(double x) { return x < 0.0 ? 0.0 : x; }

  Vec map(const Vec& x, const std::function<double(double)>& g) const {
    Vec out(x.size());
    for (Eigen::Index i = 0; i < x.size(); ++i) out[i] = g(clamp(x[i]));
    return out;
  }

  InteractionKind kind_;
  std::string name_;
  double param_;
  std::function<double(double)> f_, df_, d2f_;
  double alpha_;
  double curvature_;
};

/// Samples f on [0, x_max] and cross-checks the callables against the
/// declared constants. Returns a list of human-readable findings; empty
/// means no inconsistency was detected. Checks performed:
///   - outputs are finite and nonnegative,
///   - |f'| stays within the declared alpha,
///   - f'' stays above -M when M is declared,
///   - f' and f'' agree with finite differences of f and f',
///   - when f claims canonical form: f(0) = 0, f nondecreasing, concave,
///     and f(x) <= x.
inline std::vector<std::string> audit_interaction(const InteractionFunction& f,
                                                  int samples = 10000,
                                                  double x_max = 100.0) {
  if (samples < 2 || !(x_max > 0.0))
    throw std::invalid_argument("audit_interaction: need samples >= 2 and x_max > 0");

  std::vector<std::string> issues;
  auto report = [&issues](const char* what, double x, double got, double limit) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%s at x=%.6g (value %.9g, limit %.9g)",
                  what, x, got, limit);
    issues.emplace_back(buf);
  };

  const double alpha = f.lipschitz_alpha();
  const double curv = f.curvature_bound();
  const bool has_curv = !std::isnan(curv);
  const bool canonical = f.normalized();

  bool bad_range = false, bad_alpha = false, bad_curv = false, bad_mono = false,
       bad_concave = false, bad_bound = false, bad_d1 = false, bad_d2 = false;

  if (canonical && std::abs(f(0.0)) > 1e-12) {
    report("canonical form violated: f(0) != 0", 0.0, f(0.0), 0.0);
  }

  for (int k = 0; k < samples; ++k) {
    const double x = x_max * static_cast<double>(k) / (samples - 1);
    const double fx = f(x);
    const double d1 = f.deriv(x);
    const double d2 = f.second_deriv(x);

    if (!bad_range && (!std::isfinite(fx) || fx < -1e-12)) {
      bad_range = true;
      report("range violation: f must map into the nonnegative reals", x, fx, 0.0);
    }
    if (!bad_alpha && std::abs(d1) > alpha + 1e-9 * std::max(1.0, alpha)) {
      bad_alpha = true;
      report("Lipschitz violation: |f'| exceeds declared alpha", x, std::abs(d1), alpha);
    }
    if (has_curv && !bad_curv && d2 < -curv - 1e-9 * std::max(1.0, curv)) {
      bad_curv = true;
      report("curvature violation: f'' below declared -M", x, d2, -curv);
    }
    if (canonical) {
      if (!bad_mono && d1 < -1e-9) {
        bad_mono = true;
        report("monotonicity violation: f' negative", x, d1, 0.0);
      }
      if (!bad_concave && d2 > 1e-9) {
        bad_concave = true;
        report("concavity violation: f'' positive", x, d2, 0.0);
      }
      if (!bad_bound && fx > x + 1e-9 * std::max(1.0, x)) {
        bad_bound = true;
        report("upper-bound violation: f(x) > x for canonical f", x, fx, x);
      }
    }

    // Finite-difference consistency spot checks (every 100th point, interior).
    if (k % 100 == 50) {
      const double h = 1e-6 * std::max(1.0, x);
      if (x - h > 0.0) {
        const double fd1 = (f(x + h) - f(x - h)) / (2.0 * h);
        if (!bad_d1 && std::abs(fd1 - d1) > 1e-4 * std::max(1.0, std::abs(d1))) {
          bad_d1 = true;
          report("derivative mismatch: f' disagrees with finite difference of f",
                 x, d1, fd1);
        }
        const double fd2 = (f.deriv(x + h) - f.deriv(x - h)) / (2.0 * h);
        if (!bad_d2 && std::abs(fd2 - d2) > 1e-4 * std::max(1.0, std::abs(d2))) {
          bad_d2 = true;
          report("second-derivative mismatch: f'' disagrees with finite difference of f'",
                 x, d2, fd2);
        }
      }
    }
  }
  return issues;
}

}  // namespace netgame

#endif  // NETGAME_INTERACTION_HPP
