#ifndef NETGAME_ERRORS_HPP
#define NETGAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netgame {

/// Base class for all library failures.
class error : public std::runtime_error {
public:
  explicit error(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

/// A structural precondition of an operation does not hold on this instance
/// (e.g. an inverse-positivity or curvature requirement), so the requested
/// quantity is not computable.
class assumption_error : public error {
public:
  using error::error;
};

/// An iterative solver failed; carries the iteration count and the last
/// residual so callers can report diagnostics.
class solve_error : public error {
public:
  solve_error(const std::string& what_arg, long iterations_arg, double residual_arg)
      : error(what_arg), iterations(iterations_arg), residual(residual_arg) {}

  long iterations;
  double residual;
};

}  // namespace netgame

#endif  // NETGAME_ERRORS_HPP
