#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace monobec {

/// Base class for all solver failures that are not precondition violations.
/// Precondition violations (bad grid, psi0 <= 0, ...) throw std::invalid_argument.
class error : public std::runtime_error {
 public:
  explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Requested state does not exist (past the fold, or upper branch at c >= 0).
/// Carries the evidence gathered by the search so callers can report it.
class no_solution_error : public error {
 public:
  no_solution_error(const std::string& msg, double c_requested, double g,
                    double c_reachable)
      : error(msg), c_requested(c_requested), g(g), c_reachable(c_reachable) {}

  double c_requested;  ///< parameter the caller asked for
  double g;            ///< trap parameter of the failed solve
  double c_reachable;  ///< most negative (or nearest) c the search could reach
};

/// Iteration failed to meet its tolerance within the allowed budget.
class convergence_error : public error {
 public:
  convergence_error(const std::string& msg, int iterations,
                    std::vector<double> residual_history = {})
      : error(msg), iterations(iterations),
        residual_history(std::move(residual_history)) {}

  int iterations;
  std::vector<double> residual_history;
};

/// A bisection bracket did not contain the sought sign change / eigenvalue.
class bracket_error : public error {
 public:
  explicit bracket_error(const std::string& msg) : error(msg) {}
};

/// Step size too coarse: trajectory left the representable range immediately.
class step_size_error : public error {
 public:
  explicit step_size_error(const std::string& msg) : error(msg) {}
};

}  // namespace monobec
