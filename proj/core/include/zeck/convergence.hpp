#pragma once

#include <vector>

namespace zeck {

/// Error series e_n together with a fitted geometric decay rate.
struct ConvergenceReport {
  int first_n = 0;              // index of errors[0]
  std::vector<double> errors;   // e_n, n = first_n, first_n+1, ...
  double fitted_decay = 0.0;    // gamma estimate from a log-linear fit; 0 when
                                // the series sits below the noise floor
  bool eventually_decreasing = false;
  double final_error = 0.0;

  double error_at(int n) const { return errors.at(static_cast<size_t>(n - first_n)); }
  int last_n() const { return first_n + static_cast<int>(errors.size()) - 1; }
};

/// Classifies an error series: fits |e_n| ~ C * gamma^n over the entries above
/// the noise floor and checks that the tail half is non-increasing (entries
/// below the floor count as converged).
ConvergenceReport make_convergence_report(int first_n, std::vector<double> errors,
                                          double noise_floor = 1e-15);

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Ordinary least squares y ~ slope*x + intercept.
LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace zeck
