#include "zeck/convergence.hpp"

#include <cmath>
#include <stdexcept>

namespace zeck {

LineFit least_squares_line(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("least_squares_line: need >= 2 paired points");
  const double n = static_cast<double>(x.size());
  double mx = 0, my = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0) throw std::invalid_argument("least_squares_line: degenerate abscissae");
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  return f;
}

ConvergenceReport make_convergence_report(int first_n, std::vector<double> errors,
                                          double noise_floor) {
  ConvergenceReport r;
  r.first_n = first_n;
  r.errors = std::move(errors);
  if (r.errors.empty()) return r;
  r.final_error = r.errors.back();

  // Log-linear fit over entries above the floor.
  std::vector<double> xs, ys;
  for (size_t i = 0; i < r.errors.size(); ++i) {
    if (r.errors[i] > noise_floor) {
      xs.push_back(static_cast<double>(first_n + static_cast<int>(i)));
      ys.push_back(std::log(r.errors[i]));
    }
  }
  if (xs.size() >= 3) {
    r.fitted_decay = std::exp(least_squares_line(xs, ys).slope);
  } else {
    r.fitted_decay = 0.0;  // series already at the floor
  }

  // Decreasing check on the tail half; sub-floor entries count as converged.
  size_t half = r.errors.size() / 2;
  bool ok = true;
  for (size_t i = half + 1; i < r.errors.size(); ++i) {
    if (r.errors[i] <= noise_floor) continue;
    if (r.errors[i] > r.errors[i - 1] * (1.0 + 1e-9)) {
      ok = false;
      break;
    }
  }
  r.eventually_decreasing = ok;
  return r;
}

}  // namespace zeck
