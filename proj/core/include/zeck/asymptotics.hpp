#pragma once

#include <limits>
#include <vector>

#include "zeck/engine.hpp"
#include "zeck/tables.hpp"

namespace zeck {

/// Closed-form growth constants of a two-dimensional recurrence, plus the
/// triviality verdict and (once fitted) the empirical intercepts and decay
/// rates of the linear asymptotes.
struct AsymptoticConstants {
  double lambda1 = 0.0;
  double c_mu = 0.0;
  double c_sigma = 0.0;
  double c_mu_star = 0.0;     // numerator of c_mu
  double c_sigma_star = 0.0;  // numerator of c_sigma
  bool trivial = false;       // the counted statistic is identically zero
  double fitted_d_mu = std::numeric_limits<double>::quiet_NaN();
  double fitted_d_sigma = std::numeric_limits<double>::quiet_NaN();
  double fitted_gamma_mu = std::numeric_limits<double>::quiet_NaN();
  double fitted_gamma_sigma = std::numeric_limits<double>::quiet_NaN();
};

/// Evaluates c_mu = [sum t_{i,j} j / lambda^i] / [sum t_{i,j} i / lambda^i]
/// and c_sigma = [sum t_{i,j} (j - c_mu i)^2 / lambda^i] / [same denominator],
/// keeping the numerators as the star values. The denominator is positive for
/// every valid table; a non-positive one throws.
AsymptoticConstants compute_constants(const CoefficientTable& table, double lambda1);

/// Builds the gap table for (plrs, g), computes the constants, and decides
/// triviality of the gap count: g=0 is trivial iff c_i = 1 for all i < L and
/// c_L is 1 or 2; g=1 is trivial iff the recurrence is (1,1); g >= 2 is never
/// trivial. Requires all c_i >= 1.
AsymptoticConstants check_positivity(const Plrs& plrs, int g);

/// Minimum over the verification grid x in {1,1.25,..,10}, y in {2..8},
/// z in {0,0.05,..,5}, w in {1..8} of
///   x^y (z w)^2 + x (1 - 2 z (w + y - 1)) - (1 - 2 z (w + y)),
/// the quantity whose non-negativity underpins the variance positivity of the
/// gap recurrences for g >= 2.
double variance_bound_sweep_min();

/// Moments of one row distribution. standardized[m] = central[m] / sigma^m
/// (NaN when sigma = 0); ks is the distance to the standard normal, with the
/// two CDFs compared at the upper edge (k + 1/2 - mu)/sigma of each atom's
/// lattice cell.
struct MomentRow {
  int n = 0;
  double mean = 0.0;
  double variance = 0.0;
  std::vector<double> central;       // index m = 0..m_max
  std::vector<double> standardized;  // index m = 0..m_max
  double ks = std::numeric_limits<double>::quiet_NaN();
};

enum class MomentMode { kDirect, kRecursive };

struct MomentSeries {
  MomentMode mode = MomentMode::kRecursive;
  int m_max = 0;
  int first_n = 0;
  std::vector<MomentRow> rows;
  /// Largest deviation of the recursive path from the direct path seen during
  /// verification (relative, with an absolute floor for tiny values).
  double max_deviation = 0.0;

  const MomentRow& at(int n) const { return rows.at(static_cast<size_t>(n - first_n)); }
  int last_n() const { return first_n + static_cast<int>(rows.size()) - 1; }
  std::vector<double> mean_series() const;
  std::vector<double> variance_series() const;
  std::vector<double> central_series(int m) const;
};

/// Direct summation over a probability vector (64-bit path).
MomentRow moments_direct(const Distribution& dist, int m_max);

/// Direct summation over the exact row with 192-bit intermediates; the
/// reference path for dual-computation checks.
MomentRow moments_direct(const RowTable& rows, int n, int m_max);

struct RecursiveOptions {
  bool verify_against_direct = true;
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;   // applies when the direct value is below 1e-3
  int verify_up_to = std::numeric_limits<int>::max();
  bool with_ks = true;
  bool throw_on_divergence = true;
};

/// Mean and central moments for every n up to n_target: seed rows get direct
/// moments, evolved rows use the mean recursion and the binomial-convolution
/// central-moment recursion. With verification enabled each recursive row is
/// compared against the exact direct path.
MomentSeries moments_recursive(const CoefficientTable& table, const RowTable& rows,
                               int m_max, int n_target,
                               const RecursiveOptions& opts = {});

/// KS distance of a lattice distribution to N(mean, sigma^2), CDFs compared
/// at half-integer cell edges.
double ks_to_normal(const Distribution& dist, double mean, double sigma);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_abs_residual = 0.0;
  double residual_decay = 0.0;  // gamma estimate; 0 when residuals are at the floor
  bool residuals_decaying = false;
};

/// Least-squares line over the window [n_lo, n_hi] (window length >= 10) with
/// a log-linear decay fit of the residuals.
LinearFit fit_linear_asymptote(const std::vector<double>& series, int first_n,
                               int n_lo, int n_hi);

/// One row of CLT diagnostics: absolute deviations of the standardized
/// moments from the normal moments (0 for odd m, (m-1)!! for even m).
struct CltDiagnostics {
  int first_n = 0;
  int m_max = 0;
  std::vector<std::vector<double>> deviations;  // [row][m]
  std::vector<double> ks;

  const std::vector<double>& deviations_at(int n) const {
    return deviations.at(static_cast<size_t>(n - first_n));
  }
  double ks_at(int n) const { return ks.at(static_cast<size_t>(n - first_n)); }
};

/// Requires sigma^2 > 0 on every row of the series.
CltDiagnostics clt_diagnostics(const MomentSeries& series, int m_max);

struct LeadingCoefCheck {
  int m = 0;
  double fitted = 0.0;    // leading coefficient of the degree-m fit of central[2m]
  double expected = 0.0;  // (2m-1)!! * c_sigma^m
  double rel_error = 0.0;
};

/// Fits a degree-m polynomial to the 2m-th central moment over [n_lo, n_hi]
/// and compares the leading coefficient with (2m-1)!! * c_sigma^m.
LeadingCoefCheck double_factorial_check(const MomentSeries& series, double c_sigma,
                                        int m, int n_lo, int n_hi);

double double_factorial(int k);  // k!! with (-1)!! = 1

}  // namespace zeck
