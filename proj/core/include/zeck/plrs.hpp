#pragma once

#include <string>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/convergence.hpp"

namespace zeck {

/// A positive linear recurrence: G_n = c_1 G_{n-1} + ... + c_L G_{n-L} with
/// non-negative integer coefficients, c_1 >= 1, c_L >= 1, and the fixed
/// initial conditions G_1 = 1, G_n = c_1 G_{n-1} + ... + c_{n-1} G_1 + 1 for
/// n <= L. Construct through build_plrs, which validates.
struct Plrs {
  std::vector<long long> c;  // c_1..c_L
  bool all_positive = false; // every c_i >= 1

  int order() const { return static_cast<int>(c.size()); }
  long long coeff(int i) const { return c.at(static_cast<size_t>(i - 1)); }  // 1-based
  long long coeff_sum() const;
  /// "1,1" form used by CLI flags and JSON.
  std::string str() const;
};

Plrs build_plrs(const std::vector<long long>& coeffs);
/// Parses the comma-separated textual form, e.g. "1,1".
Plrs parse_plrs(const std::string& text);

/// Exact terms G_1..G_N, strictly increasing.
struct SequenceTable {
  Plrs plrs;
  std::vector<Int> terms;

  const Int& g(int n) const { return terms.at(static_cast<size_t>(n - 1)); }  // 1-based
  int size() const { return static_cast<int>(terms.size()); }
};

SequenceTable sequence(const Plrs& plrs, int n_max);

struct SpectralData {
  double lambda1 = 0.0;   // dominant root of x^L - (c_1 x^{L-1} + ... + c_L)
  double binet_a1 = 0.0;  // leading growth coefficient, estimated as G_n / lambda1^n
  double residual = 0.0;  // |characteristic polynomial at lambda1|
};

/// x^L - sum_i coeffs[i-1] * x^{L-i}, evaluated by Horner's rule.
double char_poly_at(const std::vector<long long>& coeffs, double x);

/// Unique root in (1, 1 + sum coeffs] of the characteristic polynomial:
/// bisection to width 1e-13, then three Newton polish steps.
/// Requires sum of coefficients >= 2 and a non-negative coefficient list.
double dominant_root_of(const std::vector<long long>& coeffs);

/// Spectral data for a recurrence; binet_a1 is estimated at term binet_n.
/// Throws if the residual tolerance 1e-12 cannot be reached.
SpectralData dominant_root(const Plrs& plrs, int binet_n = 64);

/// Error series e_n = |G_{n-1}/G_n - 1/lambda1| for n = 2..N with fitted
/// geometric decay. Requires at least 20 terms.
ConvergenceReport growth_ratio_check(const SequenceTable& seq, double lambda1);

}  // namespace zeck
