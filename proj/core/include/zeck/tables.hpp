#pragma once

#include <cstdint>
#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "zeck/plrs.hpp"
#include "zeck/zeckendorf.hpp"

namespace zeck {

enum class TableKind { kGap, kSummands, kCustom };

/// Weights of a two-dimensional recurrence p_{n,k} = sum t_{i,j} p_{n-i,k-j}
/// over lags 1..i0 and shifts 0..j0. Entries may be negative; the lag
/// marginals hat_i = sum_j t_{i,j} never are.
struct CoefficientTable {
  TableKind kind = TableKind::kCustom;
  int g = -1;     // gap size for kind == kGap
  int i0 = 0;     // max lag
  int j0 = 0;     // max shift
  int n0 = 0;     // first n where the recurrence is asserted valid
  long long k0 = 0;  // metadata: first k with asserted validity
  std::map<std::pair<int, int>, long long> t;  // nonzero coefficients only
  std::vector<long long> hat;     // hat[i-1] = sum_j t_{i,j}
  std::vector<long long> d;       // prefix sums d_0..d_L (gap/summand tables)
  std::vector<long long> c_star;  // c*_i = c_i (i < L), c_L - 1 (gap tables)
  double lambda1 = 0.0;           // dominant root of the hat polynomial

  long long coef(int i, int j) const;
  /// x^{i0} - sum_i hat_i x^{i0-i}.
  double char_poly(double x) const;
};

inline constexpr int kMaxGapSize = 16;

/// Coefficient table for the gap-count recurrence at gap size g (0 <= g <=
/// kMaxGapSize). Requires every c_i >= 1; i0 = L+g, j0 = d_L, n0 = L+g.
CoefficientTable build_gap_table(const Plrs& plrs, int g);

/// Coefficient table for the summand-count recurrence: t_{i,j} = 1 exactly
/// when d_{i-1} <= j <= d_i - 1. Valid for any Plrs; i0 = L, j0 = d_L - 1,
/// n0 = L.
CoefficientTable build_summand_table(const Plrs& plrs);

/// Free-form table for calibration runs and tests. Entries are (i, j, t_ij).
CoefficientTable make_custom_table(int i0, int j0,
                                   std::vector<std::tuple<int, int, long long>> entries,
                                   int n0 = 0);

/// The i0=1, t_{1,0}=t_{1,1}=1 table whose rows are the binomial rows.
CoefficientTable binomial_table();

/// One brute-force-vs-recurrence discrepancy.
struct Mismatch {
  int n = 0;
  long long k = 0;
  Int oracle;
  Int evolved;
};

struct ValidationReport {
  Plrs plrs;
  TableKind kind = TableKind::kCustom;
  int g = -1;
  int n0 = 0;
  int i0 = 0;
  int depth = 0;
  int rows_compared = 0;
  long long entries_compared = 0;
  std::vector<Mismatch> mismatches;  // at most kMaxRecorded are kept
  long long mismatch_count = 0;

  static constexpr int kMaxRecorded = 32;
  bool ok() const { return mismatch_count == 0; }
};

/// Seeds the recurrence with i0 oracle rows starting at n0, evolves it to
/// `depth`, and compares every entry of every evolved row against the
/// brute-force row. Mismatches are reported, not thrown.
ValidationReport validate_table(const CoefficientTable& table, const Plrs& plrs,
                                int depth,
                                std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace zeck
