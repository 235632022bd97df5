#pragma once

#include <cstdint>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/convergence.hpp"
#include "zeck/tables.hpp"

namespace zeck {

enum class RowProvenance { kOracle, kEvolved };

/// Contiguous block of exact recurrence rows p_{n,.} for n = first_n,
/// first_n+1, ... together with the row sums Omega_n. Rows are dense from
/// k = 0 with trailing zeros trimmed; entries outside a stored row are zero.
struct RowTable {
  int first_n = 0;
  int seed_count = 0;  // leading rows that were supplied, not evolved
  std::vector<std::vector<Int>> rows;
  std::vector<Int> omega;
  std::vector<RowProvenance> provenance;

  int last_n() const { return first_n + static_cast<int>(rows.size()) - 1; }
  bool has(int n) const { return n >= first_n && n <= last_n(); }
  const std::vector<Int>& row(int n) const { return rows.at(static_cast<size_t>(n - first_n)); }
  const Int& omega_at(int n) const { return omega.at(static_cast<size_t>(n - first_n)); }
  RowProvenance provenance_at(int n) const { return provenance.at(static_cast<size_t>(n - first_n)); }
  /// p_{n,k} with the zero convention outside stored entries.
  Int entry(int n, long long k) const;

  void append(std::vector<Int> row_counts, RowProvenance prov);
  static RowTable from_rows(int first_n, std::vector<std::vector<Int>> rows,
                            RowProvenance prov = RowProvenance::kOracle);
};

/// Brute-force rows n0 .. n0+i0-1 for a gap/summand table, ready to evolve.
RowTable oracle_seed_rows(const CoefficientTable& table, const Plrs& plrs,
                          std::uint64_t budget = kDefaultEnumerationBudget);

/// Evolves the table to n_target, appending exact rows. Every computed entry
/// is checked non-negative (negative_entry_error otherwise) and Omega is
/// recomputed per row. Seeds must contain at least i0 rows.
RowTable evolve(const CoefficientTable& table, RowTable seeds, int n_target);

/// Probabilities p_{n,k} / Omega_n rounded from exact ratios.
struct Distribution {
  int n = 0;
  std::vector<double> probs;
};

Distribution distribution(const RowTable& rows, int n);

/// |Omega_{n-1}/Omega_n - 1/lambda1| with fitted geometric decay.
/// Requires at least 20 rows.
ConvergenceReport omega_ratio_series(const RowTable& rows, double lambda1);

}  // namespace zeck
