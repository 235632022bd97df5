#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zeck/bigint.hpp"
#include "zeck/plrs.hpp"

namespace zeck {

/// The unique legal decomposition M = sum_i a_i G_{N+1-i}. digits[0] is a_1,
/// the coefficient of the largest term G_N, and is always positive.
/// summand_indices lists the index of every summand, largest first, with an
/// index repeated once per unit of its digit.
struct Decomposition {
  Int value;
  std::vector<int> digits;
  std::vector<int> summand_indices;

  int top_index() const { return static_cast<int>(digits.size()); }  // N
  long long k_sigma() const { return static_cast<long long>(summand_indices.size()); }
  bool single_summand() const { return summand_indices.size() == 1; }
};

/// Greedy legal decomposition of M >= 1.
Decomposition decompose(const Int& m, const Plrs& plrs);

/// Legality scanner for a digit string (empty strings are vacuously legal,
/// leading zeros are not). Digits are matched against the coefficient block
/// c_1, c_2, ...: a digit equal to its block cap extends the block, a smaller
/// digit terminates it, and the scan restarts after any run of zeros.
bool is_legal(const std::vector<int>& digits, const Plrs& plrs);

/// sum_i digits[i-1] * G_{N+1-i}; the sequence table must hold at least
/// N = digits.size() terms.
Int reconstruct(const std::vector<int>& digits, const SequenceTable& seq);

/// Gap multiset of a decomposition: gap_counts[g] is the number of adjacent
/// summand-index differences equal to g.
struct GapProfile {
  std::map<int, long long> gap_counts;
  long long total_summands = 0;  // k_sigma

  long long count(int g) const {
    auto it = gap_counts.find(g);
    return it == gap_counts.end() ? 0 : it->second;
  }
};

GapProfile gap_profile(const Decomposition& d);

/// The canonical split of [G_n, G_{n+1}) into c_1 + ... + c_L - 1 integer
/// intervals, ordered lexicographically by (i, j). Requires n > L.
struct IntervalPartition {
  struct Part {
    int i = 0;
    int j = 0;
    Int lo;  // inclusive
    Int hi;  // exclusive
  };
  int n = 0;
  std::vector<Part> parts;
};

IntervalPartition interval_partition(const Plrs& plrs, int n);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 10'000'000;

/// Brute-force tallies over one interval [G_n, G_{n+1}).
struct OracleRows {
  int n = 0;
  Int omega;                                // G_{n+1} - G_n
  std::vector<Int> sigma_row;               // k -> #{M : k_sigma(M) = k}
  std::map<int, std::vector<Int>> gap_rows; // g -> (k -> #{M : k_g(M) = k})
  Int sigma_total;                          // sum over M of k_sigma(M)
  std::map<int, Int> gap_totals;            // g -> sum over M of k_g(M)

  /// Row for a gap size, materializing the all-mass-at-zero row for sizes
  /// that never occur in the interval.
  std::vector<Int> gap_row(int g) const;
};

/// Decomposes every M in [G_n, G_{n+1}) and tallies gap counts and summand
/// counts. With a specific g only that row is returned (the summand row is
/// always included); with std::nullopt every occurring gap size is kept.
/// Throws budget_error when the interval is wider than the budget.
OracleRows enumerate_interval(const Plrs& plrs, int n,
                              std::optional<int> g = std::nullopt,
                              std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace zeck
