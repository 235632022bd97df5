#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

#include "zeck/errors.hpp"
#include "zeck/zeckendorf.hpp"

namespace zeck {

namespace {

// Counts for one gap size inside an interval. Only k >= 1 is tallied while
// walking; the k = 0 mass is whatever remains of the interval.
struct GapTally {
  std::vector<std::uint64_t> by_k;  // index k-1
  std::uint64_t total = 0;          // sum over M of k_g(M)

  void bump(int k) {
    if (static_cast<size_t>(k) > by_k.size()) by_k.resize(static_cast<size_t>(k), 0);
    ++by_k[static_cast<size_t>(k - 1)];
    total += static_cast<std::uint64_t>(k);
  }
};

std::vector<Int> to_row(const std::vector<std::uint64_t>& counts) {
  size_t last = counts.size();
  while (last > 0 && counts[last - 1] == 0) --last;
  std::vector<Int> row;
  row.reserve(last);
  for (size_t i = 0; i < last; ++i) row.emplace_back(counts[i]);
  return row;
}

}  // namespace

OracleRows enumerate_interval(const Plrs& plrs, int n, std::optional<int> g_arg,
                              std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("enumerate_interval: n must be >= 1");
  if (g_arg.has_value() && *g_arg < 0)
    throw std::invalid_argument("enumerate_interval: g must be >= 0");
  SequenceTable seq = sequence(plrs, n + 1);
  Int width_big = seq.g(n + 1) - seq.g(n);
  if (width_big > Int(budget))
    throw budget_error("enumerate_interval: interval width " + to_decimal(width_big) +
                       " exceeds budget " + std::to_string(budget));
  if (seq.g(n + 1) >= Int(std::numeric_limits<std::int64_t>::max()))
    throw budget_error("enumerate_interval: interval bounds exceed native range");

  const int L = plrs.order();
  std::vector<std::uint64_t> g_terms(static_cast<size_t>(n + 1));  // g_terms[m-1] = G_m
  for (int m = 1; m <= n + 1; ++m) g_terms[static_cast<size_t>(m - 1)] = seq.g(m).get_ui();
  const std::vector<long long>& caps = plrs.c;

  const std::uint64_t lo = g_terms[static_cast<size_t>(n - 1)];
  const std::uint64_t hi = g_terms[static_cast<size_t>(n)];
  const std::uint64_t width = hi - lo;

  std::vector<std::uint64_t> sigma_counts;
  std::uint64_t sigma_total = 0;
  std::vector<GapTally> gaps(static_cast<size_t>(n));  // gap sizes 0..n-1

  // Scratch for the gap multiset of one decomposition.
  std::vector<int> gap_scratch(static_cast<size_t>(n), 0);
  std::vector<int> touched;
  touched.reserve(static_cast<size_t>(n));
  auto add_gaps = [&](int gap, int count) {
    if (gap_scratch[static_cast<size_t>(gap)] == 0) touched.push_back(gap);
    gap_scratch[static_cast<size_t>(gap)] += count;
  };

  for (std::uint64_t m_val = lo; m_val < hi; ++m_val) {
    std::uint64_t rem = m_val;
    int r = 1;  // block position, as in decompose()
    long long k_sigma = 0;
    int prev_index = 0;
    touched.clear();

    for (int pos = n; pos >= 1; --pos) {
      const std::uint64_t term = g_terms[static_cast<size_t>(pos - 1)];
      const long long cap = caps[static_cast<size_t>(r - 1)];
      long long a = 0;
      if (rem >= term) {
        if (cap > 16) {
          a = std::min<long long>(static_cast<long long>(rem / term), cap);
          rem -= static_cast<std::uint64_t>(a) * term;
        } else {
          while (a < cap && rem >= term) {
            rem -= term;
            ++a;
          }
        }
      }
      if (a > 0) {
        k_sigma += a;
        if (prev_index > 0) add_gaps(prev_index - pos, 1);
        if (a >= 2) add_gaps(0, static_cast<int>(a) - 1);
        prev_index = pos;
      }
      if (a == cap) {
        ++r;
        if (r > L) {
          if (pos > 1)
            throw std::logic_error("enumerate_interval: complete block mid-string");
          r = 1;
        }
      } else {
        r = 1;
      }
    }
    if (rem != 0)
      throw std::logic_error("enumerate_interval: nonzero remainder in greedy walk");

    if (static_cast<size_t>(k_sigma) >= sigma_counts.size())
      sigma_counts.resize(static_cast<size_t>(k_sigma) + 1, 0);
    ++sigma_counts[static_cast<size_t>(k_sigma)];
    sigma_total += static_cast<std::uint64_t>(k_sigma);

    for (int gap : touched) {
      gaps[static_cast<size_t>(gap)].bump(gap_scratch[static_cast<size_t>(gap)]);
      gap_scratch[static_cast<size_t>(gap)] = 0;
    }
  }

  OracleRows out;
  out.n = n;
  out.omega = width_big;
  out.sigma_row = to_row(sigma_counts);
  out.sigma_total = Int(sigma_total);

  auto materialize = [&](int g) {
    if (g >= n) {  // no gap can reach n-1 summand indices apart
      out.gap_rows[g] = {out.omega};
      out.gap_totals[g] = 0;
      return;
    }
    const GapTally& tally = gaps[static_cast<size_t>(g)];
    std::uint64_t nonzero_mass = 0;
    for (std::uint64_t c : tally.by_k) nonzero_mass += c;
    std::vector<std::uint64_t> counts(tally.by_k.size() + 1);
    counts[0] = width - nonzero_mass;
    std::copy(tally.by_k.begin(), tally.by_k.end(), counts.begin() + 1);
    out.gap_rows[g] = to_row(counts);
    out.gap_totals[g] = Int(tally.total);
  };

  if (g_arg.has_value()) {
    materialize(*g_arg);
  } else {
    for (int g = 0; g < n; ++g)
      if (g == 0 || gaps[static_cast<size_t>(g)].total > 0) materialize(g);
  }
  return out;
}

}  // namespace zeck
