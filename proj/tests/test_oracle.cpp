#include <doctest.h>

#include <map>
#include <vector>

#include "zeck/errors.hpp"
#include "zeck/zeckendorf.hpp"

using namespace zeck;

namespace {

std::vector<long long> small(const std::vector<Int>& row) {
  std::vector<long long> v;
  for (const Int& x : row) v.push_back(x.get_si());
  return v;
}

// Tally of k_g over an explicit integer range, through the public
// decomposition API only. Used as the second, slower route.
std::map<long long, long long> tally_range(const Plrs& p, const Int& lo, const Int& hi, int g) {
  std::map<long long, long long> counts;
  for (Int m = lo; m < hi; ++m) {
    GapProfile gp = gap_profile(decompose(m, p));
    counts[gp.count(g)] += 1;
  }
  return counts;
}

// Cached per-interval oracle rows p_{g,n,.} for n = 1..depth.
struct OracleCache {
  Plrs plrs;
  std::vector<OracleRows> rows;  // index n-1

  OracleCache(const Plrs& p, int depth) : plrs(p) {
    for (int n = 1; n <= depth; ++n) rows.push_back(enumerate_interval(p, n));
  }
  Int p_at(int n, int g, long long k) const {
    if (n < 1 || k < 0) return 0;
    std::vector<Int> row = rows.at(static_cast<size_t>(n - 1)).gap_row(g);
    if (k >= static_cast<long long>(row.size())) return 0;
    return row[static_cast<size_t>(k)];
  }
  // Counts over [0, G_n) with the empty decomposition counted at k = 0.
  Int q0_at(int n, int g, long long k) const {
    Int total = (k == 0) ? 1 : 0;
    for (int i = 1; i < n; ++i) total += p_at(i, g, k);
    return total;
  }
};

}  // namespace

TEST_CASE("hand-tallied golden rows") {
  Plrs fib = build_plrs({1, 1});
  // [G_8, G_9) = [34, 55), gap size 2, tallied by hand over all 21 integers.
  CHECK(small(enumerate_interval(fib, 8, 2).gap_row(2)) ==
        std::vector<long long>{9, 7, 4, 1});
  // Summand counts over [G_5, G_6) = [8, 13).
  CHECK(small(enumerate_interval(fib, 5).sigma_row) == std::vector<long long>{0, 1, 3, 1});
  // No gaps of size 1 ever appear for the Fibonacci rule.
  CHECK(small(enumerate_interval(fib, 5, 1).gap_row(1)) == std::vector<long long>{5});

  Plrs two_one = build_plrs({2, 1});
  // [G_3, G_4) = [7, 17), gap size 1, tallied by hand.
  CHECK(small(enumerate_interval(two_one, 3, 1).gap_row(1)) ==
        std::vector<long long>{6, 2, 2});
}

TEST_CASE("row sums equal the interval width") {
  for (const auto& c : {std::vector<long long>{1, 1}, {2, 1}, {1, 2}, {1, 1, 1}, {2, 1, 1}}) {
    Plrs p = build_plrs(c);
    for (int n = 1; n <= 12; ++n) {
      OracleRows o = enumerate_interval(p, n);
      Int sigma_sum = 0;
      for (const Int& v : o.sigma_row) sigma_sum += v;
      CHECK(sigma_sum == o.omega);
      for (const auto& [g, row] : o.gap_rows) {
        Int s = 0;
        for (const Int& v : row) s += v;
        CHECK(s == o.omega);
      }
    }
  }
}

TEST_CASE("tallied rows and running totals agree") {
  // Mean computed two ways: sum_k k*p_{g,n,k} versus the accumulated total
  // of k_g over the walk. Exact integer equality.
  Plrs trib = build_plrs({1, 1, 1});
  for (int n = 4; n <= 14; ++n) {
    OracleRows o = enumerate_interval(trib, n);
    for (const auto& [g, row] : o.gap_rows) {
      Int weighted = 0;
      for (size_t k = 0; k < row.size(); ++k) weighted += Int(k) * row[k];
      CHECK(weighted == o.gap_totals.at(g));
    }
    Int sigma_weighted = 0;
    for (size_t k = 0; k < o.sigma_row.size(); ++k) sigma_weighted += Int(k) * o.sigma_row[k];
    CHECK(sigma_weighted == o.sigma_total);
  }
}

TEST_CASE("single-g runs match the all-gap run") {
  Plrs p = build_plrs({2, 1, 1});
  OracleRows all = enumerate_interval(p, 9);
  for (int g : {0, 1, 2, 3, 8}) {
    OracleRows one = enumerate_interval(p, 9, g);
    CHECK(one.gap_row(g) == all.gap_row(g));
    CHECK(one.sigma_row == all.sigma_row);
  }
}

TEST_CASE("fast enumeration agrees with per-integer decomposition") {
  for (const auto& c : {std::vector<long long>{2, 1}, {1, 1, 1}}) {
    Plrs p = build_plrs(c);
    SequenceTable t = sequence(p, 9);
    OracleRows o = enumerate_interval(p, 7);
    for (int g : {0, 1, 2, 3}) {
      auto slow = tally_range(p, t.g(7), t.g(8), g);
      std::vector<Int> row = o.gap_row(g);
      for (size_t k = 0; k < row.size(); ++k) {
        long long expect = slow.count(static_cast<long long>(k))
                               ? slow[static_cast<long long>(k)]
                               : 0;
        CHECK(row[k] == to_int(expect));
      }
    }
  }
}

TEST_CASE("enumeration budget is enforced") {
  Plrs fib = build_plrs({1, 1});
  CHECK_THROWS_AS(enumerate_interval(fib, 40, std::nullopt, 1000), budget_error);
  CHECK_NOTHROW(enumerate_interval(fib, 12, std::nullopt, 1000));
}

TEST_CASE("interval partition shape and bounds") {
  Plrs fib = build_plrs({1, 1});
  IntervalPartition part = interval_partition(fib, 6);
  REQUIRE(part.parts.size() == 1);  // c_1 + c_2 - 1
  CHECK(part.parts[0].i == 1);
  CHECK(part.parts[0].j == 0);
  CHECK(part.parts[0].lo == 13);
  CHECK(part.parts[0].hi == 21);

  Plrs two_one = build_plrs({2, 1});
  IntervalPartition p2 = interval_partition(two_one, 5);
  REQUIRE(p2.parts.size() == 2);
  CHECK(p2.parts[0].i == 0);
  CHECK(p2.parts[0].j == 1);
  CHECK(p2.parts[0].lo == 41);   // G_5
  CHECK(p2.parts[0].hi == 82);   // 2 G_5
  CHECK(p2.parts[1].i == 1);
  CHECK(p2.parts[1].lo == 82);
  CHECK(p2.parts[1].hi == 99);   // G_6

  CHECK_THROWS_AS(interval_partition(fib, 2), std::invalid_argument);
}

TEST_CASE("interval partition covers [G_n, G_n+1) contiguously") {
  for (const auto& c : {std::vector<long long>{1, 1}, {2, 1}, {1, 2}, {2, 1, 1}, {1, 1, 1}}) {
    Plrs p = build_plrs(c);
    long long expected_parts = p.coeff_sum() - 1;
    for (int n = p.order() + 1; n <= p.order() + 4; ++n) {
      SequenceTable t = sequence(p, n + 1);
      IntervalPartition part = interval_partition(p, n);
      CHECK(static_cast<long long>(part.parts.size()) == expected_parts);
      Int cursor = t.g(n);
      for (size_t idx = 0; idx < part.parts.size(); ++idx) {
        CHECK(part.parts[idx].lo == cursor);
        CHECK(part.parts[idx].hi > part.parts[idx].lo);
        if (idx > 0) {
          // lexicographic (i, j) order
          const auto& prev = part.parts[idx - 1];
          const auto& cur = part.parts[idx];
          CHECK((cur.i > prev.i || (cur.i == prev.i && cur.j > prev.j)));
        }
        cursor = part.parts[idx].hi;
      }
      CHECK(cursor == t.g(n + 1));
    }
  }
}

TEST_CASE("per-interval counts match the cumulative/row expansion") {
  // For each cell of the partition the count of {M : k_g(M) = k} must equal
  // the expression in the interval casework, with q taken over [0, G) so the
  // empty tail is counted at k = 0.
  struct Case {
    std::vector<long long> c;
    int n_lo, n_hi;
  };
  for (const Case& tc : {Case{{1, 1}, 6, 9}, Case{{2, 1}, 4, 6}, Case{{1, 1, 1}, 5, 7},
                         Case{{1, 2}, 4, 6}}) {
    Plrs p = build_plrs(tc.c);
    OracleCache cache(p, tc.n_hi);
    for (int n = tc.n_lo; n <= tc.n_hi; ++n) {
      IntervalPartition part = interval_partition(p, n);
      for (const auto& cell : part.parts) {
        const int i = cell.i;
        const int j = cell.j;
        const long long d_i = [&] {
          long long s = 0;
          for (int x = 1; x <= i; ++x) s += p.coeff(x);
          return s;
        }();
        for (int g : {0, 1, 2, 3}) {
          auto direct = tally_range(p, cell.lo, cell.hi, g);
          long long k_max = 0;
          for (const auto& [k, cnt] : direct) k_max = std::max(k_max, k);
          for (long long k = 0; k <= k_max + 2; ++k) {
            Int expect;
            if (j == 0) {
              if (g == 0)
                expect = cache.q0_at(n - i, 0, k - (d_i - i));
              else if (g == 1)
                expect = cache.q0_at(n - i, 1, k - (i - 1));
              else
                expect = cache.q0_at(n - i, g, k) + cache.p_at(n + 1 - i - g, g, k - 1) -
                         cache.p_at(n + 1 - i - g, g, k);
            } else {
              if (g == 0)
                expect = cache.q0_at(n - i, 0, k - (d_i - i + (j - 1)));
              else if (g == 1)
                expect = cache.q0_at(n - i, 1, k - i) + cache.p_at(n - i - 1, 1, k - i - 1) -
                         cache.p_at(n - i - 1, 1, k - i);
              else
                expect = cache.q0_at(n - i, g, k) + cache.p_at(n - i - g, g, k - 1) -
                         cache.p_at(n - i - g, g, k);
            }
            const long long got = direct.count(k) ? direct[k] : 0;
            CHECK(expect == to_int(got));
          }
        }
      }
    }
  }
}

TEST_CASE("cumulative rows match enumeration of [1, G_n)") {
  for (const auto& c : {std::vector<long long>{1, 1}, {1, 1, 1}}) {
    Plrs p = build_plrs(c);
    const int n = 7;
    OracleCache cache(p, n - 1);
    SequenceTable t = sequence(p, n);
    for (int g : {0, 1, 2, 3}) {
      auto direct = tally_range(p, 1, t.g(n), g);
      long long k_max = 0;
      for (const auto& [k, cnt] : direct) k_max = std::max(k_max, k);
      for (long long k = 0; k <= k_max + 2; ++k) {
        Int q = 0;
        for (int i = 1; i < n; ++i) q += cache.p_at(i, g, k);
        CHECK(q == to_int(direct.count(k) ? direct[k] : 0));
      }
    }
  }
}
