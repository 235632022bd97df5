#include <doctest.h>

#include <cmath>
#include <random>

#include "zeck/engine.hpp"
#include "zeck/tables.hpp"

using namespace zeck;

namespace {

// Applies the table's recurrence to raw oracle history (rows at n < 1 are
// zero) and compares with the oracle row itself. Checked from n0 + 1: at the
// boundary row n0 itself the claim only covers k >= k0, and small-k entries
// do fail there for some recurrences (e.g. (1,3,3) with g = 0).
void check_recurrence_on_history(const CoefficientTable& t, const Plrs& p, int n_hi) {
  std::vector<OracleRows> hist;
  for (int n = 1; n <= n_hi; ++n) hist.push_back(enumerate_interval(p, n));
  auto p_at = [&](int n, long long k) -> Int {
    if (n < 1 || k < 0 || n > n_hi) return 0;
    std::vector<Int> row = t.kind == TableKind::kGap ? hist[static_cast<size_t>(n - 1)].gap_row(t.g)
                                                     : hist[static_cast<size_t>(n - 1)].sigma_row;
    if (k >= static_cast<long long>(row.size())) return 0;
    return k < static_cast<long long>(row.size()) ? row[static_cast<size_t>(k)] : Int(0);
  };
  for (int n = t.n0; n <= n_hi; ++n) {
    const long long k_hi = 3 + 2 * n;  // beyond any support at this depth
    for (long long k = 0; k <= k_hi; ++k) {
      Int rhs = 0;
      for (const auto& [key, coef] : t.t)
        rhs += to_int(coef) * p_at(n - key.first, k - key.second);
      CHECK(p_at(n, k) == rhs);
    }
  }
}

}  // namespace

TEST_CASE("Fibonacci gap-2 table entries") {
  CoefficientTable t = build_gap_table(build_plrs({1, 1}), 2);
  CHECK(t.i0 == 4);
  CHECK(t.j0 == 2);
  CHECK(t.n0 == 4);
  CHECK(t.k0 == 2);
  CHECK(t.t.size() == 4);
  CHECK(t.coef(1, 0) == 1);
  CHECK(t.coef(2, 1) == 1);
  CHECK(t.coef(3, 0) == 1);
  CHECK(t.coef(3, 1) == -1);
  CHECK(t.coef(2, 0) == 0);
  CHECK(t.hat == std::vector<long long>{1, 1, 0, 0});
}

TEST_CASE("summand table entries") {
  CoefficientTable fib = build_summand_table(build_plrs({1, 1}));
  CHECK(fib.i0 == 2);
  CHECK(fib.j0 == 1);
  CHECK(fib.t.size() == 2);
  CHECK(fib.coef(1, 0) == 1);
  CHECK(fib.coef(2, 1) == 1);

  CoefficientTable t21 = build_summand_table(build_plrs({2, 1}));
  CHECK(t21.coef(1, 0) == 1);
  CHECK(t21.coef(1, 1) == 1);
  CHECK(t21.coef(2, 2) == 1);
  CHECK(t21.t.size() == 3);
  CHECK(t21.hat == std::vector<long long>{2, 1});

  // Zero coefficients inside the recurrence leave empty shift ranges.
  CoefficientTable holes = build_summand_table(build_plrs({1, 0, 1}));
  CHECK(holes.coef(1, 0) == 1);
  CHECK(holes.coef(3, 1) == 1);
  CHECK(holes.t.size() == 2);
  CHECK(holes.hat == std::vector<long long>{1, 0, 1});
}

TEST_CASE("gap tables require positive coefficients, summand tables do not") {
  CHECK_THROWS_WITH_AS(build_gap_table(build_plrs({1, 0, 1}), 2),
                       "gap recurrence requires all c_i > 0", std::invalid_argument);
  CHECK_NOTHROW(build_summand_table(build_plrs({1, 0, 1})));
  CHECK_THROWS_AS(build_gap_table(build_plrs({1, 1}), -1), std::invalid_argument);
  CHECK_THROWS_AS(build_gap_table(build_plrs({1, 1}), kMaxGapSize + 1), std::invalid_argument);
}

TEST_CASE("lag marginals equal the recurrence coefficients") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> order(1, 4), coef(1, 3), gap(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long long> c(static_cast<size_t>(order(rng)));
    for (auto& ci : c) ci = coef(rng);
    long long sum = 0;
    for (long long ci : c) sum += ci;
    if (sum < 2) continue;
    Plrs p = build_plrs(c);
    const int g = gap(rng);
    CoefficientTable t = build_gap_table(p, g);
    REQUIRE(static_cast<int>(t.hat.size()) == t.i0);
    for (int i = 1; i <= p.order(); ++i)
      CHECK(t.hat[static_cast<size_t>(i - 1)] == p.coeff(i));
    for (int i = p.order() + 1; i <= t.i0; ++i)
      CHECK(t.hat[static_cast<size_t>(i - 1)] == 0);

    CoefficientTable s = build_summand_table(p);
    for (int i = 1; i <= p.order(); ++i)
      CHECK(s.hat[static_cast<size_t>(i - 1)] == p.coeff(i));

    // The table's own root matches the recurrence's dominant root.
    const double lambda = dominant_root(p).lambda1;
    CHECK(std::abs(t.char_poly(lambda)) <= 1e-10);
    CHECK(std::abs(s.char_poly(lambda)) <= 1e-10);
    CHECK(std::abs(t.lambda1 - lambda) <= 1e-12);
  }
}

TEST_CASE("validate_table finds zero mismatches on the suite") {
  struct Case {
    std::vector<long long> c;
    int g;  // -1 for summands
    int depth;
  };
  for (const Case& tc : {Case{{1, 1}, 2, 25}, Case{{1, 1, 1}, -1, 20},
                         Case{{1, 1}, 1, 25}, Case{{1, 0, 1}, -1, 16},
                         Case{{1, 2}, 3, 14}, Case{{2, 1, 1}, 0, 12}}) {
    Plrs p = build_plrs(tc.c);
    CoefficientTable t = tc.g >= 0 ? build_gap_table(p, tc.g) : build_summand_table(p);
    ValidationReport rep = validate_table(t, p, tc.depth);
    CHECK(rep.ok());
    CHECK(rep.rows_compared == tc.depth - t.n0 - t.i0 + 1);
    CHECK(rep.mismatch_count == 0);
  }
}

TEST_CASE("validate_table keeps the no-size-1-gap law for Fibonacci") {
  Plrs fib = build_plrs({1, 1});
  CoefficientTable t = build_gap_table(fib, 1);
  ValidationReport rep = validate_table(t, fib, 25);
  CHECK(rep.ok());
  for (int n = 1; n <= 25; ++n) {
    std::vector<Int> row = enumerate_interval(fib, n, 1).gap_row(1);
    REQUIRE(row.size() == 1);  // all mass at k = 0
  }
}

TEST_CASE("validate_table reports a doctored table") {
  Plrs fib = build_plrs({1, 1});
  CoefficientTable t = build_summand_table(fib);
  t.t[{2, 1}] = 0;
  t.t[{2, 0}] = 1;  // wrong shift; marginals still fine
  t.hat = {1, 1};
  ValidationReport rep = validate_table(t, fib, 14);
  CHECK_FALSE(rep.ok());
  CHECK(rep.mismatch_count > 0);
  CHECK(!rep.mismatches.empty());
}

TEST_CASE("recurrence holds against raw oracle history") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> order(1, 3), coef(1, 3), gap(0, 4);
  int done = 0;
  while (done < 10) {
    std::vector<long long> c(static_cast<size_t>(order(rng)));
    for (auto& ci : c) ci = coef(rng);
    long long sum = 0;
    for (long long ci : c) sum += ci;
    if (sum < 2) continue;
    Plrs p = build_plrs(c);
    const int g = gap(rng);
    CoefficientTable t = build_gap_table(p, g);
    const int depth = std::min(t.n0 + t.i0 + 3, 12);
    if (sequence(p, depth + 1).g(depth + 1) > 200000) continue;
    check_recurrence_on_history(t, p, depth);
    check_recurrence_on_history(build_summand_table(p), p, depth);
    ++done;
  }
}

TEST_CASE("custom tables validate their shape") {
  CoefficientTable b = binomial_table();
  CHECK(b.i0 == 1);
  CHECK(b.j0 == 1);
  CHECK(b.lambda1 == doctest::Approx(2.0).epsilon(1e-14));
  CHECK_THROWS_AS(make_custom_table(1, 1, {{2, 0, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(make_custom_table(1, 1, {{1, 0, -1}}, 0), std::invalid_argument);
}
