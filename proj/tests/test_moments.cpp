#include <doctest.h>

#include <cmath>

#include "zeck/asymptotics.hpp"

using namespace zeck;

namespace {

RowTable binomial_rows_to(int n) {
  return evolve(binomial_table(), RowTable::from_rows(0, {{Int(1)}}), n);
}

}  // namespace

TEST_CASE("binomial moments: mean n/2, variance n/4") {
  CoefficientTable t = binomial_table();
  RowTable rows = binomial_rows_to(120);
  MomentSeries s = moments_recursive(t, rows, 6, 120);
  for (int n = 1; n <= 120; ++n) {
    CHECK(std::abs(s.at(n).mean - n / 2.0) <= 1e-12 * std::max(1.0, n / 2.0));
    CHECK(std::abs(s.at(n).variance - n / 4.0) <= 1e-12 * std::max(1.0, n / 4.0));
  }
  CHECK(s.at(100).central[2] == doctest::Approx(25.0).epsilon(1e-12));
  CHECK(s.max_deviation <= 1e-9);
}

TEST_CASE("binomial standardized fourth moment is 3 - 2/n") {
  RowTable rows = binomial_rows_to(1000);
  MomentRow row = moments_direct(rows, 1000, 6);
  CHECK(std::abs(row.standardized[4] - (3.0 - 2.0 / 1000.0)) <= 1e-9);
  CHECK(std::abs(row.standardized[3]) <= 1e-12);  // symmetric
  CHECK(row.mean == doctest::Approx(500.0).epsilon(1e-12));
}

TEST_CASE("single-mass distribution has zero central moments") {
  RowTable rows = RowTable::from_rows(5, {{Int(0), Int(0), Int(9)}});
  MomentRow row = moments_direct(rows, 5, 6);
  CHECK(row.mean == doctest::Approx(2.0));
  for (int m = 1; m <= 6; ++m) CHECK(std::abs(row.central[m]) <= 1e-30);
  CHECK(std::isnan(row.standardized[3]));
}

TEST_CASE("direct moments from exact rows match the distribution path") {
  Plrs fib = build_plrs({1, 1});
  CoefficientTable t = build_summand_table(fib);
  RowTable rows = evolve(t, oracle_seed_rows(t, fib), 40);
  for (int n : {10, 20, 40}) {
    MomentRow hp = moments_direct(rows, n, 6);
    MomentRow fl = moments_direct(distribution(rows, n), 6);
    CHECK(std::abs(hp.mean - fl.mean) <= 1e-12 * std::max(1.0, std::abs(hp.mean)));
    for (int m = 2; m <= 6; ++m) {
      const double scale = std::max(1.0, std::abs(hp.central[m]));
      CHECK(std::abs(hp.central[m] - fl.central[m]) <= 1e-11 * scale);
    }
  }
}

TEST_CASE("recursive moments match the direct path") {
  struct Case {
    std::vector<long long> c;
    int g;
  };
  for (const Case& tc : {Case{{1, 1}, 2}, Case{{2, 1}, -1}, Case{{1, 1, 1}, 0}}) {
    Plrs p = build_plrs(tc.c);
    CoefficientTable t = tc.g >= 0 ? build_gap_table(p, tc.g) : build_summand_table(p);
    RowTable rows = evolve(t, oracle_seed_rows(t, p), 60);
    MomentSeries s = moments_recursive(t, rows, 6, 60);  // verifies internally
    CHECK(s.max_deviation <= 1e-9);
    for (const MomentRow& row : s.rows) {
      CHECK(row.central[0] == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(row.central[1]) <= 1e-12);
      CHECK(row.variance >= 0.0);
    }
  }
}

TEST_CASE("recursive mean matches the oracle empirical mean") {
  Plrs fib = build_plrs({1, 1});
  CoefficientTable t = build_summand_table(fib);
  RowTable rows = evolve(t, oracle_seed_rows(t, fib), 20);
  MomentSeries s = moments_recursive(t, rows, 2, 20);
  OracleRows o = enumerate_interval(fib, 20);
  const double empirical = exact_ratio(o.sigma_total, o.omega);
  CHECK(std::abs(s.at(20).mean - empirical) <= 1e-12 * empirical);
}

TEST_CASE("moments_recursive rejects bad arguments") {
  CoefficientTable t = binomial_table();
  RowTable rows = binomial_rows_to(30);
  CHECK_THROWS_AS(moments_recursive(t, rows, 6, 50), std::invalid_argument);
  CHECK_THROWS_AS(moments_recursive(t, rows, 1, 20), std::invalid_argument);
}

TEST_CASE("fit_linear_asymptote on exact and asymptotic series") {
  std::vector<double> line;
  for (int n = 0; n < 60; ++n) line.push_back(3.0 * n + 1.0);
  LinearFit f = fit_linear_asymptote(line, 0, 10, 55);
  CHECK(f.slope == doctest::Approx(3.0).epsilon(1e-13));
  CHECK(f.intercept == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(f.max_abs_residual <= 1e-10);
  CHECK(f.residuals_decaying);

  RowTable rows = binomial_rows_to(120);
  MomentSeries s = moments_recursive(binomial_table(), rows, 2, 120);
  LinearFit mu = fit_linear_asymptote(s.mean_series(), s.first_n, 20, 120);
  CHECK(mu.slope == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(mu.intercept) <= 1e-12);

  CHECK_THROWS_AS(fit_linear_asymptote(line, 0, 10, 15), std::invalid_argument);
}

TEST_CASE("fibonacci summand mean slope approaches its constant") {
  Plrs fib = build_plrs({1, 1});
  CoefficientTable t = build_summand_table(fib);
  RowTable rows = evolve(t, oracle_seed_rows(t, fib), 160);
  RecursiveOptions opts;
  opts.with_ks = false;
  MomentSeries s = moments_recursive(t, rows, 2, 160, opts);
  LinearFit mu = fit_linear_asymptote(s.mean_series(), s.first_n, 60, 160);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  CHECK(std::abs(mu.slope - 1.0 / (phi + 2.0)) <= 1e-6);
}

TEST_CASE("clt diagnostics for the binomial rows") {
  RowTable rows = binomial_rows_to(1000);
  RecursiveOptions opts;
  opts.verify_up_to = 200;  // keep the cross-check affordable
  MomentSeries s = moments_recursive(binomial_table(), rows, 6, 1000, opts);
  CHECK(s.max_deviation <= 1e-9);

  // Degenerate variance at n=0 (single seed row) is rejected.
  CHECK_THROWS_AS(clt_diagnostics(s, 6), std::invalid_argument);

  MomentSeries tail = s;
  tail.first_n = 2;
  tail.rows.erase(tail.rows.begin(), tail.rows.begin() + 2);
  CltDiagnostics diag = clt_diagnostics(tail, 6);
  CHECK(diag.deviations_at(1000)[4] == doctest::Approx(2.0 / 1000.0).epsilon(1e-6));
  CHECK(diag.deviations_at(1000)[3] <= 1e-12);
  CHECK(diag.deviations_at(1000)[6] <= 0.05);
  // KS shrinks as the rows widen.
  CHECK(diag.ks_at(1000) < diag.ks_at(100));
  CHECK(diag.ks_at(1000) <= 0.01);
}

TEST_CASE("sigma = 0 rows are rejected by ks") {
  RowTable rows = RowTable::from_rows(4, {{Int(3)}});
  CHECK_THROWS_AS(ks_to_normal(distribution(rows, 4), 0.0, 0.0), std::invalid_argument);
}

TEST_CASE("double factorial values") {
  CHECK(double_factorial(-1) == 1.0);
  CHECK(double_factorial(1) == 1.0);
  CHECK(double_factorial(3) == 3.0);
  CHECK(double_factorial(5) == 15.0);
  CHECK(double_factorial(7) == 105.0);
}

TEST_CASE("leading-coefficient fits recover the even-moment growth") {
  RowTable rows = binomial_rows_to(400);
  RecursiveOptions opts;
  opts.verify_against_direct = false;
  opts.with_ks = false;
  MomentSeries s = moments_recursive(binomial_table(), rows, 6, 400, opts);

  // Variance slope: leading coefficient of central[2] is C_sigma itself.
  LeadingCoefCheck m1 = double_factorial_check(s, 0.25, 1, 200, 400);
  CHECK(m1.fitted == doctest::Approx(0.25).epsilon(1e-10));

  // Fourth central moment of Binomial(n,1/2) is 3(n/4)^2 - n/8.
  LeadingCoefCheck m2 = double_factorial_check(s, 0.25, 2, 200, 400);
  CHECK(m2.fitted == doctest::Approx(3.0 / 16.0).epsilon(1e-8));
  CHECK(m2.expected == doctest::Approx(3.0 * 0.25 * 0.25));
  CHECK(m2.rel_error <= 1e-8);
}
