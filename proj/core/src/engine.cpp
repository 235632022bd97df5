#include "zeck/engine.hpp"

#include <cmath>
#include <stdexcept>

#include "zeck/errors.hpp"

namespace zeck {

Int RowTable::entry(int n, long long k) const {
  if (!has(n) || k < 0) return 0;
  const auto& r = row(n);
  if (k >= static_cast<long long>(r.size())) return 0;
  return r[static_cast<size_t>(k)];
}

void RowTable::append(std::vector<Int> row_counts, RowProvenance prov) {
  while (!row_counts.empty() && row_counts.back() == 0) row_counts.pop_back();
  Int om = 0;
  for (const Int& v : row_counts) om += v;
  rows.push_back(std::move(row_counts));
  omega.push_back(std::move(om));
  provenance.push_back(prov);
}

RowTable RowTable::from_rows(int first_n, std::vector<std::vector<Int>> seed_rows,
                             RowProvenance prov) {
  RowTable t;
  t.first_n = first_n;
  for (auto& r : seed_rows) t.append(std::move(r), prov);
  t.seed_count = static_cast<int>(t.rows.size());
  return t;
}

RowTable oracle_seed_rows(const CoefficientTable& table, const Plrs& plrs,
                          std::uint64_t budget) {
  std::vector<std::vector<Int>> seeds;
  seeds.reserve(static_cast<size_t>(table.i0));
  for (int n = table.n0; n < table.n0 + table.i0; ++n) {
    OracleRows o = enumerate_interval(
        plrs, n,
        table.kind == TableKind::kGap ? std::optional<int>(table.g) : std::nullopt,
        budget);
    seeds.push_back(table.kind == TableKind::kGap ? o.gap_row(table.g)
                                                  : std::move(o.sigma_row));
  }
  return RowTable::from_rows(table.n0, std::move(seeds), RowProvenance::kOracle);
}

RowTable evolve(const CoefficientTable& table, RowTable rt, int n_target) {
  if (static_cast<int>(rt.rows.size()) < table.i0)
    throw std::invalid_argument("evolve: need at least i0 seed rows");

  for (int n = rt.last_n() + 1; n <= n_target; ++n) {
    size_t len = 0;
    for (const auto& [key, coef] : table.t) {
      const auto& src = rt.row(n - key.first);
      if (!src.empty())
        len = std::max(len, src.size() + static_cast<size_t>(key.second));
    }
    std::vector<Int> out(len, Int(0));
    for (const auto& [key, coef] : table.t) {
      const auto& src = rt.row(n - key.first);
      const size_t j = static_cast<size_t>(key.second);
      if (coef > 0) {
        const unsigned long c = static_cast<unsigned long>(coef);
        for (size_t k = 0; k < src.size(); ++k)
          mpz_addmul_ui(out[k + j].get_mpz_t(), src[k].get_mpz_t(), c);
      } else {
        const unsigned long c = static_cast<unsigned long>(-coef);
        for (size_t k = 0; k < src.size(); ++k)
          mpz_submul_ui(out[k + j].get_mpz_t(), src[k].get_mpz_t(), c);
      }
    }
    for (size_t k = 0; k < out.size(); ++k) {
      if (out[k] < 0)
        throw negative_entry_error("evolve: negative count at n=" + std::to_string(n) +
                                   " k=" + std::to_string(k));
    }
    rt.append(std::move(out), RowProvenance::kEvolved);
  }
  return rt;
}

Distribution distribution(const RowTable& rows, int n) {
  if (!rows.has(n)) throw std::invalid_argument("distribution: row not present");
  const Int& om = rows.omega_at(n);
  if (om == 0) throw std::invalid_argument("distribution: degenerate row, Omega = 0");
  Distribution d;
  d.n = n;
  const auto& r = rows.row(n);
  d.probs.reserve(r.size());
  for (const Int& v : r) d.probs.push_back(exact_ratio(v, om));
  return d;
}

ConvergenceReport omega_ratio_series(const RowTable& rows, double lambda1) {
  if (rows.rows.size() < 20)
    throw std::invalid_argument("omega_ratio_series: need at least 20 rows");
  const double target = 1.0 / lambda1;
  std::vector<double> errors;
  errors.reserve(rows.rows.size() - 1);
  for (int n = rows.first_n + 1; n <= rows.last_n(); ++n)
    errors.push_back(std::abs(exact_ratio(rows.omega_at(n - 1), rows.omega_at(n)) - target));
  return make_convergence_report(rows.first_n + 1, std::move(errors));
}

}  // namespace zeck
