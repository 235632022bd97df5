#include "zeck/tables.hpp"

#include <cmath>
#include <stdexcept>

namespace zeck {

namespace {

void add_entry(std::map<std::pair<int, int>, long long>& t, int i, int j, long long coef) {
  if (coef == 0) return;
  auto key = std::make_pair(i, j);
  auto [it, inserted] = t.try_emplace(key, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second == 0) t.erase(it);
  }
}

// Fills hat, the prefix sums d_i, c*, lambda1; checks hat_i >= 0.
void finalize(CoefficientTable& table, const Plrs& plrs) {
  table.hat.assign(static_cast<size_t>(table.i0), 0);
  int max_j = 0;
  for (const auto& [key, coef] : table.t) {
    table.hat[static_cast<size_t>(key.first - 1)] += coef;
    max_j = std::max(max_j, key.second);
  }
  for (long long h : table.hat)
    if (h < 0) throw std::logic_error("coefficient table: negative lag marginal");
  if (max_j > table.j0) throw std::logic_error("coefficient table: shift beyond j0");

  const int L = plrs.order();
  table.d.assign(static_cast<size_t>(L) + 1, 0);
  for (int i = 1; i <= L; ++i)
    table.d[static_cast<size_t>(i)] = table.d[static_cast<size_t>(i - 1)] + plrs.coeff(i);
  table.c_star = plrs.c;
  table.c_star.back() -= 1;
  table.lambda1 = dominant_root_of(table.hat);
}

}  // namespace

long long CoefficientTable::coef(int i, int j) const {
  auto it = t.find({i, j});
  return it == t.end() ? 0 : it->second;
}

double CoefficientTable::char_poly(double x) const { return char_poly_at(hat, x); }

CoefficientTable build_gap_table(const Plrs& plrs, int g) {
  if (!plrs.all_positive)
    throw std::invalid_argument("gap recurrence requires all c_i > 0");
  if (g < 0 || g > kMaxGapSize)
    throw std::invalid_argument("gap size must lie in [0, " +
                                std::to_string(kMaxGapSize) + "]");

  const int L = plrs.order();
  std::vector<long long> d(static_cast<size_t>(L) + 1, 0);
  for (int i = 1; i <= L; ++i)
    d[static_cast<size_t>(i)] = d[static_cast<size_t>(i - 1)] + plrs.coeff(i);

  CoefficientTable table;
  table.kind = TableKind::kGap;
  table.g = g;
  table.i0 = L + g;
  table.j0 = static_cast<int>(d[static_cast<size_t>(L)]);
  table.n0 = L + g;
  table.k0 = d[static_cast<size_t>(L)];

  if (g == 0) {
    // Lag i carries one unit at shift d_{i-1}-(i-1) plus one unit per extra
    // digit value j = 1..c_i-1 at shift d_{i-1}-(i-1)+(j-1).
    for (int i = 1; i <= L; ++i) {
      const long long base = d[static_cast<size_t>(i - 1)] - (i - 1);
      add_entry(table.t, i, static_cast<int>(base), 1);
      for (long long j = 1; j <= plrs.coeff(i) - 1; ++j)
        add_entry(table.t, i, static_cast<int>(base + (j - 1)), 1);
    }
  } else if (g == 1) {
    add_entry(table.t, 1, 0, 1);
    for (int i = 1; i <= L; ++i) add_entry(table.t, i, i - 1, plrs.coeff(i) - 1);
    for (int i = 2; i <= L; ++i) add_entry(table.t, i, i - 2, 1);
    for (int i = 1; i <= L; ++i) {
      const long long w = plrs.coeff(i) - 1;
      add_entry(table.t, i, i, w);
      add_entry(table.t, i, i - 1, -w);
      add_entry(table.t, i + 1, i, -w);
      add_entry(table.t, i + 1, i - 1, w);
    }
  } else {
    // c_i p_{n-i,k} plus the c*_i-weighted difference blocks at lags
    // i+g-1 and i+g.
    for (int i = 1; i <= L; ++i) {
      add_entry(table.t, i, 0, plrs.coeff(i));
      const long long w = (i < L) ? plrs.coeff(i) : plrs.coeff(i) - 1;
      add_entry(table.t, i + g - 1, 1, w);
      add_entry(table.t, i + g - 1, 0, -w);
      add_entry(table.t, i + g, 1, -w);
      add_entry(table.t, i + g, 0, w);
    }
  }

  finalize(table, plrs);
  return table;
}

CoefficientTable build_summand_table(const Plrs& plrs) {
  const int L = plrs.order();
  std::vector<long long> d(static_cast<size_t>(L) + 1, 0);
  for (int i = 1; i <= L; ++i)
    d[static_cast<size_t>(i)] = d[static_cast<size_t>(i - 1)] + plrs.coeff(i);

  CoefficientTable table;
  table.kind = TableKind::kSummands;
  table.i0 = L;
  table.j0 = static_cast<int>(d[static_cast<size_t>(L)]) - 1;
  table.n0 = L;
  table.k0 = d[static_cast<size_t>(L)];
  for (int i = 1; i <= L; ++i)
    for (long long j = d[static_cast<size_t>(i - 1)]; j <= d[static_cast<size_t>(i)] - 1; ++j)
      add_entry(table.t, i, static_cast<int>(j), 1);

  finalize(table, plrs);
  table.c_star.clear();  // gap-specific
  return table;
}

CoefficientTable make_custom_table(int i0, int j0,
                                   std::vector<std::tuple<int, int, long long>> entries,
                                   int n0) {
  if (i0 < 1 || j0 < 0) throw std::invalid_argument("make_custom_table: bad shape");
  CoefficientTable table;
  table.kind = TableKind::kCustom;
  table.i0 = i0;
  table.j0 = j0;
  table.n0 = n0;
  for (const auto& [i, j, coef] : entries) {
    if (i < 1 || i > i0 || j < 0 || j > j0)
      throw std::invalid_argument("make_custom_table: entry outside (i0, j0)");
    add_entry(table.t, i, j, coef);
  }
  table.hat.assign(static_cast<size_t>(i0), 0);
  for (const auto& [key, coef] : table.t)
    table.hat[static_cast<size_t>(key.first - 1)] += coef;
  for (long long h : table.hat)
    if (h < 0) throw std::invalid_argument("make_custom_table: negative lag marginal");
  table.lambda1 = dominant_root_of(table.hat);
  return table;
}

CoefficientTable binomial_table() {
  return make_custom_table(1, 1, {{1, 0, 1}, {1, 1, 1}}, 0);
}

}  // namespace zeck
