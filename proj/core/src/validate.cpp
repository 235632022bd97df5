#include <optional>

#include "zeck/engine.hpp"
#include "zeck/tables.hpp"

namespace zeck {

ValidationReport validate_table(const CoefficientTable& table, const Plrs& plrs,
                                int depth, std::uint64_t budget) {
  ValidationReport rep;
  rep.plrs = plrs;
  rep.kind = table.kind;
  rep.g = table.g;
  rep.n0 = table.n0;
  rep.i0 = table.i0;
  rep.depth = depth;
  if (depth < table.n0 + table.i0)
    throw std::invalid_argument("validate_table: depth must reach past the seed rows");

  const std::optional<int> mode =
      table.kind == TableKind::kGap ? std::optional<int>(table.g) : std::nullopt;

  std::vector<std::vector<Int>> oracle;
  oracle.reserve(static_cast<size_t>(depth - table.n0 + 1));
  for (int n = table.n0; n <= depth; ++n) {
    OracleRows o = enumerate_interval(plrs, n, mode, budget);
    oracle.push_back(mode ? o.gap_row(*mode) : std::move(o.sigma_row));
  }

  std::vector<std::vector<Int>> seeds(oracle.begin(), oracle.begin() + table.i0);
  RowTable rows = evolve(table, RowTable::from_rows(table.n0, std::move(seeds)), depth);

  static const Int kZero(0);
  for (int n = table.n0 + table.i0; n <= depth; ++n) {
    const auto& truth = oracle[static_cast<size_t>(n - table.n0)];
    const auto& got = rows.row(n);
    const size_t len = std::max(truth.size(), got.size());
    ++rep.rows_compared;
    for (size_t k = 0; k < len; ++k) {
      const Int& a = k < truth.size() ? truth[k] : kZero;
      const Int& b = k < got.size() ? got[k] : kZero;
      ++rep.entries_compared;
      if (a != b) {
        ++rep.mismatch_count;
        if (static_cast<int>(rep.mismatches.size()) < ValidationReport::kMaxRecorded)
          rep.mismatches.push_back({n, static_cast<long long>(k), a, b});
      }
    }
  }
  return rep;
}

}  // namespace zeck
