#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "zeck/asymptotics.hpp"
#include "zeck/engine.hpp"
#include "zeck/tables.hpp"
#include "zeck/zeckendorf.hpp"

namespace zeck {

/// Gap-mode tag used across exports: a concrete gap size or the summand
/// ("sigma") statistic.
using GapMode = std::optional<int>;  // nullopt = sigma

/// {"plrs":[..],"g":<int>|"sigma","n":..,"row":["<decimal>",..]}
std::string row_json(const Plrs& plrs, GapMode mode, int n, const std::vector<Int>& row);

/// {"kind":"gap"|"summands"|"custom","g":..,"i0":..,"j0":..,"t":[[i,j,coef],..]}
std::string table_json(const CoefficientTable& table);

std::string constants_json(const Plrs& plrs, GapMode mode, const AsymptoticConstants& c);

std::string decomposition_json(const Plrs& plrs, const Decomposition& d, const GapProfile& gp);

/// JSON-lines row persistence: one row object per line with an extra
/// "prov" field, streamed in row order.
void write_rows_jsonl(std::ostream& out, const Plrs& plrs, GapMode mode, const RowTable& rows);

struct LoadedRows {
  Plrs plrs;
  GapMode mode;
  RowTable rows;
};

/// Streaming re-load of write_rows_jsonl output. Rows must be contiguous.
LoadedRows read_rows_jsonl(std::istream& in);

/// Fixed-column CSV: n,mean,var,m3_std,m4_std,m6_std,ks. Rows are emitted
/// every `every` steps plus always the final row. Moments that were not
/// computed are written as nan.
void write_moments_csv(std::ostream& out, const MomentSeries& series, int every = 1);

}  // namespace zeck
