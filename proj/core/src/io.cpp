#include "zeck/io.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace zeck {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json plrs_json(const Plrs& plrs) {
  json a = json::array();
  for (long long c : plrs.c) a.push_back(c);
  return a;
}

json mode_json(GapMode mode) {
  if (mode.has_value()) return json(*mode);
  return json("sigma");
}

json row_array(const std::vector<Int>& row) {
  json a = json::array();
  for (const Int& v : row) a.push_back(to_decimal(v));
  return a;
}

// NaN is not representable in JSON; exports use null.
json finite_or_null(double v) {
  if (std::isnan(v)) return json(nullptr);
  return json(v);
}

ordered_json row_object(const Plrs& plrs, GapMode mode, int n, const std::vector<Int>& row) {
  ordered_json o;
  o["plrs"] = plrs_json(plrs);
  o["g"] = mode_json(mode);
  o["n"] = n;
  o["row"] = row_array(row);
  return o;
}

}  // namespace

std::string row_json(const Plrs& plrs, GapMode mode, int n, const std::vector<Int>& row) {
  return row_object(plrs, mode, n, row).dump();
}

std::string table_json(const CoefficientTable& table) {
  ordered_json o;
  switch (table.kind) {
    case TableKind::kGap:
      o["kind"] = "gap";
      o["g"] = table.g;
      break;
    case TableKind::kSummands:
      o["kind"] = "summands";
      break;
    case TableKind::kCustom:
      o["kind"] = "custom";
      break;
  }
  o["i0"] = table.i0;
  o["j0"] = table.j0;
  json entries = json::array();
  for (const auto& [key, coef] : table.t)
    entries.push_back(json::array({key.first, key.second, coef}));
  o["t"] = entries;
  return o.dump();
}

std::string constants_json(const Plrs& plrs, GapMode mode, const AsymptoticConstants& c) {
  ordered_json o;
  o["plrs"] = plrs_json(plrs);
  o["g"] = mode_json(mode);
  o["lambda1"] = c.lambda1;
  o["c_mu"] = c.c_mu;
  o["c_sigma"] = c.c_sigma;
  o["c_mu_star"] = c.c_mu_star;
  o["c_sigma_star"] = c.c_sigma_star;
  o["trivial"] = c.trivial;
  o["fitted_d_mu"] = finite_or_null(c.fitted_d_mu);
  o["fitted_d_sigma"] = finite_or_null(c.fitted_d_sigma);
  o["fitted_gamma_mu"] = finite_or_null(c.fitted_gamma_mu);
  o["fitted_gamma_sigma"] = finite_or_null(c.fitted_gamma_sigma);
  return o.dump();
}

std::string decomposition_json(const Plrs& plrs, const Decomposition& d, const GapProfile& gp) {
  ordered_json o;
  o["plrs"] = plrs_json(plrs);
  o["M"] = to_decimal(d.value);
  o["digits"] = d.digits;
  o["indices"] = d.summand_indices;
  o["k_sigma"] = gp.total_summands;
  ordered_json gaps;
  for (const auto& [g, count] : gp.gap_counts) gaps[std::to_string(g)] = count;
  o["gaps"] = gaps;
  return o.dump();
}

void write_rows_jsonl(std::ostream& out, const Plrs& plrs, GapMode mode, const RowTable& rows) {
  for (int n = rows.first_n; n <= rows.last_n(); ++n) {
    ordered_json o = row_object(plrs, mode, n, rows.row(n));
    o["prov"] = rows.provenance_at(n) == RowProvenance::kOracle ? "oracle" : "evolved";
    out << o.dump() << '\n';
  }
}

LoadedRows read_rows_jsonl(std::istream& in) {
  LoadedRows loaded;
  bool have_header = false;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json o = json::parse(line);
    std::vector<long long> coeffs;
    for (const auto& c : o.at("plrs")) coeffs.push_back(c.get<long long>());
    Plrs plrs = build_plrs(coeffs);
    GapMode mode;
    if (o.at("g").is_number_integer())
      mode = o.at("g").get<int>();
    const int n = o.at("n").get<int>();
    std::vector<Int> row;
    for (const auto& v : o.at("row")) row.push_back(parse_decimal(v.get<std::string>()));
    const bool oracle = o.value("prov", "oracle") == std::string("oracle");

    if (!have_header) {
      loaded.plrs = plrs;
      loaded.mode = mode;
      loaded.rows.first_n = n;
      have_header = true;
    } else {
      if (plrs.c != loaded.plrs.c || mode != loaded.mode)
        throw std::invalid_argument("read_rows_jsonl: inconsistent header fields");
      if (n != loaded.rows.last_n() + 1)
        throw std::invalid_argument("read_rows_jsonl: rows must be contiguous");
    }
    loaded.rows.append(std::move(row),
                       oracle ? RowProvenance::kOracle : RowProvenance::kEvolved);
    if (oracle && loaded.rows.seed_count == static_cast<int>(loaded.rows.rows.size()) - 1)
      loaded.rows.seed_count = static_cast<int>(loaded.rows.rows.size());
  }
  if (!have_header) throw std::invalid_argument("read_rows_jsonl: empty stream");
  return loaded;
}

void write_moments_csv(std::ostream& out, const MomentSeries& series, int every) {
  if (every < 1) every = 1;
  out << "n,mean,var,m3_std,m4_std,m6_std,ks\n";
  char buf[512];
  for (size_t idx = 0; idx < series.rows.size(); ++idx) {
    const bool last = idx + 1 == series.rows.size();
    if (!last && idx % static_cast<size_t>(every) != 0) continue;
    const MomentRow& r = series.rows[idx];
    auto std_at = [&](int m) {
      return m <= series.m_max ? r.standardized[static_cast<size_t>(m)]
                               : std::numeric_limits<double>::quiet_NaN();
    };
    std::snprintf(buf, sizeof buf, "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", r.n,
                  r.mean, r.variance, std_at(3), std_at(4), std_at(6), r.ks);
    out << buf;
  }
}

}  // namespace zeck
