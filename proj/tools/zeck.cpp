// zeck: exact Zeckendorf-style decompositions, gap statistics, and
// recurrence verification for positive linear recurrence sequences.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or precondition
// error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "zeck/asymptotics.hpp"
#include "zeck/engine.hpp"
#include "zeck/errors.hpp"
#include "zeck/io.hpp"
#include "zeck/plrs.hpp"
#include "zeck/tables.hpp"
#include "zeck/zeckendorf.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

struct ModeFlags {
  int g = -1;
  bool sigma = false;

  zeck::GapMode resolve() const {
    if (sigma && g >= 0)
      throw CLI::ValidationError("--g and --sigma are mutually exclusive");
    if (!sigma && g < 0)
      throw CLI::ValidationError("one of --g or --sigma is required");
    if (sigma) return std::nullopt;
    return g;
  }
};

void add_mode_flags(CLI::App* cmd, ModeFlags& mode) {
  cmd->add_option("--g", mode.g, "gap size (k_g statistic)");
  cmd->add_flag("--sigma", mode.sigma, "summand count statistic (k_sigma)");
}

zeck::CoefficientTable table_for(const zeck::Plrs& plrs, zeck::GapMode mode) {
  return mode.has_value() ? zeck::build_gap_table(plrs, *mode)
                          : zeck::build_summand_table(plrs);
}

std::string mode_name(zeck::GapMode mode) {
  return mode.has_value() ? "gap g=" + std::to_string(*mode) : "summands";
}

/// Largest n whose interval [G_n, G_{n+1}) fits the enumeration budget.
int max_enumerable_n(const zeck::Plrs& plrs, std::uint64_t budget) {
  int n = 1;
  while (true) {
    zeck::SequenceTable seq = zeck::sequence(plrs, n + 2);
    if (seq.g(n + 2) - seq.g(n + 1) > zeck::Int(budget)) return n;
    ++n;
  }
}

int cmd_seq(const std::string& plrs_text, int n_max, bool as_json) {
  zeck::Plrs plrs = zeck::parse_plrs(plrs_text);
  zeck::SequenceTable seq = zeck::sequence(plrs, n_max);
  if (as_json) {
    std::string out = "{\"plrs\":[" + plrs.str() + "],\"terms\":[";
    for (int n = 1; n <= seq.size(); ++n) {
      if (n > 1) out += ',';
      out += '"' + zeck::to_decimal(seq.g(n)) + '"';
    }
    std::cout << out << "]}\n";
  } else {
    for (int n = 1; n <= seq.size(); ++n)
      std::cout << (n > 1 ? " " : "") << zeck::to_decimal(seq.g(n));
    std::cout << "\n";
  }
  return 0;
}

int cmd_decompose(const std::string& plrs_text, const std::string& m_text, bool as_json) {
  zeck::Plrs plrs = zeck::parse_plrs(plrs_text);
  zeck::Int m = zeck::parse_decimal(m_text);
  zeck::Decomposition d = zeck::decompose(m, plrs);
  zeck::GapProfile gp = zeck::gap_profile(d);
  if (as_json) {
    std::cout << zeck::decomposition_json(plrs, d, gp) << "\n";
    return 0;
  }
  std::cout << "M: " << zeck::to_decimal(m) << "\n";
  std::cout << "digits:";
  for (int a : d.digits) std::cout << ' ' << a;
  std::cout << "\nindices:";
  for (int i : d.summand_indices) std::cout << ' ' << i;
  std::cout << "\nk_sigma: " << gp.total_summands << "\ngaps:";
  for (auto it = gp.gap_counts.rbegin(); it != gp.gap_counts.rend(); ++it)
    std::cout << ' ' << it->first << ':' << it->second;
  if (gp.gap_counts.empty()) std::cout << " none";
  std::cout << "\n";
  return 0;
}

int cmd_verify(const std::string& plrs_text, const ModeFlags& mode_flags, int depth,
               std::uint64_t budget, const std::string& rows_out) {
  zeck::Plrs plrs = zeck::parse_plrs(plrs_text);
  zeck::GapMode mode = mode_flags.resolve();
  zeck::CoefficientTable table = table_for(plrs, mode);
  if (depth <= 0) depth = max_enumerable_n(plrs, budget);
  if (depth < table.n0 + table.i0)
    throw CLI::ValidationError("depth " + std::to_string(depth) +
                               " does not reach past the seed rows (need >= " +
                               std::to_string(table.n0 + table.i0) + ")");

  zeck::ValidationReport rep = zeck::validate_table(table, plrs, depth, budget);
  std::cout << "table: " << mode_name(mode) << " (i0=" << table.i0 << ", j0=" << table.j0
            << ", n0=" << table.n0 << ")\n"
            << "depth: " << rep.depth << "  rows compared: " << rep.rows_compared
            << "  entries compared: " << rep.entries_compared << "\n";
  for (const auto& mm : rep.mismatches)
    std::cout << "mismatch at n=" << mm.n << " k=" << mm.k
              << ": oracle=" << zeck::to_decimal(mm.oracle)
              << " evolved=" << zeck::to_decimal(mm.evolved) << "\n";
  if (rep.mismatch_count > static_cast<long long>(rep.mismatches.size()))
    std::cout << "(further mismatches suppressed, total " << rep.mismatch_count << ")\n";

  if (!rows_out.empty()) {
    zeck::RowTable rows =
        zeck::evolve(table, zeck::oracle_seed_rows(table, plrs, budget), depth);
    std::ofstream out(rows_out);
    if (!out) throw CLI::ValidationError("cannot open " + rows_out);
    zeck::write_rows_jsonl(out, plrs, mode, rows);
  }

  std::cout << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return rep.ok() ? 0 : kExitVerificationFailure;
}

int cmd_constants(const std::string& plrs_text, const ModeFlags& mode_flags, int fit_n,
                  bool as_json) {
  zeck::Plrs plrs = zeck::parse_plrs(plrs_text);
  zeck::GapMode mode = mode_flags.resolve();

  zeck::AsymptoticConstants c;
  if (mode.has_value()) {
    c = zeck::check_positivity(plrs, *mode);
  } else {
    zeck::CoefficientTable table = zeck::build_summand_table(plrs);
    c = zeck::compute_constants(table, table.lambda1);
  }

  if (fit_n > 0 && !c.trivial) {
    zeck::CoefficientTable table = table_for(plrs, mode);
    zeck::RowTable rows =
        zeck::evolve(table, zeck::oracle_seed_rows(table, plrs), fit_n);
    zeck::RecursiveOptions opts;
    opts.verify_against_direct = false;
    opts.with_ks = false;
    zeck::MomentSeries series = zeck::moments_recursive(table, rows, 2, fit_n, opts);
    const int lo = std::max(series.first_n, fit_n / 4);
    zeck::LinearFit mu_fit = zeck::fit_linear_asymptote(series.mean_series(),
                                                        series.first_n, lo, fit_n);
    zeck::LinearFit var_fit = zeck::fit_linear_asymptote(series.variance_series(),
                                                         series.first_n, lo, fit_n);
    c.fitted_d_mu = mu_fit.intercept;
    c.fitted_d_sigma = var_fit.intercept;
    c.fitted_gamma_mu = mu_fit.residual_decay;
    c.fitted_gamma_sigma = var_fit.residual_decay;
  }

  if (as_json) {
    std::cout << zeck::constants_json(plrs, mode, c) << "\n";
    return 0;
  }
  std::printf("lambda1: %.17g\n", c.lambda1);
  std::printf("C_mu: %.17g\nC_sigma: %.17g\n", c.c_mu, c.c_sigma);
  std::printf("C_mu*: %.17g\nC_sigma*: %.17g\n", c.c_mu_star, c.c_sigma_star);
  std::printf("trivial: %s\n", c.trivial ? "true" : "false");
  if (fit_n > 0 && !c.trivial) {
    std::printf("fitted d_mu: %.17g\nfitted d_sigma: %.17g\n", c.fitted_d_mu,
                c.fitted_d_sigma);
    std::printf("fitted gamma_mu: %.17g\nfitted gamma_sigma: %.17g\n", c.fitted_gamma_mu,
                c.fitted_gamma_sigma);
  }
  return 0;
}

int run_moment_pipeline(const std::string& plrs_text, const ModeFlags& mode_flags,
                        int n_target, int m_max, int every, std::uint64_t budget,
                        const std::string& out_path, bool verify) {
  zeck::Plrs plrs = zeck::parse_plrs(plrs_text);
  zeck::GapMode mode = mode_flags.resolve();
  zeck::CoefficientTable table = table_for(plrs, mode);
  if (n_target < table.n0 + table.i0 + 10)
    throw CLI::ValidationError("--n too small for this table (need >= " +
                               std::to_string(table.n0 + table.i0 + 10) + ")");

  zeck::RowTable rows =
      zeck::evolve(table, zeck::oracle_seed_rows(table, plrs, budget), n_target);
  zeck::RecursiveOptions opts;
  opts.verify_against_direct = verify;
  zeck::MomentSeries series = zeck::moments_recursive(table, rows, m_max, n_target, opts);

  if (out_path.empty()) {
    zeck::write_moments_csv(std::cout, series, every);
  } else {
    std::ofstream out(out_path);
    if (!out) throw CLI::ValidationError("cannot open " + out_path);
    zeck::write_moments_csv(out, series, every);
  }
  if (verify)
    std::cerr << "max recursive-vs-direct deviation: " << series.max_deviation << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact gap statistics for generalized Zeckendorf decompositions"};
  app.require_subcommand(1);

  std::string plrs_text;
  std::string m_text;
  std::string out_path;
  std::string rows_out;
  ModeFlags mode;
  int n_max = 20;
  int depth = 0;
  int m_max_opt = 6;
  int every = 1;
  int fit_n = 0;
  bool as_json = false;
  bool no_verify = false;
  std::uint64_t budget = zeck::kDefaultEnumerationBudget;

  auto* seq = app.add_subcommand("seq", "print exact sequence terms");
  seq->add_option("--plrs", plrs_text, "comma-separated coefficients, e.g. 1,1")->required();
  seq->add_option("--n", n_max, "number of terms")->required();
  seq->add_flag("--json", as_json, "machine-readable output");

  auto* dec = app.add_subcommand("decompose", "legal decomposition of an integer");
  dec->add_option("--plrs", plrs_text, "comma-separated coefficients")->required();
  dec->add_option("M", m_text, "positive integer to decompose")->required();
  dec->add_flag("--json", as_json, "machine-readable output");

  auto* ver = app.add_subcommand("verify", "brute-force vs recurrence check");
  ver->add_option("--plrs", plrs_text, "comma-separated coefficients")->required();
  add_mode_flags(ver, mode);
  ver->add_option("--depth", depth, "deepest row to compare (default: budget limit)");
  ver->add_option("--budget", budget, "enumeration budget per interval");
  ver->add_option("--export-rows", rows_out, "write evolved rows as JSON lines");

  auto* con = app.add_subcommand("constants", "closed-form growth constants");
  con->add_option("--plrs", plrs_text, "comma-separated coefficients")->required();
  add_mode_flags(con, mode);
  con->add_option("--fit-n", fit_n, "also fit intercepts/decay up to this n");
  con->add_flag("--json", as_json, "machine-readable output");

  auto* mom = app.add_subcommand("moments", "per-n moment series as CSV");
  mom->add_option("--plrs", plrs_text, "comma-separated coefficients")->required();
  add_mode_flags(mom, mode);
  mom->add_option("--n", n_max, "target row")->required();
  mom->add_option("--mmax", m_max_opt, "highest central moment");
  mom->add_option("--every", every, "emit every k-th row");
  mom->add_option("--budget", budget, "enumeration budget per interval");
  mom->add_option("--out", out_path, "output file (default stdout)");
  mom->add_flag("--no-verify", no_verify, "skip the direct-path cross check");

  auto* clt = app.add_subcommand("clt", "CLT diagnostics at checkpoints as CSV");
  clt->add_option("--plrs", plrs_text, "comma-separated coefficients")->required();
  add_mode_flags(clt, mode);
  clt->add_option("--n", n_max, "target row")->required();
  clt->add_option("--mmax", m_max_opt, "highest central moment");
  clt->add_option("--every", every, "checkpoint spacing (default n/20)")->default_val(0);
  clt->add_option("--budget", budget, "enumeration budget per interval");
  clt->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (seq->parsed()) return cmd_seq(plrs_text, n_max, as_json);
    if (dec->parsed()) return cmd_decompose(plrs_text, m_text, as_json);
    if (ver->parsed()) return cmd_verify(plrs_text, mode, depth, budget, rows_out);
    if (con->parsed()) return cmd_constants(plrs_text, mode, fit_n, as_json);
    if (mom->parsed())
      return run_moment_pipeline(plrs_text, mode, n_max, m_max_opt, every, budget, out_path,
                                 !no_verify);
    if (clt->parsed()) {
      const int spacing = every > 0 ? every : std::max(1, n_max / 20);
      return run_moment_pipeline(plrs_text, mode, n_max, m_max_opt, spacing, budget, out_path,
                                 true);
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const zeck::budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailure;
  }
  return kExitUsage;
}
