#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "zeck/asymptotics.hpp"

namespace zeck {

namespace {

constexpr int kDirectPrecisionBits = 192;

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

std::vector<std::vector<double>> binomial_rows(int m_max) {
  std::vector<std::vector<double>> b(static_cast<size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    b[static_cast<size_t>(m)].resize(static_cast<size_t>(m) + 1, 1.0);
    for (int l = 1; l < m; ++l)
      b[static_cast<size_t>(m)][static_cast<size_t>(l)] =
          b[static_cast<size_t>(m - 1)][static_cast<size_t>(l - 1)] +
          b[static_cast<size_t>(m - 1)][static_cast<size_t>(l)];
  }
  return b;
}

void fill_standardized(MomentRow& row) {
  const int m_max = static_cast<int>(row.central.size()) - 1;
  row.standardized.assign(row.central.size(), std::numeric_limits<double>::quiet_NaN());
  const double sigma = std::sqrt(std::max(row.variance, 0.0));
  if (sigma <= 0.0) return;
  for (int m = 0; m <= m_max; ++m)
    row.standardized[static_cast<size_t>(m)] =
        row.central[static_cast<size_t>(m)] / std::pow(sigma, m);
}

// Degree-`deg` least-squares polynomial fit in centered-scaled coordinates
// u = (x - mid)/half; returns the u-space coefficients (ascending).
std::vector<double> polyfit_scaled(const std::vector<double>& xs,
                                   const std::vector<double>& ys, int deg,
                                   double mid, double half) {
  const int dim = deg + 1;
  std::vector<long double> ata(static_cast<size_t>(dim * dim), 0.0L);
  std::vector<long double> atb(static_cast<size_t>(dim), 0.0L);
  std::vector<long double> pows(static_cast<size_t>(2 * deg) + 1);
  for (size_t p = 0; p < xs.size(); ++p) {
    const long double u = (xs[p] - mid) / half;
    pows[0] = 1.0L;
    for (int q = 1; q <= 2 * deg; ++q) pows[static_cast<size_t>(q)] = pows[static_cast<size_t>(q - 1)] * u;
    for (int a = 0; a < dim; ++a) {
      for (int b = 0; b < dim; ++b) ata[static_cast<size_t>(a * dim + b)] += pows[static_cast<size_t>(a + b)];
      atb[static_cast<size_t>(a)] += pows[static_cast<size_t>(a)] * ys[p];
    }
  }
  // Gaussian elimination with partial pivoting on the (dim x dim) system.
  for (int col = 0; col < dim; ++col) {
    int piv = col;
    for (int r = col + 1; r < dim; ++r)
      if (std::abs(static_cast<double>(ata[static_cast<size_t>(r * dim + col)])) >
          std::abs(static_cast<double>(ata[static_cast<size_t>(piv * dim + col)])))
        piv = r;
    if (piv != col) {
      for (int c = 0; c < dim; ++c)
        std::swap(ata[static_cast<size_t>(col * dim + c)], ata[static_cast<size_t>(piv * dim + c)]);
      std::swap(atb[static_cast<size_t>(col)], atb[static_cast<size_t>(piv)]);
    }
    const long double diag = ata[static_cast<size_t>(col * dim + col)];
    if (diag == 0.0L) throw std::runtime_error("polyfit: singular normal equations");
    for (int r = col + 1; r < dim; ++r) {
      const long double f = ata[static_cast<size_t>(r * dim + col)] / diag;
      for (int c = col; c < dim; ++c)
        ata[static_cast<size_t>(r * dim + c)] -= f * ata[static_cast<size_t>(col * dim + c)];
      atb[static_cast<size_t>(r)] -= f * atb[static_cast<size_t>(col)];
    }
  }
  std::vector<double> coef(static_cast<size_t>(dim));
  for (int r = dim - 1; r >= 0; --r) {
    long double v = atb[static_cast<size_t>(r)];
    for (int c = r + 1; c < dim; ++c)
      v -= ata[static_cast<size_t>(r * dim + c)] * coef[static_cast<size_t>(c)];
    coef[static_cast<size_t>(r)] = static_cast<double>(v / ata[static_cast<size_t>(r * dim + r)]);
  }
  return coef;
}

}  // namespace

double double_factorial(int k) {
  if (k <= 0) return 1.0;
  double v = 1.0;
  for (int x = k; x >= 1; x -= 2) v *= static_cast<double>(x);
  return v;
}

double ks_to_normal(const Distribution& dist, double mean, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("ks_to_normal: sigma must be positive");
  double cum = 0.0;
  double worst = 0.0;
  for (size_t k = 0; k < dist.probs.size(); ++k) {
    cum += dist.probs[k];
    const double edge = (static_cast<double>(k) + 0.5 - mean) / sigma;
    worst = std::max(worst, std::abs(std::min(cum, 1.0) - normal_cdf(edge)));
  }
  return worst;
}

MomentRow moments_direct(const Distribution& dist, int m_max) {
  if (m_max < 0) throw std::invalid_argument("moments_direct: m_max must be >= 0");
  MomentRow row;
  row.n = dist.n;
  long double mean = 0.0L;
  for (size_t k = 0; k < dist.probs.size(); ++k)
    mean += static_cast<long double>(k) * dist.probs[k];
  row.mean = static_cast<double>(mean);
  std::vector<long double> acc(static_cast<size_t>(m_max) + 1, 0.0L);
  for (size_t k = 0; k < dist.probs.size(); ++k) {
    const long double dev = static_cast<long double>(k) - mean;
    long double pw = 1.0L;
    for (int m = 0; m <= m_max; ++m) {
      acc[static_cast<size_t>(m)] += pw * dist.probs[k];
      pw *= dev;
    }
  }
  row.central.resize(static_cast<size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) row.central[static_cast<size_t>(m)] = static_cast<double>(acc[static_cast<size_t>(m)]);
  row.variance = m_max >= 2 ? row.central[2] : 0.0;
  fill_standardized(row);
  return row;
}

MomentRow moments_direct(const RowTable& rows, int n, int m_max) {
  if (m_max < 0) throw std::invalid_argument("moments_direct: m_max must be >= 0");
  const auto& r = rows.row(n);
  const Int& om = rows.omega_at(n);
  if (om == 0) throw std::invalid_argument("moments_direct: degenerate row");

  MomentRow row;
  row.n = n;

  Int mean_num = 0;
  for (size_t k = 0; k < r.size(); ++k) mean_num += Int(k) * r[k];
  mpf_class mean(0, kDirectPrecisionBits);
  mean = mpf_class(mean_num, kDirectPrecisionBits) / mpf_class(om, kDirectPrecisionBits);

  std::vector<mpf_class> acc;
  acc.reserve(static_cast<size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) acc.emplace_back(0, kDirectPrecisionBits);
  mpf_class dev(0, kDirectPrecisionBits), pw(0, kDirectPrecisionBits),
      pk(0, kDirectPrecisionBits);
  for (size_t k = 0; k < r.size(); ++k) {
    if (r[k] == 0) continue;
    pk = mpf_class(r[k], kDirectPrecisionBits);
    dev = static_cast<double>(k);
    dev -= mean;
    pw = pk;
    for (int m = 0; m <= m_max; ++m) {
      acc[static_cast<size_t>(m)] += pw;
      pw *= dev;
    }
  }
  mpf_class omf(om, kDirectPrecisionBits);
  mpf_class tmp(0, kDirectPrecisionBits);
  row.central.resize(static_cast<size_t>(m_max) + 1);
  for (int m = 0; m <= m_max; ++m) {
    tmp = acc[static_cast<size_t>(m)] / omf;
    row.central[static_cast<size_t>(m)] = tmp.get_d();
  }
  row.mean = mean.get_d();
  row.variance = m_max >= 2 ? row.central[2] : 0.0;
  fill_standardized(row);
  return row;
}

std::vector<double> MomentSeries::mean_series() const {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(r.mean);
  return v;
}

std::vector<double> MomentSeries::variance_series() const {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(r.variance);
  return v;
}

std::vector<double> MomentSeries::central_series(int m) const {
  std::vector<double> v;
  v.reserve(rows.size());
  for (const auto& r : rows) v.push_back(r.central.at(static_cast<size_t>(m)));
  return v;
}

MomentSeries moments_recursive(const CoefficientTable& table, const RowTable& rows,
                               int m_max, int n_target, const RecursiveOptions& opts) {
  if (m_max < 2) throw std::invalid_argument("moments_recursive: m_max must be >= 2");
  if (n_target > rows.last_n())
    throw std::invalid_argument("moments_recursive: rows do not reach n_target");
  const int first = rows.first_n;
  const int recursion_start = first + table.i0;

  MomentSeries series;
  series.mode = MomentMode::kRecursive;
  series.m_max = m_max;
  series.first_n = first;
  const auto binom = binomial_rows(m_max);

  for (int n = first; n <= n_target; ++n) {
    MomentRow row;
    if (n < recursion_start) {
      // Seed moments are computed directly on the seed rows.
      row = moments_direct(rows, n, m_max);
    } else {
      row.n = n;
      row.central.assign(static_cast<size_t>(m_max) + 1, 0.0);

      // Mean first: mu_n = sum t_{i,j} (Omega_{n-i}/Omega_n) (mu_{n-i} + j).
      double mu = 0.0;
      std::vector<double> ratio(static_cast<size_t>(table.i0) + 1, 0.0);
      for (int i = 1; i <= table.i0; ++i)
        ratio[static_cast<size_t>(i)] = exact_ratio(rows.omega_at(n - i), rows.omega_at(n));
      for (const auto& [key, coef] : table.t) {
        const auto& prev = series.at(n - key.first);
        mu += static_cast<double>(coef) * ratio[static_cast<size_t>(key.first)] *
              (prev.mean + static_cast<double>(key.second));
      }
      row.mean = mu;

      // m = 0 and m = 1 are the exact base identities; recursing them only
      // reinjects rounding noise into the odd moments.
      row.central[0] = 1.0;
      row.central[1] = 0.0;

      // Central moments by binomial convolution over (j + mu_{n-i} - mu_n).
      for (const auto& [key, coef] : table.t) {
        const auto& prev = series.at(n - key.first);
        const double w = static_cast<double>(coef) * ratio[static_cast<size_t>(key.first)];
        const double delta = static_cast<double>(key.second) + prev.mean - mu;
        double dpow = 1.0;
        for (int l = 0; l <= m_max; ++l) {
          const double wl = w * dpow;
          for (int m = std::max(l, 2); m <= m_max; ++m)
            row.central[static_cast<size_t>(m)] +=
                binom[static_cast<size_t>(m)][static_cast<size_t>(l)] * wl *
                prev.central[static_cast<size_t>(m - l)];
          dpow *= delta;
        }
      }
      row.variance = row.central[2];
      fill_standardized(row);
    }

    if (opts.with_ks && row.variance > 0.0)
      row.ks = ks_to_normal(distribution(rows, n), row.mean, std::sqrt(row.variance));

    if (opts.verify_against_direct && n >= recursion_start && n <= opts.verify_up_to) {
      MomentRow ref = moments_direct(rows, n, m_max);
      for (int m = 0; m <= m_max; ++m) {
        const double a = row.central[static_cast<size_t>(m)];
        const double b = ref.central[static_cast<size_t>(m)];
        const double dev = std::abs(b) < 1e-3
                               ? std::abs(a - b) / opts.abs_tol * opts.rel_tol
                               : std::abs(a - b) / std::abs(b);
        series.max_deviation = std::max(series.max_deviation, dev);
      }
      const double mdev = std::abs(ref.mean) < 1e-3
                              ? std::abs(row.mean - ref.mean) / opts.abs_tol * opts.rel_tol
                              : std::abs(row.mean - ref.mean) / std::abs(ref.mean);
      series.max_deviation = std::max(series.max_deviation, mdev);
      if (opts.throw_on_divergence && series.max_deviation > opts.rel_tol)
        throw std::runtime_error(
            "moments_recursive: diverged from the direct path at n=" + std::to_string(n));
    }
    series.rows.push_back(std::move(row));
  }
  return series;
}

CltDiagnostics clt_diagnostics(const MomentSeries& series, int m_max) {
  if (m_max < 2 || m_max % 2 != 0)
    throw std::invalid_argument("clt_diagnostics: m_max must be even and >= 2");
  if (m_max > series.m_max)
    throw std::invalid_argument("clt_diagnostics: m_max exceeds the series");
  CltDiagnostics diag;
  diag.first_n = series.first_n;
  diag.m_max = m_max;
  for (const auto& row : series.rows) {
    if (!(row.variance > 0.0))
      throw std::invalid_argument("clt_diagnostics: sigma^2 must be positive on the range");
    std::vector<double> devs(static_cast<size_t>(m_max) + 1, 0.0);
    for (int m = 2; m <= m_max; ++m) {
      const double target = (m % 2 == 0) ? double_factorial(m - 1) : 0.0;
      devs[static_cast<size_t>(m)] = std::abs(row.standardized[static_cast<size_t>(m)] - target);
    }
    diag.deviations.push_back(std::move(devs));
    diag.ks.push_back(row.ks);
  }
  return diag;
}

LinearFit fit_linear_asymptote(const std::vector<double>& series, int first_n,
                               int n_lo, int n_hi) {
  const int last_n = first_n + static_cast<int>(series.size()) - 1;
  if (n_lo < first_n || n_hi > last_n || n_hi - n_lo + 1 < 10)
    throw std::invalid_argument("fit_linear_asymptote: window must hold >= 10 points");
  std::vector<double> xs, ys;
  xs.reserve(static_cast<size_t>(n_hi - n_lo + 1));
  for (int n = n_lo; n <= n_hi; ++n) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(series[static_cast<size_t>(n - first_n)]);
  }
  LineFit line = least_squares_line(xs, ys);

  LinearFit fit;
  fit.slope = line.slope;
  fit.intercept = line.intercept;

  double scale = 0.0;
  for (double y : ys) scale = std::max(scale, std::abs(y));
  const double floor = std::max(1e-13 * scale, 1e-300);
  std::vector<double> rx, rlog;
  for (size_t i = 0; i < xs.size(); ++i) {
    const double r = std::abs(ys[i] - (line.slope * xs[i] + line.intercept));
    fit.max_abs_residual = std::max(fit.max_abs_residual, r);
    if (r > floor) {
      rx.push_back(xs[i]);
      rlog.push_back(std::log(r));
    }
  }
  if (rx.size() >= 3) {
    fit.residual_decay = std::exp(least_squares_line(rx, rlog).slope);
    fit.residuals_decaying = fit.residual_decay < 0.999;
  } else {
    fit.residual_decay = 0.0;  // residuals at the noise floor
    fit.residuals_decaying = true;
  }
  return fit;
}

LeadingCoefCheck double_factorial_check(const MomentSeries& series, double c_sigma,
                                        int m, int n_lo, int n_hi) {
  if (m < 1) throw std::invalid_argument("double_factorial_check: m must be >= 1");
  if (2 * m > series.m_max)
    throw std::invalid_argument("double_factorial_check: series lacks moment 2m");
  if (n_lo < series.first_n || n_hi > series.last_n() || n_hi - n_lo + 1 < 3 * (m + 1))
    throw std::invalid_argument("double_factorial_check: window too small");

  std::vector<double> xs, ys;
  for (int n = n_lo; n <= n_hi; ++n) {
    xs.push_back(static_cast<double>(n));
    ys.push_back(series.at(n).central[static_cast<size_t>(2 * m)]);
  }
  const double mid = 0.5 * (static_cast<double>(n_lo) + static_cast<double>(n_hi));
  const double half = 0.5 * (static_cast<double>(n_hi) - static_cast<double>(n_lo));
  const std::vector<double> coef = polyfit_scaled(xs, ys, m, mid, half);

  LeadingCoefCheck chk;
  chk.m = m;
  // Only the leading coefficient survives the affine change of variable
  // untouched up to the scale factor half^m.
  chk.fitted = coef.back() / std::pow(half, m);
  chk.expected = double_factorial(2 * m - 1) * std::pow(c_sigma, m);
  chk.rel_error = std::abs(chk.fitted - chk.expected) / std::abs(chk.expected);
  return chk;
}

}  // namespace zeck
