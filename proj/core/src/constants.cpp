#include <cmath>
#include <stdexcept>

#include "zeck/asymptotics.hpp"

namespace zeck {

AsymptoticConstants compute_constants(const CoefficientTable& table, double lambda1) {
  if (!(std::abs(table.char_poly(lambda1)) <= 1e-10))
    throw std::invalid_argument("compute_constants: lambda1 is not a root of the table");

  double denom = 0.0, mu_star = 0.0;
  for (const auto& [key, coef] : table.t) {
    const double w = static_cast<double>(coef) / std::pow(lambda1, key.first);
    denom += w * static_cast<double>(key.first);
    mu_star += w * static_cast<double>(key.second);
  }
  if (!(denom > 0.0))
    throw std::runtime_error("compute_constants: non-positive denominator");

  AsymptoticConstants c;
  c.lambda1 = lambda1;
  c.c_mu_star = mu_star;
  c.c_mu = mu_star / denom;
  double sigma_star = 0.0;
  for (const auto& [key, coef] : table.t) {
    const double dev = static_cast<double>(key.second) - c.c_mu * static_cast<double>(key.first);
    sigma_star += static_cast<double>(coef) / std::pow(lambda1, key.first) * dev * dev;
  }
  c.c_sigma_star = sigma_star;
  c.c_sigma = sigma_star / denom;
  return c;
}

AsymptoticConstants check_positivity(const Plrs& plrs, int g) {
  if (!plrs.all_positive)
    throw std::invalid_argument("check_positivity: requires all c_i > 0");
  const CoefficientTable table = build_gap_table(plrs, g);
  AsymptoticConstants c = compute_constants(table, table.lambda1);

  const int L = plrs.order();
  if (g == 0) {
    bool ones_below = true;
    for (int i = 1; i < L; ++i)
      if (plrs.coeff(i) != 1) ones_below = false;
    c.trivial = ones_below && (plrs.coeff(L) == 1 || plrs.coeff(L) == 2);
  } else if (g == 1) {
    c.trivial = (L == 2 && plrs.coeff(1) == 1 && plrs.coeff(2) == 1);
  } else {
    c.trivial = false;
  }
  return c;
}

double variance_bound_sweep_min() {
  double worst = std::numeric_limits<double>::infinity();
  for (int xi = 0; xi <= 36; ++xi) {
    const double x = 1.0 + 0.25 * xi;
    for (int y = 2; y <= 8; ++y) {
      const double xy = std::pow(x, y);
      for (int zi = 0; zi <= 100; ++zi) {
        const double z = 0.05 * zi;
        for (int w = 1; w <= 8; ++w) {
          const double zw = z * static_cast<double>(w);
          const double v = xy * zw * zw +
                           x * (1.0 - 2.0 * z * (w + y - 1)) -
                           (1.0 - 2.0 * z * (w + y));
          worst = std::min(worst, v);
        }
      }
    }
  }
  return worst;
}

}  // namespace zeck
