#include "zeck/plrs.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace zeck {

long long Plrs::coeff_sum() const {
  return std::accumulate(c.begin(), c.end(), 0LL);
}

std::string Plrs::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ',';
    os << c[i];
  }
  return os.str();
}

Plrs build_plrs(const std::vector<long long>& coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("coefficient list must be non-empty");
  for (long long ci : coeffs) {
    if (ci < 0) throw std::invalid_argument("coefficients must be non-negative");
    if (ci > 1'000'000'000)
      throw std::invalid_argument("coefficient exceeds the supported range 1e9");
  }
  if (coeffs.front() < 1) throw std::invalid_argument("c_1 must be >= 1");
  if (coeffs.back() < 1) throw std::invalid_argument("c_L must be >= 1");
  long long sum = std::accumulate(coeffs.begin(), coeffs.end(), 0LL);
  if (sum < 2)
    throw std::invalid_argument(
        "degenerate recurrence: coefficient sum must be >= 2");
  Plrs p;
  p.c = coeffs;
  p.all_positive = true;
  for (long long ci : coeffs)
    if (ci < 1) p.all_positive = false;
  return p;
}

Plrs parse_plrs(const std::string& text) {
  std::vector<long long> coeffs;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    size_t pos = 0;
    long long v;
    try {
      v = std::stoll(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed coefficient '" + token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos]))) ++pos;
    if (pos != token.size())
      throw std::invalid_argument("malformed coefficient '" + token + "'");
    coeffs.push_back(v);
  }
  return build_plrs(coeffs);
}

SequenceTable sequence(const Plrs& plrs, int n_max) {
  if (n_max < 1) throw std::invalid_argument("sequence: n_max must be >= 1");
  SequenceTable t;
  t.plrs = plrs;
  t.terms.reserve(static_cast<size_t>(n_max));
  const int L = plrs.order();
  for (int n = 1; n <= n_max; ++n) {
    Int g;
    if (n <= L) {
      // G_n = c_1 G_{n-1} + ... + c_{n-1} G_1 + 1
      g = 1;
      for (int i = 1; i < n; ++i) g += to_int(plrs.coeff(i)) * t.terms[static_cast<size_t>(n - 1 - i)];
    } else {
      g = 0;
      for (int i = 1; i <= L; ++i) g += to_int(plrs.coeff(i)) * t.terms[static_cast<size_t>(n - 1 - i)];
    }
    t.terms.push_back(std::move(g));
  }
  return t;
}

double char_poly_at(const std::vector<long long>& coeffs, double x) {
  // Horner on x^L - c_1 x^{L-1} - ... - c_L.
  double v = 1.0;
  for (long long c : coeffs) v = v * x - static_cast<double>(c);
  return v;
}

double dominant_root_of(const std::vector<long long>& coeffs) {
  long long sum = 0;
  for (long long c : coeffs) {
    if (c < 0) throw std::invalid_argument("dominant_root_of: negative coefficient");
    sum += c;
  }
  if (sum < 2)
    throw std::invalid_argument("dominant_root_of: coefficient sum must be >= 2");

  // T(1) = 1 - sum < 0 and T(1 + sum) >= (1+sum)^{L-1} > 0, so the unique
  // positive root sits in (1, 1 + sum].
  double lo = 1.0;
  double hi = 1.0 + static_cast<double>(sum);
  while (hi - lo > 1e-13) {
    double mid = 0.5 * (lo + hi);
    if (char_poly_at(coeffs, mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 3; ++it) {
    // Derivative via Horner on the expanded form.
    const int L = static_cast<int>(coeffs.size());
    double dv = static_cast<double>(L);
    for (int i = 1; i < L; ++i)
      dv = dv * x - static_cast<double>(L - i) * static_cast<double>(coeffs[static_cast<size_t>(i - 1)]);
    if (dv == 0.0) break;
    x -= char_poly_at(coeffs, x) / dv;
  }
  return x;
}

SpectralData dominant_root(const Plrs& plrs, int binet_n) {
  SpectralData s;
  s.lambda1 = dominant_root_of(plrs.c);
  s.residual = std::abs(char_poly_at(plrs.c, s.lambda1));
  if (!(s.residual <= 1e-12))
    throw std::runtime_error("dominant_root: residual tolerance not reached");
  if (binet_n < plrs.order() + 2) binet_n = plrs.order() + 2;
  SequenceTable seq = sequence(plrs, binet_n);
  // log-domain quotient keeps G_n / lambda1^n finite for any growth rate
  s.binet_a1 = std::exp(log_int(seq.g(binet_n)) -
                        static_cast<double>(binet_n) * std::log(s.lambda1));
  return s;
}

ConvergenceReport growth_ratio_check(const SequenceTable& seq, double lambda1) {
  if (seq.size() < 20)
    throw std::invalid_argument("growth_ratio_check: need at least 20 terms");
  const double target = 1.0 / lambda1;
  std::vector<double> errors;
  errors.reserve(static_cast<size_t>(seq.size() - 1));
  for (int n = 2; n <= seq.size(); ++n)
    errors.push_back(std::abs(exact_ratio(seq.g(n - 1), seq.g(n)) - target));
  return make_convergence_report(2, std::move(errors));
}

}  // namespace zeck
