#include "zeck/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace zeck {

namespace {
constexpr int kRatioPrecisionBits = 160;
}

double exact_ratio(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("exact_ratio: zero denominator");
  mpf_class n(num, kRatioPrecisionBits);
  mpf_class d(den, kRatioPrecisionBits);
  mpf_class q(0, kRatioPrecisionBits);
  q = n / d;
  return q.get_d();
}

double log_int(const Int& v) {
  if (v <= 0) throw std::invalid_argument("log_int: value must be positive");
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

std::string to_decimal(const Int& v) { return v.get_str(10); }

Int parse_decimal(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("parse_decimal: empty string");
  return Int(s, 10);
}

bool fits_u64(const Int& v) {
  return v >= 0 && mpz_sizeinbase(v.get_mpz_t(), 2) <= 64 && v.fits_ulong_p();
}

}  // namespace zeck
