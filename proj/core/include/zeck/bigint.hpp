#pragma once

#include <gmpxx.h>

#include <string>

namespace zeck {

/// Exact arbitrary-precision integer. Everything counted by this library
/// (sequence terms, interval widths, recurrence rows) lives in this type;
/// floating point only ever appears after an exact ratio is formed.
using Int = mpz_class;

/// num/den rounded to a 64-bit float. The division is carried out with a
/// 160-bit mantissa (~48 decimal digits) before the final rounding, so the
/// result is correct to the last ulp even when both operands overflow any
/// fixed-width type.
double exact_ratio(const Int& num, const Int& den);

/// Natural log of a positive integer of any magnitude.
double log_int(const Int& v);

std::string to_decimal(const Int& v);
Int parse_decimal(const std::string& s);

/// True when v fits in an unsigned 64-bit value.
bool fits_u64(const Int& v);

/// Int from a 64-bit signed value. gmpxx predates long long overloads; on
/// LP64 targets long carries the full width.
inline Int to_int(long long v) {
  static_assert(sizeof(long) == sizeof(long long), "LP64 layout expected");
  return Int(static_cast<long>(v));
}

}  // namespace zeck
