#include "zeck/zeckendorf.hpp"

#include <stdexcept>

namespace zeck {

// Digit strings are matched against the coefficient block c_1, c_2, ...:
// a digit equal to its cap c_r extends the block (also through c_r = 0
// positions), a digit below its cap terminates it, and after a run of zeros
// the scan restarts at c_1. A string is legal when every block terminates
// below its cap or the string ends while still matching the c-prefix
// (possible only while fewer than L block positions have been consumed).

bool is_legal(const std::vector<int>& digits, const Plrs& plrs) {
  if (digits.empty()) return true;
  if (digits.front() <= 0) return false;
  const int L = plrs.order();
  int r = 1;  // 1-based position inside the current block
  for (int a : digits) {
    if (a < 0) return false;
    const long long cap = plrs.coeff(r);
    if (a > cap) return false;
    if (a == cap) {
      if (r == L) return false;  // complete block: the string rolls over
      ++r;
    } else {
      r = 1;  // block terminated (possibly by a zero)
    }
  }
  // Ran out of digits mid-block: legal iff the consumed prefix sits strictly
  // inside the coefficient list, which the r <= L guard above ensures.
  return true;
}

Decomposition decompose(const Int& m, const Plrs& plrs) {
  if (m < 1) throw std::invalid_argument("decompose: M must be >= 1");

  // Grow terms while G_n <= M; the last kept term is the top summand.
  std::vector<Int> terms;
  {
    const int L = plrs.order();
    for (int n = 1;; ++n) {
      Int g;
      if (n <= L) {
        g = 1;
        for (int i = 1; i < n; ++i) g += to_int(plrs.coeff(i)) * terms[static_cast<size_t>(n - 1 - i)];
      } else {
        g = 0;
        for (int i = 1; i <= L; ++i) g += to_int(plrs.coeff(i)) * terms[static_cast<size_t>(n - 1 - i)];
      }
      if (g > m) break;
      terms.push_back(std::move(g));
    }
  }
  const int top = static_cast<int>(terms.size());

  Decomposition d;
  d.value = m;
  d.digits.reserve(static_cast<size_t>(top));
  Int rem = m;
  int r = 1;
  for (int pos = top; pos >= 1; --pos) {
    const Int& g = terms[static_cast<size_t>(pos - 1)];
    const long long cap = plrs.coeff(r);
    long long a = 0;
    while (a < cap && rem >= g) {
      rem -= g;
      ++a;
    }
    d.digits.push_back(static_cast<int>(a));
    for (long long q = 0; q < a; ++q) d.summand_indices.push_back(pos);
    r = (a == cap) ? r + 1 : 1;
  }
  if (rem != 0)
    throw std::logic_error("decompose: nonzero remainder, invalid recurrence state");
  return d;
}

Int reconstruct(const std::vector<int>& digits, const SequenceTable& seq) {
  const int n = static_cast<int>(digits.size());
  if (seq.size() < n)
    throw std::invalid_argument("reconstruct: sequence table too short");
  Int m = 0;
  for (int i = 1; i <= n; ++i)
    m += Int(digits[static_cast<size_t>(i - 1)]) * seq.g(n + 1 - i);
  return m;
}

GapProfile gap_profile(const Decomposition& d) {
  if (d.summand_indices.empty())
    throw std::invalid_argument("gap_profile: decomposition has no summands");
  GapProfile gp;
  gp.total_summands = d.k_sigma();
  for (size_t i = 0; i + 1 < d.summand_indices.size(); ++i)
    gp.gap_counts[d.summand_indices[i] - d.summand_indices[i + 1]] += 1;
  return gp;
}

IntervalPartition interval_partition(const Plrs& plrs, int n) {
  const int L = plrs.order();
  if (n <= L) throw std::invalid_argument("interval_partition: requires n > L");
  SequenceTable seq = sequence(plrs, n + 1);

  IntervalPartition part;
  part.n = n;
  // H_{n,i} = sum_{i'=1}^{i} c_{i'} G_{n+1-i'}; the (i,j) cell starts at
  // H_{n,i} + j G_{n-i}. (0,0) is excluded, so the first cell starts at G_n.
  Int h = 0;
  for (int i = 0; i <= L - 1; ++i) {
    if (i >= 1) h += to_int(plrs.coeff(i)) * seq.g(n + 1 - i);
    const Int& step = seq.g(n - i);
    for (int j = (i == 0 ? 1 : 0); j <= static_cast<int>(plrs.coeff(i + 1)) - 1; ++j) {
      IntervalPartition::Part p;
      p.i = i;
      p.j = j;
      p.lo = h + Int(j) * step;
      p.hi = h + Int(j + 1) * step;
      part.parts.push_back(std::move(p));
    }
  }
  return part;
}

std::vector<Int> OracleRows::gap_row(int g) const {
  auto it = gap_rows.find(g);
  if (it != gap_rows.end()) return it->second;
  return {omega};
}

}  // namespace zeck
