#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace motifkit {

/// Exact subgraph counts. Census formulas reach ~1e7 on real route maps and
/// grow polynomially, so everything is kept in checked 64-bit integers.
using Count = std::int64_t;

/// Invalid user input (bad edge list, out-of-range coordinate, ...).
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal-consistency panic: an exact-division or sign check failed,
/// which indicates an implementation bug, never a data problem.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw InternalError("count overflow in addition");
  return r;
}

inline Count checked_sub(Count a, Count b) {
  Count r;
  if (__builtin_sub_overflow(a, b, &r)) throw InternalError("count overflow in subtraction");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw InternalError("count overflow in multiplication");
  return r;
}

/// Division that must be exact; a nonzero remainder is a bug upstream.
inline Count exact_div(Count a, Count d, const char* context) {
  if (d == 0 || a % d != 0)
    throw InternalError(std::string("non-integral division in ") + context);
  return a / d;
}

/// Overflow-checked binomial coefficient; zero when k > n or n < 0.
inline Count binomial(Count n, int k) {
  if (k < 0 || n < 0 || n < k) return 0;
  if (k > n - k) k = static_cast<int>(n - k);
  Count r = 1;
  for (int i = 1; i <= k; ++i) {
    r = checked_mul(r, n - k + i);
    r /= i;  // product of i consecutive integers is divisible by i!
  }
  return r;
}

/// Small exact rational, used for quantities like edge/node ratios.
struct Ratio {
  Count num = 0;
  Count den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Ratio& a, const Ratio& b) {
    return a.num * b.den == b.num * a.den;
  }
};

}  // namespace motifkit
