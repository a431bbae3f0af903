#pragma once

#include <cstdint>
#include <stdexcept>

namespace cycloid {

// Overflow-checked 64-bit arithmetic. Everything user-facing in this library
// is exact integer math; parameters up to 10^6 are supported, which puts some
// intermediate products close to the int64 range.

inline long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

inline long long narrow(__int128 v) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw std::overflow_error("value exceeds 64-bit range");
  return static_cast<long long>(v);
}

// Floor division, rounding toward -inf for negative operands.
inline long long floor_div(long long a, long long b) {
  long long q = a / b;
  long long rem = a % b;
  if (rem != 0 && ((rem < 0) != (b < 0))) --q;
  return q;
}

inline __int128 floor_div_wide(__int128 a, __int128 b) {
  __int128 q = a / b;
  __int128 rem = a % b;
  if (rem != 0 && ((rem < 0) != (b < 0))) --q;
  return q;
}

inline long long ceil_div(long long a, long long b) {
  return -floor_div(-a, b);
}

inline __int128 gcd_wide(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace cycloid
