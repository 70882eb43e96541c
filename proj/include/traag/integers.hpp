#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace traag {

/// Exact integer used for word exponents and matrix entries.
using Int = boost::multiprecision::cpp_int;

/// Floor division for b > 0 (cpp_int division truncates toward zero).
inline Int floordiv(const Int& a, long long b) {
  Int q = a / b;
  if (q * b != a && a < 0) --q;
  return q;
}

inline Int floormod(const Int& a, long long b) { return a - floordiv(a, b) * b; }

/// g = u*a + v*b with g = gcd(|a|,|b|) >= 0.
struct ExtGcd {
  long long g, u, v;
};

inline ExtGcd ext_gcd(long long a, long long b) {
  if (b == 0) {
    if (a < 0) return {-a, -1, 0};
    return {a, 1, 0};
  }
  ExtGcd r = ext_gcd(b, a % b);
  return {r.g, r.v, r.u - (a / b) * r.v};
}

}  // namespace traag
