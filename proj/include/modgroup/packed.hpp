#pragma once

// Bit-level kernels on sign sequences of length n <= 64.
//
// Layout: element i (0-based) sits at bit n-1-i, so the first sign is the most
// significant bit. A set bit means -1. With this layout lexicographic order
// (+1 before -1) coincides with unsigned integer order.

#include <cstdint>

namespace modgroup::packed {

using Bits = std::uint64_t;

inline constexpr unsigned kMaxLength = 64;

constexpr Bits mask(unsigned n) {
  return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1;
}

/// Block rotation: result[i] = x[i - k] (indices mod n).
constexpr Bits rotate(Bits x, unsigned n, unsigned k) {
  k %= n;
  if (k == 0) return x;
  return ((x >> k) | (x << (n - k))) & mask(n);
}

constexpr Bits negate(Bits x, unsigned n) { return x ^ mask(n); }

constexpr Bits reverse(Bits x, unsigned n) {
  x = ((x >> 1) & 0x5555555555555555ULL) | ((x & 0x5555555555555555ULL) << 1);
  x = ((x >> 2) & 0x3333333333333333ULL) | ((x & 0x3333333333333333ULL) << 2);
  x = ((x >> 4) & 0x0F0F0F0F0F0F0F0FULL) | ((x & 0x0F0F0F0F0F0F0F0FULL) << 4);
  x = ((x >> 8) & 0x00FF00FF00FF00FFULL) | ((x & 0x00FF00FF00FF00FFULL) << 8);
  x = ((x >> 16) & 0x0000FFFF0000FFFFULL) | ((x & 0x0000FFFF0000FFFFULL) << 16);
  x = (x >> 32) | (x << 32);
  return x >> (64 - n);
}

constexpr Bits canonical(Bits x, unsigned n) {
  Bits best = x;
  for (unsigned k = 1; k < n; ++k) {
    const Bits r = rotate(x, n, k);
    if (r < best) best = r;
  }
  return best;
}

/// True iff x is the minimum of its rotation orbit. Exits at the first
/// smaller rotation, which is what makes the canonical-filter enumeration cheap.
constexpr bool is_canonical(Bits x, unsigned n) {
  for (unsigned k = 1; k < n; ++k) {
    if (rotate(x, n, k) < x) return false;
  }
  return true;
}

constexpr unsigned period(Bits x, unsigned n) {
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0 && rotate(x, n, d) == x) return d;
  }
  return n;
}

constexpr bool is_rotation_of(Bits y, Bits x, unsigned n) {
  for (unsigned k = 0; k < n; ++k) {
    if (rotate(x, n, k) == y) return true;
  }
  return false;
}

/// Least m in [1, n) with x[m+i] = -x[i] for all i, or 0 when none exists.
constexpr unsigned least_antiperiod(Bits x, unsigned n) {
  if (n % 2 != 0) return 0;
  const Bits neg = negate(x, n);
  for (unsigned m = 1; m < n; ++m) {
    if (rotate(x, n, m) == neg) return m;
  }
  return 0;
}

constexpr bool has_antiperiod(Bits x, unsigned n, unsigned m) {
  return rotate(x, n, m) == negate(x, n);
}

constexpr bool is_palindrome(Bits x, unsigned n) { return reverse(x, n) == x; }

constexpr bool has_palindromic_rotation(Bits x, unsigned n) {
  for (unsigned k = 0; k < n; ++k) {
    if (is_palindrome(rotate(x, n, k), n)) return true;
  }
  return false;
}

constexpr bool is_constant(Bits x, unsigned n) { return x == 0 || x == mask(n); }

}  // namespace modgroup::packed
