#pragma once

// Integer helpers for exponent arithmetic on F_q^*.  Everything here works
// on 64-bit values; callers keep q below 2^31 so products of two exponents
// never overflow.

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

namespace hullforge::arith {

__extension__ typedef unsigned __int128 u128;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

/// Distinct prime factors in increasing order.
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_mul_overflow(a, b, &r)) return std::nullopt;
  return r;
}

inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    auto next = checked_mul(r, base);
    if (!next) return std::nullopt;
    r = *next;
  }
  return r;
}

inline bool divides(std::uint64_t d, std::uint64_t n) { return d != 0 && n % d == 0; }

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<u128>(a) * b) % m);
}

/// Inverse of a modulo m, when gcd(a, m) = 1.
inline std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t tmp = old_r - quot * r;
    old_r = r;
    r = tmp;
    tmp = old_s - quot * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) return std::nullopt;
  std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

/// Smallest s >= 0 with s * a == b (mod m), if any.
inline std::optional<std::uint64_t> solve_linear_congruence(std::uint64_t a, std::uint64_t b,
                                                             std::uint64_t m) {
  a %= m;
  b %= m;
  std::uint64_t g = std::gcd(a, m);
  if (g == 0) g = m;
  if (b % g != 0) return std::nullopt;
  std::uint64_t mg = m / g;
  if (mg == 1) return 0;
  auto inv = inverse_mod(a / g, mg);
  return mul_mod(b / g, *inv, mg);
}

}  // namespace hullforge::arith
