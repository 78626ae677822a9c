#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

namespace cdg {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Prime factorization by trial division, ascending primes.
inline std::vector<std::pair<std::uint64_t, std::uint32_t>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    std::uint32_t m = 0;
    while (n % p == 0) n /= p, ++m;
    out.emplace_back(p, m);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (auto& [p, m] : factorize(n)) out.push_back(p);
  return out;
}

inline std::uint64_t totient(std::uint64_t n) {
  std::uint64_t t = n;
  for (auto& [p, m] : factorize(n)) t -= t / p;
  return t;
}

inline std::vector<std::uint64_t> divisors_sorted(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d) continue;
    out.push_back(d);
    if (d != n / d) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// floor of the integer square root.
inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_perfect_square(std::uint64_t n, std::uint64_t* root = nullptr) {
  std::uint64_t r = isqrt(n);
  if (root) *root = r;
  return r * r == n;
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

/// Multiplicative order of a modulo m; pre: gcd(a, m) = 1.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m, k = 1;
  while (x != 1 % m) {
    x = x * (a % m) % m;
    ++k;
  }
  return k;
}

}  // namespace cdg
