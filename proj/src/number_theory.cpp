#include "psd/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

#include "psd/error.hpp"

namespace psd {

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  using u128 = unsigned __int128;
  std::uint64_t result = 1 % static_cast<std::uint64_t>(mod);
  std::uint64_t b = static_cast<std::uint64_t>(((base % mod) + mod) % mod);
  const auto m = static_cast<std::uint64_t>(mod);
  while (exp > 0) {
    if (exp & 1) result = static_cast<std::uint64_t>(static_cast<u128>(result) * b % m);
    b = static_cast<std::uint64_t>(static_cast<u128>(b) * b % m);
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t multiplicative_order(std::int64_t a, std::int64_t p) {
  if (std::gcd(a, p) != 1) throw InputError(fmt::format("{} is not invertible mod {}", a, p));
  // Works for prime p, where the group order is p-1.
  std::int64_t order = p - 1;
  for (auto q : prime_factors(p - 1)) {
    while (order % q == 0 && pow_mod(a, order / q, p) == 1) order /= q;
  }
  return order;
}

int primitive_root(int p) {
  if (!is_prime(p)) throw InputError(fmt::format("primitive_root: {} is not prime", p));
  if (p == 2) return 1;
  const auto factors = prime_factors(p - 1);
  for (int g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](auto q) { return pow_mod(g, (p - 1) / q, p) != 1; })) {
      return g;
    }
  }
  throw VerificationError(fmt::format("no primitive root found for prime {}", p));
}

std::vector<int> primitive_roots(int p) {
  if (!is_prime(p)) throw InputError(fmt::format("primitive_roots: {} is not prime", p));
  const auto factors = prime_factors(p - 1);
  std::vector<int> out;
  for (int g = 2; g < p; ++g) {
    if (std::all_of(factors.begin(), factors.end(), [&](auto q) { return pow_mod(g, (p - 1) / q, p) != 1; })) {
      out.push_back(g);
    }
  }
  return out;
}

int quadratic_character(int x, int p) {
  x = ((x % p) + p) % p;
  if (x == 0) return 0;
  return pow_mod(x, (p - 1) / 2, p) == 1 ? 1 : -1;
}

std::vector<int> quadratic_residues(int p) {
  std::vector<int> out;
  for (int x = 1; x < p; ++x)
    if (quadratic_character(x, p) == 1) out.push_back(x);
  return out;
}

std::vector<int> quadratic_nonresidues(int p) {
  std::vector<int> out;
  for (int x = 1; x < p; ++x)
    if (quadratic_character(x, p) == -1) out.push_back(x);
  return out;
}

int crt(int a, int m1, int b, int m2) {
  if (std::gcd(m1, m2) != 1) throw InputError(fmt::format("crt: moduli {} and {} are not coprime", m1, m2));
  // n = a + m1 t; moduli here are small, so scan t
  for (int t = 0; t < m2; ++t) {
    const int n = a + m1 * t;
    if (((n - b) % m2 + m2) % m2 == 0) return ((n % (m1 * m2)) + m1 * m2) % (m1 * m2);
  }
  throw VerificationError("crt: no solution");
}

}  // namespace psd
