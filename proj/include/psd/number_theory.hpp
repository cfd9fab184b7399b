#pragma once

#include <cstdint>
#include <vector>

namespace psd {

bool is_prime(std::int64_t n);

/// Distinct prime factors, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t n);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);

/// Multiplicative order of a modulo p (a coprime to p).
std::int64_t multiplicative_order(std::int64_t a, std::int64_t p);

/// Smallest generator of (Z/p)^* that is >= 2. Throws for non-primes.
int primitive_root(int p);

/// Every primitive root of p in ascending order.
std::vector<int> primitive_roots(int p);

/// +1 for nonzero squares mod p, -1 for non-squares, 0 for 0.
int quadratic_character(int x, int p);

/// Quadratic residues {x^2 mod p : x != 0}, ascending.
std::vector<int> quadratic_residues(int p);
std::vector<int> quadratic_nonresidues(int p);

/// The n in [0, m1*m2) with n = a mod m1 and n = b mod m2 (m1, m2 coprime).
int crt(int a, int m1, int b, int m2);

}  // namespace psd
