#include <doctest.h>

#include <set>

#include "psd/error.hpp"
#include "psd/number_theory.hpp"

TEST_CASE("primality and factors") {
  CHECK(psd::is_prime(2));
  CHECK(psd::is_prime(127));
  CHECK_FALSE(psd::is_prime(1));
  CHECK_FALSE(psd::is_prime(143));
  CHECK(psd::prime_factors(360) == std::vector<std::int64_t>{2, 3, 5});
  CHECK(psd::pow_mod(3, 6, 7) == 1);
  CHECK(psd::multiplicative_order(2, 7) == 3);
}

TEST_CASE("primitive roots") {
  CHECK(psd::primitive_root(7) == 3);
  CHECK(psd::primitive_root(5) == 2);
  CHECK(psd::primitive_root(13) == 2);
  CHECK_THROWS_AS(psd::primitive_root(15), psd::InputError);
  for (int p : {3, 5, 7, 11, 13, 31, 43, 97}) {
    for (int g : psd::primitive_roots(p)) {
      std::set<int> seen;
      long x = 1;
      for (int i = 0; i < p - 1; ++i, x = x * g % p) seen.insert(static_cast<int>(x));
      CHECK(static_cast<int>(seen.size()) == p - 1);
    }
  }
}

TEST_CASE("quadratic character") {
  CHECK(psd::quadratic_residues(7) == std::vector<int>{1, 2, 4});
  CHECK(psd::quadratic_nonresidues(7) == std::vector<int>{3, 5, 6});
  CHECK(psd::quadratic_residues(13) == std::vector<int>{1, 3, 4, 9, 10, 12});
  CHECK(psd::quadratic_character(0, 7) == 0);
  CHECK(psd::quadratic_character(3, 7) == -1);
  CHECK(psd::quadratic_character(9, 7) == 1);
}

TEST_CASE("crt") {
  CHECK(psd::crt(1, 3, 1, 5) == 1);
  CHECK(psd::crt(2, 4, 0, 3) == 6);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 9; ++b) {
      const int n = psd::crt(a, 4, b, 9);
      CHECK(n % 4 == a);
      CHECK(n % 9 == b);
    }
  CHECK_THROWS_AS(psd::crt(0, 4, 0, 6), psd::InputError);
}
