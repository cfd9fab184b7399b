#include <doctest.h>

#include "oracles.hpp"
#include "psd/design.hpp"
#include "psd/error.hpp"
#include "psd/reference_matrices.hpp"

using psd::AlmostDifferenceSet;
using psd::DifferenceSet;
using psd::ResidueSet;

TEST_CASE("residue set text form") {
  const ResidueSet d(7, {4, 1, 9});
  CHECK(d.elements() == std::vector<int>{1, 2, 4});
  CHECK(psd::to_text(d) == "7: 1,2,4");
  CHECK(psd::parse_residue_set("7: 1,2,4") == d);
  CHECK(psd::parse_residue_set("5:") == ResidueSet(5, {}));
  CHECK_THROWS_AS(ResidueSet(7, {1, 8}), psd::InputError);
  CHECK_THROWS_AS(psd::parse_residue_set("7 1,2"), psd::InputError);
  CHECK_THROWS_AS(psd::parse_residue_set("7: 1,x"), psd::InputError);
}

TEST_CASE("spectrum of small sets") {
  const auto s = psd::difference_spectrum(ResidueSet(5, {2, 3}));
  CHECK(s.multiplicity == std::vector<int>{0, 1, 0, 0, 1});
  CHECK(s.lambda_max == 1);
  CHECK(s.periodic_distance == 1);
  CHECK(s.consecutive_pairs == 1);
  CHECK(psd::classify(s) == psd::DesignClass{AlmostDifferenceSet{5, 2, 0, 2}});
  CHECK(psd::classify(ResidueSet(7, {0, 1, 2, 4})) == psd::DesignClass{DifferenceSet{7, 4, 2}});
  CHECK(psd::classify(ResidueSet(7, {1, 2, 4})) == psd::DesignClass{DifferenceSet{7, 3, 1}});
  CHECK(psd::classify(ResidueSet(5, {0, 1})) == psd::DesignClass{AlmostDifferenceSet{5, 2, 0, 2}});
  CHECK(psd::to_string(psd::classify(ResidueSet(7, {0, 1, 2, 4}))) == "(7,4,2)-DS");
  CHECK(std::holds_alternative<psd::GenericSet>(psd::classify(ResidueSet(9, {0, 1, 2, 3}))));
  CHECK_THROWS_AS(psd::difference_spectrum(ResidueSet(5, {1})), psd::InputError);
  CHECK_THROWS_AS(psd::difference_spectrum(ResidueSet(3, {0, 1, 2})), psd::InputError);
}

TEST_CASE("spectrum matches brute force on every subset of Z_9") {
  for (unsigned mask = 0; mask < 512; ++mask) {
    std::vector<int> e;
    for (int x = 0; x < 9; ++x)
      if (mask >> x & 1) e.push_back(x);
    if (e.size() < 2 || e.size() == 9) continue;
    const auto s = psd::difference_spectrum(ResidueSet(9, e));
    const auto want = oracle::differences(e, 9);
    int total = 0;
    for (int g = 1; g < 9; ++g) {
      REQUIRE(s.multiplicity[g] == want[g]);
      REQUIRE(s.multiplicity[g] == s.multiplicity[9 - g]);
      total += want[g];
    }
    CHECK(total == static_cast<int>(e.size() * (e.size() - 1)));
    int level_total = 0;
    for (int c : s.level_counts) level_total += c;
    CHECK(level_total == 8);
  }
}

TEST_CASE("special sets") {
  CHECK(psd::is_special(ResidueSet(5, {2, 3})));
  CHECK(psd::is_special(ResidueSet(7, {0, 1, 2, 4})));
  CHECK_FALSE(psd::is_special(ResidueSet(5, {0, 2})));
  // wraparound pair (4,0) counts
  CHECK(psd::difference_spectrum(ResidueSet(5, {0, 4})).consecutive_pairs == 1);
}

TEST_CASE("bounds") {
  CHECK(psd::bv_bound(5) == 1);
  CHECK(psd::bv_bound(7) == 2);
  CHECK(psd::bv_bound(13) == 3);
  CHECK(psd::bv_bound(12) == 3);
  CHECK(psd::special_bound(5) == 7);
  CHECK(psd::special_bound(7) == 17);
  CHECK(psd::special_bound(12) == 40);
  CHECK(psd::equality_condition(ResidueSet(5, {2, 3})));
  CHECK(psd::equality_condition(ResidueSet(7, {0, 1, 2, 4})));
  CHECK(psd::equality_condition(ResidueSet(5, {0, 1})));
}

TEST_CASE("periodic distance bound and equality rule, v <= 10") {
  for (int v = 3; v <= 10; ++v) {
    for (unsigned mask = 0; mask < (1U << v); ++mask) {
      std::vector<int> e;
      for (int x = 0; x < v; ++x)
        if (mask >> x & 1) e.push_back(x);
      if (e.size() < 2 || static_cast<int>(e.size()) == v) continue;
      const auto s = psd::difference_spectrum(ResidueSet(v, e));
      REQUIRE(s.periodic_distance <= psd::bv_bound(v));
      REQUIRE((s.periodic_distance == psd::bv_bound(v)) == psd::equality_condition(s));
    }
  }
}

TEST_CASE("circulant orientation") {
  const auto r5 = psd::circulant(ResidueSet(5, {2, 3}));
  CHECK(r5 == psd::BinaryMatrix::from_rows({"00110", "00011", "10001", "11000", "01100"}));
  const auto r7 = psd::circulant(ResidueSet(7, {0, 1, 2, 4}));
  CHECK(r7 == psd::BinaryMatrix::from_rows(
                  {"1110100", "0111010", "0011101", "1001110", "0100111", "1010011", "1101001"}));
  CHECK(psd::circulant(ResidueSet(3, {0})) == psd::BinaryMatrix::from_rows({"100", "010", "001"}));
  for (int i = 0; i < 7; ++i) {
    CHECK(r7.row_ones(i) == 4);
    CHECK(r7.col_ones(i) == 4);
  }
}

TEST_CASE("unit shifts of random circulants agree") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    const int v = 2 + trial % 39;
    std::vector<int> e;
    std::bernoulli_distribution coin(0.4);
    for (int x = 0; x < v; ++x)
      if (coin(rng)) e.push_back(x);
    const auto g = oracle::grid(psd::circulant(ResidueSet(v, e)));
    const int a = oracle::corr(g, 1, 0);
    CHECK(oracle::corr(g, -1, 0) == a);
    CHECK(oracle::corr(g, 0, 1) == a);
    CHECK(oracle::corr(g, 0, -1) == a);
  }
}

TEST_CASE("unit-shift sidelobe of a special circulant is (v-1) Lambda") {
  for (const auto& d : {ResidueSet(5, {2, 3}), ResidueSet(7, {0, 1, 2, 4}), ResidueSet(13, {0, 1, 3, 4, 9, 10, 12})}) {
    const auto s = psd::difference_spectrum(d);
    REQUIRE(psd::is_special(s));
    const auto g = oracle::grid(psd::circulant(d));
    CHECK(oracle::corr(g, 0, 1) == (d.modulus() - 1) * s.lambda_max);
  }
}

TEST_CASE("s-optimality") {
  const auto a = psd::soptimality(ResidueSet(5, {2, 3}));
  CHECK(a.cls == psd::SOptimality::near_s_optimal);
  CHECK(a.unit_shift_q == 6);
  CHECK(a.closed_form_q == 6);
  const auto b = psd::soptimality(ResidueSet(7, {0, 1, 2, 4}));
  CHECK(b.cls == psd::SOptimality::near_s_optimal);
  CHECK(b.unit_shift_q == 16);
  // the (1,1) diagonal shift overlaps a 6x6 copy of the circulant
  CHECK(b.measured_q == oracle::profile(oracle::grid(psd::circulant(ResidueSet(7, {0, 1, 2, 4})))).d1);
  CHECK_FALSE(b.sidelobe_at_unit_shift);
  const auto c = psd::soptimality(ResidueSet(13, {0, 1, 3, 4, 9, 10, 12}));
  CHECK(c.cls == psd::SOptimality::s_optimal);
  CHECK(c.unit_shift_q == 43);
  CHECK(psd::to_string(c.cls) == "s-optimal");
  CHECK_THROWS_WITH_AS(psd::soptimality(ResidueSet(5, {0, 2})), doctest::Contains("not special"), psd::InputError);
}

TEST_CASE("complements") {
  CHECK(psd::complement(ResidueSet(7, {1, 2, 4})) == ResidueSet(7, {0, 3, 5, 6}));
  CHECK(psd::classify(ResidueSet(7, {0, 3, 5, 6})) == psd::DesignClass{DifferenceSet{7, 4, 2}});
  CHECK(psd::classify(psd::complement(ResidueSet(5, {0, 1}))) == psd::DesignClass{AlmostDifferenceSet{5, 3, 1, 2}});
  CHECK(psd::complement(ResidueSet(6, {})) == ResidueSet(6, {0, 1, 2, 3, 4, 5}));

  for (int v = 4; v <= 12; ++v) {
    for (unsigned mask = 0; mask < (1U << v); ++mask) {
      std::vector<int> e;
      for (int x = 0; x < v; ++x)
        if (mask >> x & 1) e.push_back(x);
      const int k = static_cast<int>(e.size());
      if (k < 2 || k > v - 2) continue;
      const ResidueSet d(v, e);
      const auto c = psd::classify(psd::complement(d));
      const auto cls = psd::classify(d);
      if (const auto* ds = std::get_if<DifferenceSet>(&cls)) {
        CHECK(c == psd::DesignClass{DifferenceSet{v, v - k, v - 2 * k + ds->lambda}});
      } else if (const auto* ads = std::get_if<AlmostDifferenceSet>(&cls)) {
        CHECK(c == psd::DesignClass{AlmostDifferenceSet{v, v - k, v - 2 * k + ads->lambda, ads->t}});
      }
    }
  }
}
