#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "psd/bordering.hpp"
#include "psd/error.hpp"
#include "psd/reference_matrices.hpp"

using psd::BinaryMatrix;
using psd::Cell;
using psd::Family;
using psd::ResidueSet;

TEST_CASE("border") {
  const auto a = psd::border(BinaryMatrix::from_rows({"0"}));
  CHECK(a == BinaryMatrix::from_rows({"111", "101", "111"}));
  CHECK(psd::border(BinaryMatrix::from_rows({"11", "11"})) == BinaryMatrix::from_rows({"1111", "1111", "1111", "1111"}));
  const auto r = psd::circulant(ResidueSet(5, {2, 3}));
  const auto rp = psd::border(r);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(rp(i + 1, j + 1) == r(i, j));
}

TEST_CASE("S-sets of the QNR(5) border") {
  const auto s = psd::s_sets(psd::border(psd::circulant(ResidueSet(5, {2, 3}))));
  CHECK(s.top == std::vector<Cell>{{1, 4}, {1, 5}});
  CHECK(s.bottom == std::vector<Cell>{{7, 3}, {7, 4}});
  CHECK(s.left == std::vector<Cell>{{4, 1}, {5, 1}});
  CHECK(s.right == std::vector<Cell>{{3, 7}, {4, 7}});
  const auto pick = psd::choose_punctures(s, 7);
  CHECK(pick == psd::Punctures{Cell{1, 4}, Cell{7, 4}, Cell{4, 1}, Cell{4, 7}});
}

TEST_CASE("S-sets of the QR(7)+{0} border") {
  const auto s = psd::s_sets(psd::border(psd::circulant(ResidueSet(7, {0, 1, 2, 4}))));
  CHECK(s.top == std::vector<Cell>{{1, 2}, {1, 3}, {1, 4}, {1, 6}});
  CHECK(s.left == std::vector<Cell>{{2, 1}, {5, 1}, {7, 1}, {8, 1}});
  // recomputed from the matrix
  CHECK(s.right == std::vector<Cell>{{4, 9}, {6, 9}, {7, 9}, {8, 9}});
  const auto pick = psd::choose_punctures(s, 9);
  CHECK(pick[0] == Cell{1, 4});
  CHECK(pick[2] == Cell{5, 1});
  const auto m = psd::puncture(psd::border(psd::circulant(ResidueSet(7, {0, 1, 2, 4}))),
                               {Cell{1, 4}, Cell{9, 5}, Cell{5, 1}, Cell{6, 9}});
  CHECK(m == psd::reference::bordered_qr7());
}

TEST_CASE("empty interior and singleton sets") {
  const auto s = psd::s_sets(psd::border(BinaryMatrix(3, 3)));
  CHECK(s.top.empty());
  CHECK(s.right.empty());
  CHECK_THROWS_WITH_AS(psd::choose_punctures(s, 5), doctest::Contains("construction inapplicable"), psd::InputError);
  psd::SSets one{{{1, 3}}, {{5, 2}}, {{2, 1}}, {{4, 5}}};
  CHECK(psd::choose_punctures(one, 5) == psd::Punctures{Cell{1, 3}, Cell{5, 2}, Cell{2, 1}, Cell{4, 5}});
}

TEST_CASE("puncture validation and undo") {
  const auto rp = psd::border(psd::circulant(ResidueSet(5, {2, 3})));
  const psd::Punctures good{Cell{1, 4}, Cell{7, 4}, Cell{4, 1}, Cell{4, 7}};
  const auto m = psd::puncture(rp, good);
  CHECK(m == psd::reference::bordered_qnr5());
  auto undo = m;
  for (const auto& c : good) undo.set(c.row - 1, c.col - 1, true);
  CHECK(undo == rp);
  CHECK_THROWS_AS(psd::puncture(rp, {Cell{1, 1}, Cell{7, 4}, Cell{4, 1}, Cell{4, 7}}), psd::InputError);  // corner
  CHECK_THROWS_AS(psd::puncture(rp, {Cell{1, 2}, Cell{7, 4}, Cell{4, 1}, Cell{4, 7}}), psd::InputError);  // neighbour 0
  CHECK_THROWS_AS(psd::puncture(rp, {Cell{7, 4}, Cell{1, 4}, Cell{4, 1}, Cell{4, 7}}), psd::InputError);  // wrong side
  CHECK_THROWS_AS(psd::puncture(rp, {Cell{1, 4}, Cell{7, 4}, Cell{4, 1}, Cell{4, 1}}), psd::InputError);  // duplicate side
}

TEST_CASE("distance formulas") {
  CHECK(psd::predicted_distance(7, 2, psd::SOptimality::near_s_optimal) == 18);
  CHECK(psd::predicted_distance(9, 4, psd::SOptimality::near_s_optimal) == 28);
  CHECK(psd::predicted_distance(14, 7, psd::SOptimality::s_optimal) == 56);
  CHECK(psd::unit_shift_distance_formula(7, 2, psd::SOptimality::near_s_optimal) == 16);
  CHECK_THROWS_AS(psd::predicted_distance(7, 5, psd::SOptimality::s_optimal), psd::InputError);
  CHECK_THROWS_AS(psd::predicted_distance(7, 2, psd::SOptimality::neither), psd::InputError);
}

TEST_CASE("pipeline measurements") {
  // measured by the direct loop; published values are 18, 28 and 52
  const auto a = psd::build_good_matrix(psd::ConstructionSpec{Family::qnr, 5, 0});
  CHECK(a.matrix.full == psd::reference::bordered_qnr5());
  CHECK(a.measured == oracle::profile(oracle::grid(a.matrix.full)).d1);
  CHECK(a.measured == 16);
  CHECK(a.predicted == 18);
  CHECK_FALSE(a.verified);
  CHECK(a.sidelobe_at_unit_shift);
  const auto b = psd::build_good_matrix(psd::ConstructionSpec{Family::paley_a, 7, 0});
  CHECK(b.measured == oracle::profile(oracle::grid(b.matrix.full)).d1);
  CHECK(b.unit_shift_measured == 26);
  const auto c = psd::build_good_matrix(psd::ConstructionSpec{Family::paley_a, 11, 0});
  CHECK(c.unit_shift_measured == 50);
  CHECK(c.predicted == 52);
}

TEST_CASE("bordered invariants over all puncture choices") {
  const std::vector<ResidueSet> sets = {psd::qr_variants(5, false), psd::qr_variants(5, true), psd::paley_a(3),
                                        psd::paley_a(7),            psd::paley_a(11),          psd::qr_variants(13, true),
                                        psd::qr_variants(13, false), psd::z4p_ads(3)};
  for (const auto& d : sets) {
    CAPTURE(psd::to_text(d));
    const auto sopt = psd::soptimality(d);
    const auto rp = psd::border(psd::circulant(d));
    const int v = rp.rows();
    const int k = d.size();
    // unpunctured: two less than after puncturing
    const int unp = (v - 1) * psd::bv_bound(v - 2) + 2 * (v - k) + (sopt.cls == psd::SOptimality::s_optimal ? 1 : 0) - 2;
    CHECK(psd::unit_shift_distance(rp) == unp);
    std::set<int> unit;
    for (const auto& cells : psd::all_punctures(psd::s_sets(rp))) {
      const auto m = psd::puncture(rp, cells);
      const auto p = psd::profile(m);
      unit.insert(psd::unit_shift_distance(m));
      CHECK(p.d1 <= psd::skirlo_bound(v, v, m.ones()));
      CHECK(p.d1 <= psd::unit_shift_distance(m));
    }
    CHECK(unit.size() == 1);
    CHECK(*unit.begin() == psd::unit_shift_distance_formula(v, k, sopt.cls));
  }
}
