#include "psd/tables.hpp"

#include <fmt/format.h>

#include "psd/bordering.hpp"

namespace psd {
namespace {

TableRow run_row(std::string group, ConstructionSpec spec, DesignClass expected, int published) {
  TableRow row;
  row.group = std::move(group);
  row.spec = spec;
  row.expected_design = expected;
  row.published = published;
  const auto rep = build_good_matrix(spec);
  row.order = rep.matrix.full.rows();
  row.design = classify(rep.set);
  row.design_ok = row.design == expected;
  row.formula = rep.predicted;
  row.measured = rep.measured;
  row.unit_shift = rep.unit_shift_measured;
  return row;
}

DesignClass paley_params(int v) { return DifferenceSet{v, (v + 1) / 2, (v + 1) / 4}; }
DesignClass ads_plus0_params(int p) { return AlmostDifferenceSet{p, (p + 1) / 2, (p - 1) / 4, (p - 1) / 2}; }
DesignClass ads_params(int p) { return AlmostDifferenceSet{p, (p - 1) / 2, (p - 5) / 4, (p - 1) / 2}; }
DesignClass z4p_params(int p) { return AlmostDifferenceSet{4 * p, 2 * p + 1, p, p - 1}; }

}  // namespace

int family_formula_paley(int v) { return (v + 1) * (bv_bound(v) + 1) + 4; }
int family_formula_ads_plus0(int p) { return (p + 1) * (bv_bound(p) + 1) + 5; }
int family_formula_ads(int p) { return (p + 1) * (bv_bound(p) + 1) + 6; }
int family_formula_z4p(int p) { return (4 * p + 1) * (4 * p * p / (4 * p - 1) + 1) + 4; }

std::vector<TableRow> order_table() {
  std::vector<TableRow> rows;
  rows.push_back(run_row("order 7", {Family::qnr, 5, 0}, AlmostDifferenceSet{5, 2, 0, 2}, 18));
  rows.push_back(run_row("order 9", {Family::paley_a, 7, 0}, DifferenceSet{7, 4, 2}, 28));
  rows.push_back(run_row("order 13", {Family::paley_a, 11, 0}, DifferenceSet{11, 6, 3}, 52));
  rows.push_back(run_row("order 14", {Family::z4p, 3, 0}, AlmostDifferenceSet{12, 7, 3, 2}, 56));
  rows.push_back(run_row("order 15", {Family::qnr, 13, 0}, AlmostDifferenceSet{13, 6, 2, 6}, 62));
  rows.push_back(run_row("order 15", {Family::quartic, 13, 0}, AlmostDifferenceSet{13, 6, 2, 6}, 62));
  rows.push_back(run_row("order 17", {Family::singer_b, 4, 0}, DifferenceSet{15, 8, 4}, 84));
  rows.push_back(run_row("order 17", {Family::twin_prime_c, 3, 0}, DifferenceSet{15, 8, 4}, 84));
  rows.push_back(run_row("order 19", {Family::qnr, 17, 0}, AlmostDifferenceSet{17, 8, 3, 8}, 96));
  return rows;
}

std::vector<TableRow> family_table() {
  std::vector<TableRow> rows;
  auto paley = [&](Family f, int param, int v) {
    rows.push_back(run_row("row 1 DS", {f, param, 0}, paley_params(v), family_formula_paley(v)));
  };
  for (int p : {3, 7, 11}) paley(Family::paley_a, p, p);
  for (int t : {3, 4, 5}) paley(Family::singer_b, t, (1 << t) - 1);
  for (int p : {3, 5, 11}) paley(Family::twin_prime_c, p, p * (p + 2));
  for (int p : {31, 43, 127}) paley(Family::hall_d, p, p);
  for (int p : {5, 13, 17})
    rows.push_back(run_row("row 2 ADS+0", {Family::qr_plus0, p, 0}, ads_plus0_params(p), family_formula_ads_plus0(p)));
  for (int p : {5, 13, 29})
    rows.push_back(
        run_row("row 2 ADS+0", {Family::quartic_plus0, p, 0}, ads_plus0_params(p), family_formula_ads_plus0(p)));
  for (int p : {5, 13, 17})
    rows.push_back(run_row("row 3 ADS", {Family::qnr, p, 0}, ads_params(p), family_formula_ads(p)));
  for (int p : {5, 13, 29})
    rows.push_back(run_row("row 3 ADS", {Family::quartic, p, 0}, ads_params(p), family_formula_ads(p)));
  for (int p : {3, 7, 11}) rows.push_back(run_row("row 4 Z4p", {Family::z4p, p, 0}, z4p_params(p), family_formula_z4p(p)));
  return rows;
}

}  // namespace psd
