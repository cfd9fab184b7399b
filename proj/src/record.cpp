#include "psd/record.hpp"

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace psd {

std::string profile_text(const CorrelationProfile& p) {
  return fmt::format("{{{} | {}}}", p.d1, fmt::join(p.histogram, ", "));
}

Json to_record(const CorrelationProfile& p) {
  Json hist = Json::array();
  for (std::size_t i = 0; i < p.histogram.size(); ++i)
    hist.push_back({{"distance", p.d1 + static_cast<int>(i)}, {"count", p.histogram[i]}});
  return {{"peak", p.peak}, {"sidelobe", p.nearest_sidelobe}, {"d1", p.d1}, {"histogram", hist}};
}

Json to_record(const BinaryMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    std::string row;
    for (int j = 0; j < m.cols(); ++j) row += m(i, j) ? '1' : '0';
    rows.push_back(row);
  }
  return rows;
}

Json to_record(const DesignClass& c) {
  if (const auto* ds = std::get_if<DifferenceSet>(&c))
    return {{"type", "DS"}, {"v", ds->v}, {"k", ds->k}, {"lambda", ds->lambda}};
  if (const auto* ads = std::get_if<AlmostDifferenceSet>(&c))
    return {{"type", "ADS"}, {"v", ads->v}, {"k", ads->k}, {"lambda", ads->lambda}, {"t", ads->t}};
  return {{"type", "generic"}, {"levels", std::get<GenericSet>(c).levels}};
}

Json to_record(const DifferenceSpectrum& s) {
  Json levels = Json::array();
  for (std::size_t i = 0; i < s.levels.size(); ++i) levels.push_back({{"multiplicity", s.levels[i]}, {"residues", s.level_counts[i]}});
  return {{"v", s.modulus},
          {"k", s.size},
          {"levels", levels},
          {"lambda_max", s.lambda_max},
          {"periodic_distance", s.periodic_distance},
          {"consecutive_pairs", s.consecutive_pairs},
          {"bound", bv_bound(s.modulus)}};
}

Json to_record(const SOptimalityReport& r) {
  return {{"class", to_string(r.cls)},
          {"unit_shift_q", r.unit_shift_q},
          {"closed_form_q", r.closed_form_q},
          {"measured_q", r.measured_q},
          {"sidelobe_at_unit_shift", r.sidelobe_at_unit_shift},
          {"bound", r.bound}};
}

Json to_record(const VerificationReport& r) {
  Json out = {{"set", to_text(r.set)},
              {"design", to_record(r.design)},
              {"claimed", to_record(r.claim.design)},
              {"promised_class", to_string(r.claim.promised)},
              {"special", r.special},
              {"design_matches", r.design_matches},
              {"class_matches", r.class_matches},
              {"spectrum", to_record(r.spectrum)}};
  if (r.special) out["soptimality"] = to_record(r.soptimality);
  return out;
}

Json to_record(const GoodMatrixReport& r) {
  Json punctures = Json::array();
  for (const auto& c : r.matrix.punctures) punctures.push_back({c.row, c.col});
  return {{"set", to_text(r.set)},
          {"interior", to_record(r.interior)},
          {"order", r.matrix.full.rows()},
          {"punctures", punctures},
          {"matrix", to_record(r.matrix.full)},
          {"profile", to_record(r.profile)},
          {"predicted", r.predicted},
          {"measured", r.measured},
          {"unit_shift_measured", r.unit_shift_measured},
          {"unit_shift_expected", r.unit_shift_expected},
          {"sidelobe_at_unit_shift", r.sidelobe_at_unit_shift},
          {"verified", r.verified}};
}

Json to_record(const SearchResult& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(to_record(w));
  return {{"best_profile", to_record(r.best_profile)},
          {"witness_count", r.witness_count},
          {"witnesses", witnesses},
          {"explored", r.explored}};
}

Json to_record(const ObservationReport& r) {
  return {{"nearest_sidelobe", r.nearest_sidelobe},
          {"unit_shift_sidelobe", r.unit_shift_sidelobe},
          {"at_unit_shift", r.at_unit_shift},
          {"interior_row_ones", r.interior_row_ones},
          {"interior_col_ones", r.interior_col_ones},
          {"border", {{"top", r.top}, {"bottom", r.bottom}, {"left", r.left}, {"right", r.right}}},
          {"border_ones", r.border_ones},
          {"border_cells", r.border_cells}};
}

Json to_record(const TableRow& r) {
  return {{"group", r.group},
          {"family", family_name(r.spec.family)},
          {"parameter", r.spec.parameter},
          {"order", r.order},
          {"design", to_record(r.design)},
          {"design_ok", r.design_ok},
          {"listed", r.published},
          {"predicted", r.formula},
          {"measured", r.measured},
          {"unit_shift", r.unit_shift},
          {"pass", r.pass()}};
}

}  // namespace psd
