#pragma once

#include <string>
#include <vector>

#include "psd/constructions.hpp"
#include "psd/design.hpp"

namespace psd {

/// One reproduced row: a construction pushed through the bordered pipeline and
/// compared with its published distance.
struct TableRow {
  std::string group;             // "order 7", "A/B/C/D p=7", ...
  ConstructionSpec spec;
  int order = 0;                 // bordered size
  DesignClass expected_design;
  DesignClass design;            // measured from the spectrum
  int published = 0;             // distance listed for the row
  int formula = 0;               // predicted_distance for the measured class
  int measured = 0;              // full d1
  int unit_shift = 0;            // A(0,0) - max unit-shift sidelobe
  bool design_ok = false;
  bool pass() const { return design_ok && measured == published; }
};

/// Orders 7 through 19 from single constructions.
std::vector<TableRow> order_table();

/// Family rows with closed-form distances, at the three smallest admissible
/// parameters of every family in the row.
std::vector<TableRow> family_table();

/// Closed-form family distances, keyed by interior size v.
int family_formula_paley(int v);       // (v+1)(B_v+1)+4
int family_formula_ads_plus0(int p);   // (p+1)(B_p+1)+5
int family_formula_ads(int p);         // (p+1)(B_p+1)+6
int family_formula_z4p(int p);         // (4p+1)(floor(4p^2/(4p-1))+1)+4

}  // namespace psd
