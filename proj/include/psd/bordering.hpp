#pragma once

#include <array>
#include <vector>

#include "psd/binary_matrix.hpp"
#include "psd/constructions.hpp"
#include "psd/correlation.hpp"
#include "psd/design.hpp"
#include "psd/residue_set.hpp"

namespace psd {

/// 1-based (row, col) position in a bordered matrix.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Border cells whose orthogonal interior neighbour is 1, corners excluded.
struct SSets {
  std::vector<Cell> top;
  std::vector<Cell> bottom;
  std::vector<Cell> left;
  std::vector<Cell> right;
};

/// One cell per side, in the order top, bottom, left, right.
using Punctures = std::array<Cell, 4>;

struct BorderedMatrix {
  BinaryMatrix interior;
  BinaryMatrix full;
  Punctures punctures;
};

/// Surrounds R with a ring of 1s.
BinaryMatrix border(const BinaryMatrix& r);

SSets s_sets(const BinaryMatrix& rp);

/// From each side, the cell closest to the centre (v+1)/2, lower index on ties.
/// Throws InputError("construction inapplicable") if any side is empty.
Punctures choose_punctures(const SSets& sets, int v);

/// Every valid choice, one cell per side.
std::vector<Punctures> all_punctures(const SSets& sets);

/// Zeroes the four cells. Throws InputError unless each cell lies on its side,
/// is not a corner, is currently 1 and has a 1 as interior neighbour.
BinaryMatrix puncture(const BinaryMatrix& rp, const Punctures& cells);

/// Claimed distance of the punctured matrix: (v-1)B_{v-2} + 2(v-k) + 3 for an
/// s-optimal interior, + 2 for a near s-optimal one. v is the bordered order.
int predicted_distance(int v, int k, SOptimality cls);

/// Unit-shift distance A(0,0) - max A(+-1,0), A(0,+-1) of the punctured matrix:
/// (v-1)B_{v-2} + 2(v-k) + 1 (s-optimal) or + 0 (near s-optimal).
int unit_shift_distance_formula(int v, int k, SOptimality cls);

/// Circulant, border and default puncture for a defining set.
BorderedMatrix bordered_from_set(const ResidueSet& d);

struct GoodMatrixReport {
  ResidueSet set;
  SOptimalityReport interior;
  BorderedMatrix matrix;
  CorrelationProfile profile;
  int predicted = 0;             // claimed d1
  int measured = 0;              // d1 of the full table
  int unit_shift_measured = 0;
  int unit_shift_expected = 0;   // interior unit-shift Q + 2(v-k)
  bool sidelobe_at_unit_shift = false;
  bool verified = false;         // measured == predicted
};

/// Full pipeline for a construction. The measured unit-shift distance must equal
/// the interior's plus 2(v-k) (VerificationError otherwise). Whether the full
/// d1 matches the claimed value is reported in `verified`.
GoodMatrixReport build_good_matrix(const ConstructionSpec& spec);
GoodMatrixReport build_good_matrix(const ResidueSet& d);

}  // namespace psd
