#pragma once

#include <string>
#include <variant>
#include <vector>

#include "psd/binary_matrix.hpp"
#include "psd/residue_set.hpp"

namespace psd {

/// Multiplicities of the nonzero differences a - b (a != b) of a set in Z_v.
struct DifferenceSpectrum {
  int modulus = 0;
  int size = 0;                     // k
  std::vector<int> multiplicity;    // indexed by residue; entry 0 is unused and kept at 0
  std::vector<int> levels;          // distinct multiplicities, ascending
  std::vector<int> level_counts;    // residues at each level
  int lambda_max = 0;               // largest level
  int periodic_distance = 0;        // k - lambda_max
  int consecutive_pairs = 0;        // |{x in D : x+1 mod v in D}|
};

struct DifferenceSet {
  int v, k, lambda;
  friend bool operator==(const DifferenceSet&, const DifferenceSet&) = default;
};
struct AlmostDifferenceSet {
  int v, k, lambda, t;
  friend bool operator==(const AlmostDifferenceSet&, const AlmostDifferenceSet&) = default;
};
struct GenericSet {
  int levels;
  friend bool operator==(const GenericSet&, const GenericSet&) = default;
};
using DesignClass = std::variant<DifferenceSet, AlmostDifferenceSet, GenericSet>;

std::string to_string(const DesignClass& c);

/// Requires 2 <= k < v; throws InputError("degenerate set") otherwise.
DifferenceSpectrum difference_spectrum(const ResidueSet& d);

DesignClass classify(const DifferenceSpectrum& s);
DesignClass classify(const ResidueSet& d);

/// Cyclic consecutive pairs equal lambda_max.
bool is_special(const DifferenceSpectrum& s);
bool is_special(const ResidueSet& d);

/// floor(v^2 / (4(v-1))), the largest periodic distance a subset of Z_v can have.
int bv_bound(int v);

/// (v+1) B_v + 1.
int special_bound(int v);

/// The equality condition |k - v/2|^2 + sum delta_i t_i == v^2/4 - (v-1) B_v,
/// evaluated with both sides multiplied by 4.
bool equality_condition(const DifferenceSpectrum& s);
bool equality_condition(const ResidueSet& d);

/// v x v circulant with R[g][h] = 1 iff h - g mod v is in D (row g is D + g).
BinaryMatrix circulant(const ResidueSet& d);

ResidueSet complement(const ResidueSet& d);

enum class SOptimality { s_optimal, near_s_optimal, neither };
std::string to_string(SOptimality c);

struct SOptimalityReport {
  SOptimality cls = SOptimality::neither;
  int unit_shift_q = 0;      // A(0,0) - max A(+-1,0), A(0,+-1), measured
  int closed_form_q = 0;     // v(k - lambda_max) + lambda_max
  int measured_q = 0;        // d1 over the full autocorrelation table
  bool sidelobe_at_unit_shift = false;
  int bound = 0;             // (v+1) B_v + 1
};

/// Classifies a special set's circulant against (v+1)B_v + 1 and (v+1)B_v.
/// The class is read off the measured unit-shift distance, which must agree
/// with the closed form (VerificationError otherwise). Throws InputError if
/// the set is not special.
SOptimalityReport soptimality(const ResidueSet& d);

}  // namespace psd
