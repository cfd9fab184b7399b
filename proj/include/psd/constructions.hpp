#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "psd/design.hpp"
#include "psd/residue_set.hpp"

namespace psd {

enum class Family { paley_a, singer_b, twin_prime_c, hall_d, qr_plus0, qnr, z4p, quartic, quartic_plus0 };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// Which generator to run and with what parameter. `parameter` is the prime p
/// for every family except singer_b, where it is the degree t.
struct ConstructionSpec {
  Family family = Family::paley_a;
  int parameter = 0;
  int class_index = 0;  // quartic families only
};

/// QR(p) + {0}, p = 3 (mod 4): a (p, (p+1)/2, (p+1)/4) difference set.
ResidueSet paley_a(int p);

/// Support of one period of the binary m-sequence of period 2^t - 1, 3 <= t <= 16.
ResidueSet singer_b(int t);

/// Twin-prime set in Z_p x Z_{p+2}, carried to Z_{p(p+2)} by n -> (n mod p, n mod p+2).
ResidueSet twin_prime_c(int p);

/// C_0 + C_1 + C_3 + {0} over order-6 classes, p = 4s^2 + 27. The primitive root
/// and class rotation are searched until the set verifies as a difference set.
ResidueSet hall_d(int p);

/// p = 1 (mod 4): QR(p) + {0} when with_zero, else the non-residues.
ResidueSet qr_variants(int p, bool with_zero);

/// ({0} x QR) + ({1,2,3} x QNR) + {(0,0),(1,0),(3,0)} in Z_4 x Z_p, carried to Z_{4p} by CRT.
ResidueSet z4p_ads(int p);

/// C_i + C_{i+1} (+ {0}) over order-4 classes, with the primitive root chosen so
/// that y = -1 in p = x^2 + 4y^2. Requires p = 5 (mod 8), |y| = 1 and i in {0, 2}.
ResidueSet quartic_union(int p, int i, bool with_zero);

/// Primitive polynomial of degree t over GF(2) from the built-in table, as a
/// bit mask including the x^t term.
std::uint32_t primitive_polynomial(int t);

ResidueSet generate(const ConstructionSpec& spec);

/// Design parameters the construction promises. For singer_b, lambda is
/// left unset (the computed value is reported instead).
struct ClaimedDesign {
  DesignClass design;
  bool lambda_computed = false;
  SOptimality promised = SOptimality::neither;
};
ClaimedDesign claimed_design(const ConstructionSpec& spec);

struct VerificationReport {
  ResidueSet set;
  DifferenceSpectrum spectrum;
  DesignClass design;
  bool special = false;
  SOptimalityReport soptimality;
  ClaimedDesign claim;
  bool design_matches = false;
  bool class_matches = false;
  bool ok() const { return special && design_matches && class_matches; }
};

/// Generates the set and checks it against its claims.
VerificationReport verify_construction(const ConstructionSpec& spec);

}  // namespace psd
