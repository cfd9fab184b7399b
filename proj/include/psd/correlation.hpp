#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "psd/binary_matrix.hpp"

namespace psd {

/// All aperiodic autocorrelation values of an M x N matrix, indexed by
/// shifts t1 in [-(M-1), M-1] and t2 in [-(N-1), N-1].
class AutocorrelationTable {
 public:
  AutocorrelationTable(int rows, int cols);

  int source_rows() const { return rows_; }
  int source_cols() const { return cols_; }
  int height() const { return 2 * rows_ - 1; }
  int width() const { return 2 * cols_ - 1; }

  int at(int t1, int t2) const { return values_[index(t1, t2)]; }
  int& at(int t1, int t2) { return values_[index(t1, t2)]; }

  int peak() const { return at(0, 0); }

  friend bool operator==(const AutocorrelationTable&, const AutocorrelationTable&) = default;

 private:
  std::size_t index(int t1, int t2) const {
    return static_cast<std::size_t>(t1 + rows_ - 1) * static_cast<std::size_t>(width()) +
           static_cast<std::size_t>(t2 + cols_ - 1);
  }

  int rows_;
  int cols_;
  std::vector<int> values_;
};

/// Peak, nearest sidelobe and the distance histogram {d1 | n1, n2, ...}.
///
/// histogram[i] counts off-peak shifts whose distance peak - A equals d1 + i,
/// for every i from 0 up to peak - d1 (zero counts included).
struct CorrelationProfile {
  int peak = 0;
  int nearest_sidelobe = 0;
  int d1 = 0;
  std::vector<std::int64_t> histogram;

  friend bool operator==(const CorrelationProfile&, const CorrelationProfile&) = default;
};

/// Sum over (i,j) of R[i][j] * R[i+t1][j+t2]; cells outside the matrix are 0.
int autocorrelation(const BinaryMatrix& r, int t1, int t2);

/// Bit-parallel table of every shift.
AutocorrelationTable autocorrelation_table(const BinaryMatrix& r);

/// Throws InputError("empty support") for an all-zero matrix.
CorrelationProfile profile(const BinaryMatrix& r);
CorrelationProfile profile(const AutocorrelationTable& table);

/// Orders profiles by quality: greater is better. Larger d1 wins, then the
/// lexicographically smaller histogram (missing tail counts read as 0).
std::weak_ordering compare_profiles(const CorrelationProfile& a, const CorrelationProfile& b);

/// True when `a` is strictly worse than `b`.
inline bool profile_less(const CorrelationProfile& a, const CorrelationProfile& b) {
  return compare_profiles(a, b) < 0;
}

/// First upper bound on the best d1 over all M x N matrices with l ones
/// (dimensions are swapped internally so that M <= N).
int skirlo_bound(int rows, int cols, int ones);

/// Sum over (i,j) of R[i][j] * image[i+t1][j+t2], zero padded. The two
/// matrices may have different shapes.
int crosscorrelation(const BinaryMatrix& r, const BinaryMatrix& image, int t1, int t2);

/// max(A(+-1,0), A(0,+-1)).
int unit_shift_sidelobe(const BinaryMatrix& r);

/// A(0,0) minus the unit-shift sidelobe.
inline int unit_shift_distance(const BinaryMatrix& r) { return r.ones() - unit_shift_sidelobe(r); }

}  // namespace psd
