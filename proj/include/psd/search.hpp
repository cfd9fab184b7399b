#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "psd/binary_matrix.hpp"
#include "psd/correlation.hpp"

namespace psd {

struct SearchSpace {
  int rows = 0;
  int cols = 0;
  bool diagonal_symmetric = false;  // requires rows == cols
  std::optional<int> ones;          // fixed number of 1s, 0 < l <= rows*cols
};

/// Number of free bits: rows*cols, or n(n+1)/2 under diagonal symmetry.
int free_bits(const SearchSpace& space);

/// Throws InputError for an inconsistent space.
void validate(const SearchSpace& space);

/// Matrix for the index-th candidate. Bit b of `pattern` is cell (b / cols, b % cols),
/// or the b-th upper-triangle cell (row-major, i <= j) under diagonal symmetry.
BinaryMatrix expand_pattern(const SearchSpace& space, std::uint64_t pattern);

struct SearchOptions {
  int workers = 1;
  bool prune = true;
  std::size_t witness_cap = 64;
  std::optional<std::uint64_t> budget;  // candidates; default 2^36 symmetric, 2^26 otherwise
};

std::uint64_t default_budget(const SearchSpace& space);

struct SearchResult {
  CorrelationProfile best_profile;
  std::vector<std::uint64_t> witness_patterns;  // ascending
  std::vector<BinaryMatrix> witnesses;
  std::uint64_t witness_count = 0;               // all optimal candidates, uncapped
  std::uint64_t explored = 0;
};

/// Exact optimum over every nonzero candidate of the space. Workers take
/// contiguous blocks of patterns and are merged in block order, so the result
/// does not depend on the worker count. Throws InputError when the space is
/// larger than the budget.
SearchResult exhaustive_search(const SearchSpace& space, const SearchOptions& options = {});

/// Profile of a matrix with rows*cols <= 64 using a single 64-bit word.
CorrelationProfile small_profile(const BinaryMatrix& r);

struct ObservationReport {
  int nearest_sidelobe = 0;
  int unit_shift_sidelobe = 0;
  bool at_unit_shift = false;
  std::vector<int> interior_row_ones;  // rows 2..M-1
  std::vector<int> interior_col_ones;  // cols 2..N-1
  std::string top, bottom, left, right;  // border cells, corners included
  int border_ones = 0;
  int border_cells = 0;
};

ObservationReport verify_observations(const BinaryMatrix& r);

}  // namespace psd
