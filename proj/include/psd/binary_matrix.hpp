#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace psd {

/// Dense M x N matrix over {0,1}.
///
/// Cells are addressed 0-based as (row, col). Each row is also kept packed
/// into 64-bit words (bit c of word c/64 holds column c) so correlations can
/// be computed with AND + popcount.
class BinaryMatrix {
 public:
  BinaryMatrix(int rows, int cols);

  /// Builds from rows of '0'/'1' characters.
  static BinaryMatrix from_rows(std::span<const std::string_view> rows);
  static BinaryMatrix from_rows(std::initializer_list<std::string_view> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int words_per_row() const { return words_; }

  bool operator()(int r, int c) const {
    return (bits_[static_cast<std::size_t>(r) * words_ + c / 64] >> (c % 64)) & 1U;
  }
  void set(int r, int c, bool value);

  /// Number of 1 cells (the correlation peak).
  int ones() const;
  int row_ones(int r) const;
  int col_ones(int c) const;

  std::span<const std::uint64_t> row_words(int r) const {
    return {bits_.data() + static_cast<std::size_t>(r) * words_, static_cast<std::size_t>(words_)};
  }

  BinaryMatrix transposed() const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

 private:
  int rows_;
  int cols_;
  int words_;
  std::vector<std::uint64_t> bits_;
};

/// Text form: "M N" on the first line, then M lines of N characters in {0,1}.
std::string to_text(const BinaryMatrix& m);

/// Parses the text form. Errors carry the 1-based line number.
BinaryMatrix parse_matrix(std::istream& in);
BinaryMatrix parse_matrix(std::string_view text);
BinaryMatrix read_matrix_file(const std::string& path);

}  // namespace psd
