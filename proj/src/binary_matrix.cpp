#include "psd/binary_matrix.hpp"

#include <bit>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

#include "psd/error.hpp"

namespace psd {

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64) {
  if (rows < 1 || cols < 1) {
    throw InputError(fmt::format("matrix dimensions must be positive, got {}x{}", rows, cols));
  }
  bits_.assign(static_cast<std::size_t>(rows_) * words_, 0);
}

BinaryMatrix BinaryMatrix::from_rows(std::span<const std::string_view> rows) {
  if (rows.empty()) throw InputError("matrix needs at least one row");
  BinaryMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int r = 0; r < m.rows(); ++r) {
    const auto row = rows[static_cast<std::size_t>(r)];
    if (static_cast<int>(row.size()) != m.cols()) {
      throw InputError(fmt::format("row {} has {} cells, expected {}", r + 1, row.size(), m.cols()));
    }
    for (int c = 0; c < m.cols(); ++c) {
      const char ch = row[static_cast<std::size_t>(c)];
      if (ch != '0' && ch != '1') {
        throw InputError(fmt::format("row {} column {}: expected 0 or 1, got '{}'", r + 1, c + 1, ch));
      }
      m.set(r, c, ch == '1');
    }
  }
  return m;
}

BinaryMatrix BinaryMatrix::from_rows(std::initializer_list<std::string_view> rows) {
  return from_rows(std::span<const std::string_view>(rows.begin(), rows.size()));
}

void BinaryMatrix::set(int r, int c, bool value) {
  auto& word = bits_[static_cast<std::size_t>(r) * words_ + c / 64];
  const std::uint64_t bit = std::uint64_t{1} << (c % 64);
  word = value ? (word | bit) : (word & ~bit);
}

int BinaryMatrix::ones() const {
  int n = 0;
  for (auto w : bits_) n += std::popcount(w);
  return n;
}

int BinaryMatrix::row_ones(int r) const {
  int n = 0;
  for (auto w : row_words(r)) n += std::popcount(w);
  return n;
}

int BinaryMatrix::col_ones(int c) const {
  int n = 0;
  for (int r = 0; r < rows_; ++r) n += (*this)(r, c);
  return n;
}

BinaryMatrix BinaryMatrix::transposed() const {
  BinaryMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if ((*this)(r, c)) t.set(c, r, true);
  return t;
}

std::string to_text(const BinaryMatrix& m) {
  std::string out = fmt::format("{} {}\n", m.rows(), m.cols());
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) out.push_back(m(r, c) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BinaryMatrix parse_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!line.empty()) return true;
    }
    return false;
  };

  if (!next_line()) throw InputError("line 1: missing header \"M N\"");
  int rows = 0;
  int cols = 0;
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> rows >> cols) || (header >> extra) || rows < 1 || cols < 1) {
      throw InputError(fmt::format("line {}: malformed header \"{}\", expected \"M N\"", line_no, line));
    }
  }
  BinaryMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    if (!next_line()) {
      throw InputError(fmt::format("line {}: expected {} matrix rows, found {}", line_no + 1, rows, r));
    }
    if (static_cast<int>(line.size()) != cols) {
      throw InputError(fmt::format("line {}: row has {} characters, expected {}", line_no, line.size(), cols));
    }
    for (int c = 0; c < cols; ++c) {
      const char ch = line[static_cast<std::size_t>(c)];
      if (ch != '0' && ch != '1') {
        throw InputError(fmt::format("line {}: column {}: expected 0 or 1, got '{}'", line_no, c + 1, ch));
      }
      m.set(r, c, ch == '1');
    }
  }
  if (next_line()) throw InputError(fmt::format("line {}: unexpected trailing content", line_no));
  return m;
}

BinaryMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

BinaryMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open matrix file '{}'", path));
  try {
    return parse_matrix(in);
  } catch (const InputError& e) {
    throw InputError(fmt::format("{}: {}", path, e.what()));
  }
}

}  // namespace psd
