#include "psd/correlation.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include <fmt/format.h>

#include "psd/error.hpp"

namespace psd {
namespace {

// Writes into `out` the row `src` moved so that bit j of the result is bit
// (j + shift) of the source. Source bits past its end read as 0.
void shift_row(std::span<const std::uint64_t> src, int shift, std::span<std::uint64_t> out) {
  const int n_src = static_cast<int>(src.size());
  auto word = [&](int w) -> std::uint64_t { return (w >= 0 && w < n_src) ? src[static_cast<std::size_t>(w)] : 0; };
  // floor division so negative shifts split into a word offset and a bit offset in [0,64)
  const int word_off = shift >= 0 ? shift / 64 : -((-shift + 63) / 64);
  const int bit_off = shift - word_off * 64;
  for (std::size_t w = 0; w < out.size(); ++w) {
    const int base = static_cast<int>(w) + word_off;
    std::uint64_t v = word(base) >> bit_off;
    if (bit_off != 0) v |= word(base + 1) << (64 - bit_off);
    out[w] = v;
  }
}

int and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  int n = 0;
  for (std::size_t w = 0; w < a.size(); ++w) n += std::popcount(a[w] & b[w]);
  return n;
}

}  // namespace

AutocorrelationTable::AutocorrelationTable(int rows, int cols)
    : rows_(rows), cols_(cols), values_(static_cast<std::size_t>(2 * rows - 1) * static_cast<std::size_t>(2 * cols - 1), 0) {}

int autocorrelation(const BinaryMatrix& r, int t1, int t2) {
  return crosscorrelation(r, r, t1, t2);
}

int crosscorrelation(const BinaryMatrix& r, const BinaryMatrix& image, int t1, int t2) {
  if (t2 >= image.cols() || t2 <= -r.cols()) return 0;
  std::vector<std::uint64_t> shifted(static_cast<std::size_t>(r.words_per_row()));
  int total = 0;
  for (int i = std::max(0, -t1); i < r.rows() && i + t1 < image.rows(); ++i) {
    shift_row(image.row_words(i + t1), t2, shifted);
    total += and_popcount(r.row_words(i), shifted);
  }
  return total;
}

AutocorrelationTable autocorrelation_table(const BinaryMatrix& r) {
  const int m = r.rows();
  const int n = r.cols();
  const auto words = static_cast<std::size_t>(r.words_per_row());
  AutocorrelationTable table(m, n);
  std::vector<std::uint64_t> shifted(static_cast<std::size_t>(m) * words);
  // Only t2 >= 0 is computed directly; inversion symmetry fills the rest.
  for (int t2 = 0; t2 < n; ++t2) {
    for (int row = 0; row < m; ++row) {
      shift_row(r.row_words(row), t2, std::span(shifted).subspan(static_cast<std::size_t>(row) * words, words));
    }
    for (int t1 = -(m - 1); t1 < m; ++t1) {
      int total = 0;
      for (int i = std::max(0, -t1); i < m && i + t1 < m; ++i) {
        total += and_popcount(r.row_words(i), std::span<const std::uint64_t>(shifted).subspan(
                                                  static_cast<std::size_t>(i + t1) * words, words));
      }
      table.at(t1, t2) = total;
      table.at(-t1, -t2) = total;
    }
  }
  return table;
}

CorrelationProfile profile(const AutocorrelationTable& table) {
  CorrelationProfile p;
  p.peak = table.peak();
  if (p.peak == 0) throw InputError("empty support: profile of an all-zero matrix is undefined");
  const int mr = table.source_rows() - 1;
  const int mc = table.source_cols() - 1;
  int sidelobe = 0;
  for (int t1 = -mr; t1 <= mr; ++t1)
    for (int t2 = -mc; t2 <= mc; ++t2)
      if (t1 != 0 || t2 != 0) sidelobe = std::max(sidelobe, table.at(t1, t2));
  p.nearest_sidelobe = sidelobe;
  p.d1 = p.peak - sidelobe;
  p.histogram.assign(static_cast<std::size_t>(sidelobe + 1), 0);
  for (int t1 = -mr; t1 <= mr; ++t1)
    for (int t2 = -mc; t2 <= mc; ++t2)
      if (t1 != 0 || t2 != 0) ++p.histogram[static_cast<std::size_t>(sidelobe - table.at(t1, t2))];
  return p;
}

CorrelationProfile profile(const BinaryMatrix& r) {
  if (r.ones() == 0) throw InputError("empty support: profile of an all-zero matrix is undefined");
  return profile(autocorrelation_table(r));
}

std::weak_ordering compare_profiles(const CorrelationProfile& a, const CorrelationProfile& b) {
  if (a.d1 != b.d1) return a.d1 <=> b.d1;
  const std::size_t n = std::max(a.histogram.size(), b.histogram.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t x = i < a.histogram.size() ? a.histogram[i] : 0;
    const std::int64_t y = i < b.histogram.size() ? b.histogram[i] : 0;
    // fewer occurrences of the nearer distances is better
    if (x != y) return y <=> x;
  }
  return std::weak_ordering::equivalent;
}

int skirlo_bound(int rows, int cols, int ones) {
  if (rows < 1 || cols < 1) throw InputError("skirlo_bound: dimensions must be positive");
  const int m = std::min(rows, cols);
  const int n = std::max(rows, cols);
  const int area = m * n;
  if (ones < 1 || ones > area) {
    throw InputError(fmt::format("skirlo_bound: l={} outside [1, {}]", ones, area));
  }
  int n1 = 0;
  int n2 = 0;
  if (area % 2 == 0) {
    n1 = area / 2;
    n2 = area / 2 + m;
  } else {
    n1 = (area + 1) / 2;
    n2 = (area + 1) / 2 + m - 1;
  }
  const auto first = [&](int l) { return l; };
  const auto second = [&](int) { return n1; };
  const auto third = [&](int l) { return m * (n + 1) - l; };
  // Adjacent branches must agree where their closed intervals meet.
  if (first(n1) != second(n1) || second(n2) != third(n2)) {
    throw VerificationError(fmt::format("skirlo_bound: branches disagree at boundary for {}x{}", m, n));
  }
  if (ones <= n1) return first(ones);
  if (ones <= n2) return second(ones);
  return third(ones);
}

int unit_shift_sidelobe(const BinaryMatrix& r) {
  // A(-1,0) = A(1,0) and A(0,-1) = A(0,1) by inversion symmetry.
  return std::max(autocorrelation(r, 1, 0), autocorrelation(r, 0, 1));
}

}  // namespace psd
