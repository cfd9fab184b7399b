#include "psd/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <thread>

#include <fmt/format.h>

#include "psd/error.hpp"

namespace psd {
namespace {

struct Shift {
  int offset;          // source index minus target index
  std::uint64_t mask;  // targets whose source cell exists
};

// Packed row-major evaluator: cell (i,j) is bit i*cols + j.
class Evaluator {
 public:
  Evaluator(int rows, int cols) : rows_(rows), cols_(cols) {
    // Half-plane of shifts; the other half mirrors it.
    add(0, 1);
    add(1, 0);
    for (int t1 = 0; t1 < rows; ++t1) {
      for (int t2 = -(cols - 1); t2 < cols; ++t2) {
        if (t1 == 0 && t2 <= 0) continue;
        if ((t1 == 0 && t2 == 1) || (t1 == 1 && t2 == 0)) continue;
        add(t1, t2);
      }
    }
  }

  int area() const { return rows_ * cols_; }

  int correlate(std::uint64_t x, const Shift& s) const {
    const std::uint64_t src = s.offset >= 0 ? x >> s.offset : x << -s.offset;
    return std::popcount(x & src & s.mask);
  }

  // Largest sidelobe, or -1 once it exceeds `limit`.
  int max_sidelobe(std::uint64_t x, int limit) const {
    int s = 0;
    for (const auto& sh : shifts_) {
      const int a = correlate(x, sh);
      if (a > limit) return -1;
      s = std::max(s, a);
    }
    return s;
  }

  CorrelationProfile profile(std::uint64_t x) const {
    std::array<std::int64_t, 65> by_value{};  // sidelobe value -> shifts, half plane
    CorrelationProfile p;
    p.peak = std::popcount(x);
    int s = 0;
    for (const auto& sh : shifts_) {
      const int a = correlate(x, sh);
      ++by_value[static_cast<std::size_t>(a)];
      s = std::max(s, a);
    }
    p.nearest_sidelobe = s;
    p.d1 = p.peak - s;
    p.histogram.assign(static_cast<std::size_t>(s + 1), 0);
    for (int a = 0; a <= s; ++a) p.histogram[static_cast<std::size_t>(s - a)] = 2 * by_value[static_cast<std::size_t>(a)];
    return p;
  }

 private:
  void add(int t1, int t2) {
    if (t1 >= rows_ || t2 >= cols_ || t2 <= -cols_) return;
    std::uint64_t mask = 0;
    for (int i = 0; i + t1 < rows_; ++i)
      for (int j = std::max(0, -t2); j < cols_ && j + t2 < cols_; ++j) mask |= std::uint64_t{1} << (i * cols_ + j);
    shifts_.push_back({t1 * cols_ + t2, mask});
  }

  int rows_;
  int cols_;
  std::vector<Shift> shifts_;
};

std::uint64_t pack(const BinaryMatrix& r) {
  std::uint64_t x = 0;
  for (int i = 0; i < r.rows(); ++i)
    for (int j = 0; j < r.cols(); ++j)
      if (r(i, j)) x |= std::uint64_t{1} << (i * r.cols() + j);
  return x;
}

// Free bit b -> set of packed cells it controls.
std::vector<std::uint64_t> cell_masks(const SearchSpace& space) {
  std::vector<std::uint64_t> out;
  const int n = space.cols;
  if (space.diagonal_symmetric) {
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) out.push_back((std::uint64_t{1} << (i * n + j)) | (std::uint64_t{1} << (j * n + i)));
  } else {
    for (int b = 0; b < space.rows * space.cols; ++b) out.push_back(std::uint64_t{1} << b);
  }
  return out;
}

struct Block {
  CorrelationProfile best;
  bool found = false;
  std::vector<std::uint64_t> witnesses;
  std::uint64_t count = 0;
  std::uint64_t explored = 0;
};

Block run_block(const SearchSpace& space, const SearchOptions& opt, std::uint64_t lo, std::uint64_t hi) {
  const Evaluator ev(space.rows, space.cols);
  const auto masks = cell_masks(space);
  const int bits = static_cast<int>(masks.size());
  Block out;
  for (std::uint64_t pattern = lo; pattern < hi; ++pattern) {
    ++out.explored;
    if (pattern == 0) continue;
    std::uint64_t x = pattern;
    if (space.diagonal_symmetric) {
      x = 0;
      for (int b = 0; b < bits; ++b)
        if ((pattern >> b) & 1U) x |= masks[static_cast<std::size_t>(b)];
    }
    const int l = std::popcount(x);
    if (space.ones && l != *space.ones) continue;
    if (opt.prune && out.found) {
      // d1 <= l - s, so a candidate that cannot reach the incumbent d1 is skipped.
      if (l < out.best.d1) continue;
      if (ev.max_sidelobe(x, l - out.best.d1) < 0) continue;
    }
    auto p = ev.profile(x);
    if (!out.found) {
      out.best = std::move(p);
      out.found = true;
      out.witnesses = {pattern};
      out.count = 1;
      continue;
    }
    const auto cmp = compare_profiles(p, out.best);
    if (cmp > 0) {
      out.best = std::move(p);
      out.witnesses = {pattern};
      out.count = 1;
    } else if (cmp == 0) {
      if (out.witnesses.size() < opt.witness_cap) out.witnesses.push_back(pattern);
      ++out.count;
    }
  }
  return out;
}

}  // namespace

int free_bits(const SearchSpace& space) {
  return space.diagonal_symmetric ? space.rows * (space.rows + 1) / 2 : space.rows * space.cols;
}

void validate(const SearchSpace& space) {
  if (space.rows < 1 || space.cols < 1) throw InputError("search: dimensions must be positive");
  if (space.diagonal_symmetric && space.rows != space.cols) throw InputError("search: diagonal symmetry needs rows == cols");
  if (space.rows * space.cols > 64) throw InputError("search: at most 64 cells are supported");
  if (space.ones && (*space.ones < 1 || *space.ones > space.rows * space.cols)) {
    throw InputError(fmt::format("search: ones={} outside [1, {}]", *space.ones, space.rows * space.cols));
  }
}

BinaryMatrix expand_pattern(const SearchSpace& space, std::uint64_t pattern) {
  const auto masks = cell_masks(space);
  BinaryMatrix m(space.rows, space.cols);
  for (std::size_t b = 0; b < masks.size(); ++b) {
    if (!((pattern >> b) & 1U)) continue;
    for (int c = 0; c < space.rows * space.cols; ++c)
      if ((masks[b] >> c) & 1U) m.set(c / space.cols, c % space.cols, true);
  }
  return m;
}

std::uint64_t default_budget(const SearchSpace& space) {
  return std::uint64_t{1} << (space.diagonal_symmetric ? 36 : 26);
}

SearchResult exhaustive_search(const SearchSpace& space, const SearchOptions& options) {
  validate(space);
  const int bits = free_bits(space);
  const std::uint64_t budget = options.budget.value_or(default_budget(space));
  if (bits >= 63 || (std::uint64_t{1} << bits) > budget) {
    throw InputError(fmt::format("search: budget exceeded, space needs 2^{} candidates but budget is {}", bits, budget));
  }
  const std::uint64_t total = std::uint64_t{1} << bits;
  const auto workers = static_cast<std::uint64_t>(std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(options.workers, 1)), 1, total));

  std::vector<Block> blocks(workers);
  std::vector<std::thread> pool;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = total * w / workers;
    const std::uint64_t hi = total * (w + 1) / workers;
    pool.emplace_back([&, w, lo, hi] { blocks[w] = run_block(space, options, lo, hi); });
  }
  for (auto& t : pool) t.join();

  SearchResult res;
  bool found = false;
  for (const auto& b : blocks) {
    res.explored += b.explored;
    if (!b.found) continue;
    const auto cmp = found ? compare_profiles(b.best, res.best_profile) : std::weak_ordering::greater;
    if (cmp > 0) {
      res.best_profile = b.best;
      res.witness_patterns.clear();
      res.witness_count = 0;
      found = true;
    }
    if (cmp >= 0) {
      for (auto p : b.witnesses)
        if (res.witness_patterns.size() < options.witness_cap) res.witness_patterns.push_back(p);
      res.witness_count += b.count;
    }
  }
  if (!found) throw InputError("search: no candidate satisfies the constraints");
  for (auto p : res.witness_patterns) res.witnesses.push_back(expand_pattern(space, p));
  return res;
}

CorrelationProfile small_profile(const BinaryMatrix& r) {
  if (r.rows() * r.cols() > 64) throw InputError("small_profile: at most 64 cells");
  const auto x = pack(r);
  if (x == 0) throw InputError("empty support: profile of an all-zero matrix is undefined");
  return Evaluator(r.rows(), r.cols()).profile(x);
}

ObservationReport verify_observations(const BinaryMatrix& r) {
  ObservationReport rep;
  const auto p = profile(r);
  rep.nearest_sidelobe = p.nearest_sidelobe;
  rep.unit_shift_sidelobe = unit_shift_sidelobe(r);
  rep.at_unit_shift = rep.unit_shift_sidelobe == rep.nearest_sidelobe;
  const int m = r.rows();
  const int n = r.cols();
  for (int i = 1; i + 1 < m; ++i) {
    int c = 0;
    for (int j = 1; j + 1 < n; ++j) c += r(i, j);
    rep.interior_row_ones.push_back(c);
  }
  for (int j = 1; j + 1 < n; ++j) {
    int c = 0;
    for (int i = 1; i + 1 < m; ++i) c += r(i, j);
    rep.interior_col_ones.push_back(c);
  }
  for (int j = 0; j < n; ++j) {
    rep.top += r(0, j) ? '1' : '0';
    rep.bottom += r(m - 1, j) ? '1' : '0';
  }
  for (int i = 0; i < m; ++i) {
    rep.left += r(i, 0) ? '1' : '0';
    rep.right += r(i, n - 1) ? '1' : '0';
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      if (i == 0 || j == 0 || i == m - 1 || j == n - 1) {
        ++rep.border_cells;
        rep.border_ones += r(i, j);
      }
  return rep;
}

}  // namespace psd
