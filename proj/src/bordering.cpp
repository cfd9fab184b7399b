#include "psd/bordering.hpp"

#include <cstdlib>

#include <fmt/format.h>

#include "psd/error.hpp"

namespace psd {

BinaryMatrix border(const BinaryMatrix& r) {
  const int v = r.rows() + 2;
  const int w = r.cols() + 2;
  BinaryMatrix out(v, w);
  for (int i = 0; i < v; ++i) {
    for (int j = 0; j < w; ++j) {
      const bool edge = i == 0 || j == 0 || i == v - 1 || j == w - 1;
      out.set(i, j, edge || r(i - 1, j - 1));
    }
  }
  return out;
}

SSets s_sets(const BinaryMatrix& rp) {
  const int v = rp.rows();
  const int w = rp.cols();
  SSets s;
  // rp is 0-based; cells are reported 1-based
  for (int j = 1; j < w - 1; ++j) {
    if (rp(1, j)) s.top.push_back({1, j + 1});
    if (rp(v - 2, j)) s.bottom.push_back({v, j + 1});
  }
  for (int i = 1; i < v - 1; ++i) {
    if (rp(i, 1)) s.left.push_back({i + 1, 1});
    if (rp(i, w - 2)) s.right.push_back({i + 1, w});
  }
  return s;
}

namespace {

Cell closest(const std::vector<Cell>& side, bool by_col, int v) {
  if (side.empty()) throw InputError("construction inapplicable: empty S-set");
  // distances are compared doubled so an even v's half-integer centre stays exact
  const int centre2 = v + 1;
  Cell best = side.front();
  int best_dist = 1 << 30;
  for (const auto& c : side) {
    const int idx = by_col ? c.col : c.row;
    const int dist = std::abs(2 * idx - centre2);
    if (dist < best_dist) {
      best = c;
      best_dist = dist;
    }
  }
  return best;
}

}  // namespace

Punctures choose_punctures(const SSets& sets, int v) {
  return {closest(sets.top, true, v), closest(sets.bottom, true, v), closest(sets.left, false, v),
          closest(sets.right, false, v)};
}

std::vector<Punctures> all_punctures(const SSets& sets) {
  std::vector<Punctures> out;
  for (const auto& t : sets.top)
    for (const auto& b : sets.bottom)
      for (const auto& l : sets.left)
        for (const auto& r : sets.right) out.push_back({t, b, l, r});
  return out;
}

BinaryMatrix puncture(const BinaryMatrix& rp, const Punctures& cells) {
  const int v = rp.rows();
  const int w = rp.cols();
  if (v < 3 || w < 3) throw InputError("puncture: matrix has no interior");
  static constexpr const char* kSide[] = {"top", "bottom", "left", "right"};
  BinaryMatrix out = rp;
  for (int s = 0; s < 4; ++s) {
    const Cell c = cells[static_cast<std::size_t>(s)];
    const bool horizontal = s < 2;
    const int fixed = horizontal ? c.row : c.col;
    const int want = s == 0 || s == 2 ? 1 : (horizontal ? v : w);
    const int along = horizontal ? c.col : c.row;
    const int limit = horizontal ? w : v;
    if (fixed != want || along < 2 || along > limit - 1) {
      throw InputError(fmt::format("puncture: ({},{}) is not a non-corner {} border cell", c.row, c.col, kSide[s]));
    }
    const int r0 = c.row - 1;
    const int c0 = c.col - 1;
    const int nr = s == 0 ? r0 + 1 : s == 1 ? r0 - 1 : r0;
    const int nc = s == 2 ? c0 + 1 : s == 3 ? c0 - 1 : c0;
    if (!out(r0, c0)) throw InputError(fmt::format("puncture: ({},{}) is already 0", c.row, c.col));
    if (!rp(nr, nc)) throw InputError(fmt::format("puncture: ({},{}) has a 0 interior neighbour", c.row, c.col));
    out.set(r0, c0, false);
  }
  return out;
}

int unit_shift_distance_formula(int v, int k, SOptimality cls) {
  if (v < 4 || k < 2 || k >= v - 2) throw InputError(fmt::format("need v >= 4 and 2 <= k < v-2, got v={} k={}", v, k));
  if (cls == SOptimality::neither) throw InputError("interior is neither s-optimal nor near s-optimal");
  return (v - 1) * bv_bound(v - 2) + 2 * (v - k) + (cls == SOptimality::s_optimal ? 1 : 0);
}

int predicted_distance(int v, int k, SOptimality cls) {
  return unit_shift_distance_formula(v, k, cls) + 2;
}

BorderedMatrix bordered_from_set(const ResidueSet& d) {
  auto interior = circulant(d);
  auto rp = border(interior);
  const auto cells = choose_punctures(s_sets(rp), rp.rows());
  auto full = puncture(rp, cells);
  return {std::move(interior), std::move(full), cells};
}

GoodMatrixReport build_good_matrix(const ResidueSet& d) {
  auto interior = soptimality(d);
  auto matrix = bordered_from_set(d);
  const auto table = autocorrelation_table(matrix.full);
  auto prof = profile(table);
  const int v = matrix.full.rows();
  const int k = d.size();
  const int unit = std::max(table.at(1, 0), table.at(0, 1));

  GoodMatrixReport rep{d, interior, std::move(matrix), prof, 0, prof.d1, table.peak() - unit,
                       interior.unit_shift_q + 2 * (v - k), unit == prof.nearest_sidelobe, false};
  if (rep.unit_shift_measured != rep.unit_shift_expected) {
    throw VerificationError(fmt::format("{}: bordered unit-shift distance {} != {}", to_text(d), rep.unit_shift_measured,
                                        rep.unit_shift_expected));
  }
  if (interior.cls != SOptimality::neither) {
    rep.predicted = predicted_distance(v, k, interior.cls);
    rep.verified = rep.measured == rep.predicted;
  }
  return rep;
}

GoodMatrixReport build_good_matrix(const ConstructionSpec& spec) {
  return build_good_matrix(generate(spec));
}

}  // namespace psd
