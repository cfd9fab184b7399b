#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "psd/binary_matrix.hpp"

// Slow, obviously-correct references used only by the tests.
namespace oracle {

using Grid = std::vector<std::vector<int>>;

inline Grid grid(const psd::BinaryMatrix& m) {
  Grid g(static_cast<std::size_t>(m.rows()), std::vector<int>(static_cast<std::size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

inline int corr(const Grid& r, int t1, int t2) {
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(r[0].size());
  int s = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      const int a = i + t1;
      const int b = j + t2;
      if (a >= 0 && a < m && b >= 0 && b < n) s += r[i][j] * r[a][b];
    }
  return s;
}

struct Profile {
  int peak = 0;
  int d1 = 0;
  std::map<int, long> counts;  // distance -> occurrences
};

inline Profile profile(const Grid& r) {
  const int m = static_cast<int>(r.size());
  const int n = static_cast<int>(r[0].size());
  Profile p;
  p.peak = corr(r, 0, 0);
  int s = 0;
  for (int a = -(m - 1); a < m; ++a)
    for (int b = -(n - 1); b < n; ++b)
      if (a || b) {
        const int v = corr(r, a, b);
        s = std::max(s, v);
        ++p.counts[p.peak - v];
      }
  p.d1 = p.peak - s;
  return p;
}

// Multiplicity of each nonzero difference a - b, a != b in d.
inline std::vector<int> differences(const std::vector<int>& d, int v) {
  std::vector<int> mult(static_cast<std::size_t>(v), 0);
  for (int a : d)
    for (int b : d)
      if (a != b) ++mult[static_cast<std::size_t>(((a - b) % v + v) % v)];
  return mult;
}

inline psd::BinaryMatrix random_matrix(std::mt19937& rng, int m, int n, double density) {
  std::bernoulli_distribution coin(density);
  psd::BinaryMatrix r(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) r.set(i, j, coin(rng));
  return r;
}

}  // namespace oracle
