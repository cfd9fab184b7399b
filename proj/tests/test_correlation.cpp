#include <doctest.h>

#include <numeric>

#include "oracles.hpp"
#include "psd/correlation.hpp"
#include "psd/error.hpp"
#include "psd/reference_matrices.hpp"

using psd::BinaryMatrix;

TEST_CASE("single cell and out-of-range shifts") {
  const auto one = BinaryMatrix::from_rows({"1"});
  CHECK(psd::autocorrelation(one, 0, 0) == 1);
  const auto t = psd::autocorrelation_table(one);
  CHECK(t.height() == 1);
  CHECK(t.peak() == 1);
  const auto m = BinaryMatrix::from_rows({"111", "101"});
  CHECK(psd::autocorrelation(m, 2, 0) == 0);
  CHECK(psd::autocorrelation(m, 0, -3) == 0);
  CHECK(psd::autocorrelation(m, -5, 7) == 0);
}

TEST_CASE("2x2 all ones") {
  const auto t = psd::autocorrelation_table(BinaryMatrix::from_rows({"11", "11"}));
  const int want[3][3] = {{1, 2, 1}, {2, 4, 2}, {1, 2, 1}};
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) CHECK(t.at(a, b) == want[a + 1][b + 1]);
}

TEST_CASE("known optimal matrices") {
  const auto m7 = psd::reference::optimal_7x7();
  CHECK(psd::autocorrelation(m7, 0, 0) == 32);
  CHECK(psd::profile(m7).d1 == 19);
  CHECK(oracle::profile(oracle::grid(m7)).d1 == 19);
  const auto m6 = psd::reference::optimal_6x6();
  CHECK(m6 == m6.transposed());
  CHECK(psd::profile(m6).d1 == oracle::profile(oracle::grid(m6)).d1);
}

TEST_CASE("bordered reference matrices") {
  // Distances from the direct quadruple loop; the published claims are 18 and 28.
  const auto a = psd::reference::bordered_qnr5();
  CHECK(psd::profile(a).peak == a.ones());
  CHECK(a.ones() == 30);
  CHECK(psd::profile(a).d1 == oracle::profile(oracle::grid(a)).d1);
  CHECK(psd::profile(a).d1 == 16);
  const auto b = psd::reference::bordered_qr7();
  CHECK(psd::profile(b).d1 == oracle::profile(oracle::grid(b)).d1);
  CHECK(psd::profile(b).d1 == 19);
}

TEST_CASE("table matches the naive loop on random matrices") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> dim(1, 12);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = dim(rng);
    const int n = dim(rng);
    const auto r = oracle::random_matrix(rng, m, n, 0.5);
    const auto g = oracle::grid(r);
    const auto t = psd::autocorrelation_table(r);
    for (int a = -(m - 1); a < m; ++a)
      for (int b = -(n - 1); b < n; ++b) {
        REQUIRE(t.at(a, b) == oracle::corr(g, a, b));
        REQUIRE(t.at(a, b) == t.at(-a, -b));
        REQUIRE(t.at(a, b) <= t.peak());
      }
  }
}

TEST_CASE("wide matrices across word boundaries") {
  std::mt19937 rng(5);
  for (int n : {63, 64, 65, 129}) {
    const auto r = oracle::random_matrix(rng, 3, n, 0.3);
    const auto g = oracle::grid(r);
    for (int b : {-n + 1, -65, -64, -63, -1, 0, 1, 63, 64, 65, n - 1})
      for (int a = -2; a <= 2; ++a) CHECK(psd::autocorrelation(r, a, b) == oracle::corr(g, a, b));
  }
}

TEST_CASE("profile histogram") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    auto r = oracle::random_matrix(rng, 1 + trial % 7, 1 + trial % 5, 0.6);
    if (r.ones() == 0) r.set(0, 0, true);
    const auto p = psd::profile(r);
    const auto o = oracle::profile(oracle::grid(r));
    CHECK(p.peak == o.peak);
    CHECK(p.d1 == o.d1);
    CHECK(p.d1 == p.peak - p.nearest_sidelobe);
    const long total = std::accumulate(p.histogram.begin(), p.histogram.end(), 0L);
    CHECK(total == (2L * r.rows() - 1) * (2L * r.cols() - 1) - 1);
    CHECK(static_cast<int>(p.histogram.size()) == p.peak - p.d1 + 1);
    for (std::size_t i = 0; i < p.histogram.size(); ++i) {
      const int dist = p.d1 + static_cast<int>(i);
      const long want = o.counts.count(dist) ? o.counts.at(dist) : 0;
      CHECK(p.histogram[i] == want);
    }
    if (r.rows() * r.cols() > 1) CHECK(p.histogram[0] >= 1);
  }
  CHECK_THROWS_AS(psd::profile(BinaryMatrix(2, 2)), psd::InputError);
}

TEST_CASE("profile ordering") {
  psd::CorrelationProfile a{20, 1, 19, {1}};
  psd::CorrelationProfile b{20, 2, 18, {1}};
  CHECK(psd::compare_profiles(a, b) > 0);
  CHECK(psd::profile_less(b, a));
  psd::CorrelationProfile c{7, 2, 5, {2, 0}};
  psd::CorrelationProfile d{7, 2, 5, {1, 7}};
  CHECK(psd::profile_less(c, d));
  CHECK_FALSE(psd::profile_less(d, c));
  psd::CorrelationProfile e{7, 2, 5, {1, 7, 0}};
  CHECK(psd::compare_profiles(d, e) == 0);
  CHECK_FALSE(psd::profile_less(d, e));
}

TEST_CASE("first bound") {
  CHECK(psd::skirlo_bound(7, 7, 25) == 25);
  CHECK(psd::skirlo_bound(7, 7, 32) == 24);
  CHECK(psd::skirlo_bound(2, 3, 3) == 3);
  CHECK(psd::skirlo_bound(3, 2, 3) == 3);
  CHECK(psd::skirlo_bound(7, 7, 31) == 25);
  CHECK_THROWS_AS(psd::skirlo_bound(2, 2, 0), psd::InputError);
  CHECK_THROWS_AS(psd::skirlo_bound(2, 2, 5), psd::InputError);
  CHECK(psd::profile(psd::reference::optimal_7x7()).d1 <= psd::skirlo_bound(7, 7, 32));
}

TEST_CASE("crosscorrelation") {
  std::mt19937 rng(9);
  const auto r = oracle::random_matrix(rng, 4, 5, 0.5);
  for (int a = -3; a <= 3; ++a)
    for (int b = -4; b <= 4; ++b) CHECK(psd::crosscorrelation(r, r, a, b) == psd::autocorrelation(r, a, b));

  const auto mark = BinaryMatrix::from_rows({"11", "10"});
  BinaryMatrix image(5, 6);
  image.set(2, 3, true);
  image.set(2, 4, true);
  image.set(3, 3, true);
  CHECK(psd::crosscorrelation(mark, image, 2, 3) == 3);
  int best = 0;
  for (int a = -1; a < 5; ++a)
    for (int b = -1; b < 6; ++b) best = std::max(best, psd::crosscorrelation(mark, image, a, b));
  CHECK(best == 3);

  const auto one = BinaryMatrix::from_rows({"1"});
  const auto zero = BinaryMatrix::from_rows({"0"});
  CHECK(psd::crosscorrelation(one, zero, 0, 0) == 0);
}
