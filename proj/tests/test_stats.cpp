#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "idionav/rng.hpp"
#include "idionav/stats.hpp"

using namespace idionav;
using namespace idionav::stats;

TEST_CASE("basic moments") {
  const std::vector<double> x = {100, 200, 300};
  CHECK(mean(x) == 200);
  CHECK(variance(x) == 10000);
  CHECK(median(x) == 200);
  CHECK(median(std::vector<double>{4, 1, 3, 2}) == 2.5);
  CHECK_THROWS_AS(mean(std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(variance(std::vector<double>{1}), std::invalid_argument);
}

TEST_CASE("Welch t-test") {
  const std::vector<double> a = {1, 2, 3}, b = {4, 5, 6};
  const auto r = welch_t(a, b);
  CHECK(r.t == doctest::Approx(-3.674).epsilon(1e-3));
  CHECK(r.df == doctest::Approx(4.0));
  CHECK(r.p == doctest::Approx(0.0213).epsilon(0.01));

  const auto s = welch_t(b, a);
  CHECK(s.t == doctest::Approx(-r.t));
  CHECK(s.p == doctest::Approx(r.p));

  const auto same = welch_t(a, a);
  CHECK(same.t == 0);
  CHECK(same.p == doctest::Approx(1.0));

  // Unequal sizes and variances: df from the Welch-Satterthwaite formula.
  const std::vector<double> c = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, d = {3, 3.5, 4};
  const double va = variance(c) / 10, vb = variance(d) / 3;
  const auto u = welch_t(c, d);
  CHECK(u.t == doctest::Approx((5.5 - 3.5) / std::sqrt(va + vb)));
  CHECK(u.df == doctest::Approx((va + vb) * (va + vb) / (va * va / 9 + vb * vb / 2)));
  CHECK(u.p > 0.0);
  CHECK(u.p < 1.0);

  CHECK_THROWS_AS(welch_t(std::vector<double>{1}, b), std::invalid_argument);
  CHECK_THROWS_AS(welch_t(std::vector<double>{2, 2}, std::vector<double>{2, 2}), std::invalid_argument);
}

TEST_CASE("average ranks") {
  const std::vector<double> x = {10, 20, 10, 30, 20, 20};
  const std::vector<double> want = {1.5, 4, 1.5, 6, 4, 4};
  CHECK(average_ranks(x) == want);
}

TEST_CASE("Mann-Whitney one-sided") {
  const std::vector<double> a = {1, 2, 3}, b = {4, 5, 6};
  // U = 0, mean 4.5, variance 3 * 3 * 7 / 12 = 5.25, continuity +0.5.
  const auto r = mann_whitney_less(a, b);
  CHECK(r.statistic == 0);
  CHECK(r.z == doctest::Approx(-4.0 / std::sqrt(5.25)));
  CHECK(r.p == doctest::Approx(0.04043).epsilon(1e-3));
  CHECK(mann_whitney_less(b, a).p > 0.95);

  // Samples from the same distribution: p roughly uniform.
  Rng rng(4);
  int small = 0;
  const int n = 2000;
  for (int t = 0; t < n; ++t) {
    std::vector<double> x(30), y(30);
    for (auto& v : x) v = rng.uniform();
    for (auto& v : y) v = rng.uniform();
    small += mann_whitney_less(x, y).p < 0.05;
  }
  CHECK(small / double(n) == doctest::Approx(0.05).epsilon(0.4));

  // Shifted samples are detected.
  std::vector<double> lo(40), hi(40);
  for (auto& v : lo) v = rng.uniform();
  for (auto& v : hi) v = rng.uniform() + 0.5;
  CHECK(mann_whitney_less(lo, hi).p < 0.001);
}

TEST_CASE("Wilcoxon signed rank") {
  const std::vector<double> a = {2, 4, 6, 8, 10}, b = {1, 2, 3, 4, 5};
  // W+ = 15, mean 7.5, variance 13.75, continuity 0.5.
  const auto r = wilcoxon_signed_rank(a, b);
  CHECK(r.statistic == 15);
  CHECK(r.z == doctest::Approx(7.0 / std::sqrt(13.75)));
  CHECK(r.p == doctest::Approx(0.05905).epsilon(1e-3));
  CHECK(wilcoxon_signed_rank(b, a).p == doctest::Approx(r.p));
  CHECK(wilcoxon_signed_rank(a, a).p == 1.0);
  CHECK_THROWS_AS(wilcoxon_signed_rank(a, std::vector<double>{1}), std::invalid_argument);
}
