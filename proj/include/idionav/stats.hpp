#pragma once

#include <span>
#include <vector>

namespace idionav::stats {

double mean(std::span<const double> xs);
/// Sample variance (n - 1 denominator).
double variance(std::span<const double> xs);
double median(std::span<const double> xs);

struct WelchResult {
  double t = 0.0;
  double df = 0.0;
  /// Two-sided.
  double p = 1.0;
};

/// Unequal-variance t-test. Throws std::invalid_argument when either sample
/// has fewer than 2 values or both variances are zero.
WelchResult welch_t(std::span<const double> a, std::span<const double> b);

struct RankTest {
  double statistic = 0.0;
  double z = 0.0;
  double p = 1.0;
};

/// Mann-Whitney U test of "a tends to be smaller than b" (one-sided),
/// normal approximation with tie and continuity corrections. statistic is
/// U for sample a.
RankTest mann_whitney_less(std::span<const double> a, std::span<const double> b);

/// Two-sided Wilcoxon signed-rank test on pairs (a_i, b_i); zero
/// differences are dropped. statistic is W+.
RankTest wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b);

/// Average ranks (1-based) with ties sharing their mean rank.
std::vector<double> average_ranks(std::span<const double> xs);

double normal_cdf(double z);

}  // namespace idionav::stats
