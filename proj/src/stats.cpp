#include "idionav/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace idionav::stats {

double mean(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("mean: empty sample");
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

double variance(std::span<const double> xs) {
  if (xs.size() < 2) throw std::invalid_argument("variance: need at least two values");
  const double m = mean(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return ss / static_cast<double>(xs.size() - 1);
}

double median(std::span<const double> xs) {
  if (xs.empty()) throw std::invalid_argument("median: empty sample");
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : (v[n / 2 - 1] + v[n / 2]) / 2.0;
}

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

WelchResult welch_t(std::span<const double> a, std::span<const double> b) {
  if (a.size() < 2 || b.size() < 2) throw std::invalid_argument("welch_t: each sample needs at least two values");
  const double va = variance(a) / static_cast<double>(a.size());
  const double vb = variance(b) / static_cast<double>(b.size());
  if (va + vb <= 0.0) throw std::invalid_argument("welch_t: both samples have zero variance");
  WelchResult r;
  r.t = (mean(a) - mean(b)) / std::sqrt(va + vb);
  r.df = (va + vb) * (va + vb) /
         (va * va / static_cast<double>(a.size() - 1) + vb * vb / static_cast<double>(b.size() - 1));
  const boost::math::students_t dist(r.df);
  r.p = std::min(1.0, 2.0 * boost::math::cdf(boost::math::complement(dist, std::abs(r.t))));
  return r;
}

std::vector<double> average_ranks(std::span<const double> xs) {
  std::vector<std::size_t> idx(xs.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return xs[i] < xs[j]; });
  std::vector<double> ranks(xs.size());
  for (std::size_t start = 0; start < idx.size();) {
    std::size_t end = start + 1;
    while (end < idx.size() && xs[idx[end]] == xs[idx[start]]) ++end;
    const double r = (static_cast<double>(start + 1) + static_cast<double>(end)) / 2.0;
    for (std::size_t k = start; k < end; ++k) ranks[idx[k]] = r;
    start = end;
  }
  return ranks;
}

namespace {

// Sum of t^3 - t over groups of tied values.
double tie_term(std::span<const double> xs) {
  std::vector<double> v(xs.begin(), xs.end());
  std::sort(v.begin(), v.end());
  double total = 0.0;
  for (std::size_t start = 0; start < v.size();) {
    std::size_t end = start + 1;
    while (end < v.size() && v[end] == v[start]) ++end;
    const double t = static_cast<double>(end - start);
    total += t * t * t - t;
    start = end;
  }
  return total;
}

}  // namespace

RankTest mann_whitney_less(std::span<const double> a, std::span<const double> b) {
  if (a.empty() || b.empty()) throw std::invalid_argument("mann_whitney_less: empty sample");
  std::vector<double> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  const auto ranks = average_ranks(all);
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  const double n = na + nb;
  double ra = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) ra += ranks[i];

  RankTest r;
  r.statistic = ra - na * (na + 1.0) / 2.0;
  const double mu = na * nb / 2.0;
  const double var = na * nb / 12.0 * ((n + 1.0) - tie_term(all) / (n * (n - 1.0)));
  if (var <= 0.0) {
    r.p = 1.0;
    return r;
  }
  r.z = (r.statistic - mu + 0.5) / std::sqrt(var);
  r.p = normal_cdf(r.z);
  return r;
}

RankTest wilcoxon_signed_rank(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("wilcoxon_signed_rank: samples must be paired");
  std::vector<double> diffs;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) diffs.push_back(a[i] - b[i]);
  }
  RankTest r;
  if (diffs.empty()) return r;
  std::vector<double> mags;
  for (double d : diffs) mags.push_back(std::abs(d));
  const auto ranks = average_ranks(mags);
  for (std::size_t i = 0; i < diffs.size(); ++i) {
    if (diffs[i] > 0) r.statistic += ranks[i];
  }
  const double n = static_cast<double>(diffs.size());
  const double mu = n * (n + 1.0) / 4.0;
  const double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0 - tie_term(mags) / 48.0;
  if (var <= 0.0) return r;
  const double dev = r.statistic - mu;
  const double corrected = dev > 0 ? std::max(0.0, dev - 0.5) : std::min(0.0, dev + 0.5);
  r.z = corrected / std::sqrt(var);
  r.p = std::min(1.0, 2.0 * (1.0 - normal_cdf(std::abs(r.z))));
  return r;
}

}  // namespace idionav::stats
