#pragma once

#include <span>
#include <vector>

#include "idionav/rng.hpp"
#include "idionav/seed_file.hpp"

namespace idionav::diversity {

inline constexpr int kGroupSize = 5;
inline constexpr int kPairsPerGroup = 10;
/// Expected points of a random group for the type attribute (6 values).
inline constexpr double kSigmaType = 8.333;
/// Expected points of a random group for speeds; the speed range is wide
/// enough that random groups are almost always all different.
inline constexpr double kSigmaSpeed = 10.0;

/// Number of unequal pairs among 5 values. Throws std::invalid_argument
/// unless exactly 5 values are given.
int group_points(std::span<const int> values);

/// Z = sum of column points / (sigma * columns). Each column holds one
/// attribute value per set (5 sets).
double diversity_z(const std::vector<std::vector<int>>& columns, double sigma);

struct SigmaEstimate {
  double sigma = 0.0;
  long samples = 0;
};

/// Monte-Carlo mean of group_points over uniform draws from a domain of
/// `domain_size` values. Requires at least 1e5 samples.
SigmaEstimate expected_sigma(int domain_size, long samples, Rng& rng);

/// Closed form 10 * (1 - 1/n) of the same expectation.
double exact_sigma(int domain_size);

struct DiversityReport {
  double z_u = 0.0;
  double z_s = 0.0;
  std::vector<int> points_u;
  std::vector<int> points_s;
};

/// Diversity of type and speed across the sets of a seed file with
/// exactly 5 sets.
DiversityReport diversity_report(const ga::SeedFile& seeds, double sigma_u = kSigmaType,
                                 double sigma_s = kSigmaSpeed);

}  // namespace idionav::diversity
