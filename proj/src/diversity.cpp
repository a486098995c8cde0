#include "idionav/diversity.hpp"

#include <array>
#include <stdexcept>

namespace idionav::diversity {

int group_points(std::span<const int> values) {
  if (values.size() != kGroupSize) throw std::invalid_argument("group_points: need exactly 5 values");
  int points = 0;
  for (std::size_t a = 0; a < values.size(); ++a) {
    for (std::size_t b = a + 1; b < values.size(); ++b) {
      if (values[a] != values[b]) ++points;
    }
  }
  return points;
}

double diversity_z(const std::vector<std::vector<int>>& columns, double sigma) {
  if (!(sigma > 0.0)) throw std::invalid_argument("diversity_z: sigma must be positive");
  if (columns.empty()) throw std::invalid_argument("diversity_z: no columns");
  double total = 0.0;
  for (const auto& column : columns) total += group_points(column);
  return total / (sigma * static_cast<double>(columns.size()));
}

SigmaEstimate expected_sigma(int domain_size, long samples, Rng& rng) {
  if (domain_size < 1) throw std::invalid_argument("expected_sigma: domain must be non-empty");
  if (samples < 100000) throw std::invalid_argument("expected_sigma: need at least 1e5 samples");
  long long total = 0;
  std::array<int, kGroupSize> draw{};
  for (long s = 0; s < samples; ++s) {
    for (int& v : draw) v = rng.uniform_int(0, domain_size - 1);
    total += group_points(draw);
  }
  return {static_cast<double>(total) / static_cast<double>(samples), samples};
}

double exact_sigma(int domain_size) {
  if (domain_size < 1) throw std::invalid_argument("exact_sigma: domain must be non-empty");
  return kPairsPerGroup * (1.0 - 1.0 / domain_size);
}

DiversityReport diversity_report(const ga::SeedFile& seeds, double sigma_u, double sigma_s) {
  if (seeds.v() != kGroupSize) throw std::invalid_argument("diversity_report: need exactly 5 sets");
  DiversityReport report;
  std::vector<std::vector<int>> types, speeds;
  for (int j = 0; j < seeds.y; ++j) {
    std::vector<int> u, s;
    for (const auto& set : seeds.sets) {
      const auto& ab = set.antibodies[static_cast<std::size_t>(j)];
      u.push_back(static_cast<int>(ab.type));
      s.push_back(ab.speed());
    }
    report.points_u.push_back(group_points(u));
    report.points_s.push_back(group_points(s));
    types.push_back(std::move(u));
    speeds.push_back(std::move(s));
  }
  report.z_u = diversity_z(types, sigma_u);
  report.z_s = diversity_z(speeds, sigma_s);
  return report;
}

}  // namespace idionav::diversity
