#pragma once

#include <span>
#include <vector>

namespace idionav::ga {

/// Collision weight used while evolving behaviours.
inline constexpr double kLtlRho = 1.0;
/// Collision weight used when ranking seed sets and scoring trials.
inline constexpr double kStlRho = 8.0;

/// f = time + rho * collisions. Lower is better.
inline double absolute_fitness(double time, double collisions, double rho) {
  return time + rho * collisions;
}

/// Inverse-fitness shares: mu_i = 1 / (f_i * sum_k 1/f_k). The shares sum
/// to one and a smaller f gives a larger share. Throws
/// std::invalid_argument on an empty input or any f <= 0.
std::vector<double> relative_fitness(std::span<const double> fitness);

}  // namespace idionav::ga
