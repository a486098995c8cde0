#pragma once

#include "idionav/rng.hpp"
#include "idionav/sim/world.hpp"

namespace idionav::sim {

inline constexpr double kWandererSpeed = 0.03;          // m/s
inline constexpr double kWandererTurnProbability = 0.1;  // per tick

/// Resets clock, collision count and doors for a new run. LTL worlds put the
/// robot back on its start pose; STL worlds draw a fresh placement of the
/// robot, target and wanderer from the spawn regions.
void begin_run(WorldState& world, Rng& rng);

/// Per-tick supervisor duties: wanderer random walk, door closing behind
/// the robot, keeping the wanderer in the robot's room and finish-line
/// detection.
void supervisor_tick(WorldState& world, Rng& rng, double dt);

/// Moves the wanderer to a random free spot inside room `room_id`.
void place_wanderer_in_room(WorldState& world, int room_id, Rng& rng);

}  // namespace idionav::sim
