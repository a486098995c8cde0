#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "idionav/rng.hpp"
#include "idionav/sim/geometry.hpp"

namespace idionav::sim {

/// Wheel rotation per speed unit, rad/s.
inline constexpr double kSpeedUnit = 0.00683;
inline constexpr double kMaxWheelSpeed = 1000.0;
/// Control period; the IR ring is sampled once per tick.
inline constexpr double kControlTick = 0.192;
inline constexpr int kPhysicsSubsteps = 8;

inline constexpr int kIrSensorCount = 8;
inline constexpr double kIrRange = 0.10;
inline constexpr int kIrMaxReading = 4095;

inline constexpr int kCameraColumns = 15;
inline constexpr int kCameraRows = 3;
inline constexpr int kCameraCentreColumn = 7;
inline constexpr double kCameraFov = 0.3;

/// Sensor bearings relative to the heading (counter-clockwise positive).
/// Indices 0-2 face right, 3-4 rear, 5-7 left.
inline constexpr std::array<double, kIrSensorCount> kIrBearings = {
    -0.30, -0.80, -1.57, -2.64, 2.64, 1.57, 0.80, 0.30};

/// e-puck-like defaults. Overridable per world file.
struct RobotGeometry {
  double wheel_radius = 0.0205;
  double axle = 0.053;
  double body_radius = 0.037;
};

struct Pose {
  double x = 0.0;
  double y = 0.0;
  double heading = 0.0;

  Vec2 position() const { return {x, y}; }
  friend bool operator==(const Pose&, const Pose&) = default;
};

/// Wheel speeds in speed units per second.
struct WheelCommand {
  double left = 0.0;
  double right = 0.0;
  friend bool operator==(const WheelCommand&, const WheelCommand&) = default;
};

struct IrReadings {
  std::array<int, kIrSensorCount> values{};
  friend bool operator==(const IrReadings&, const IrReadings&) = default;
};

struct BlobReport {
  bool seen = false;
  int pixel_count = 0;
  int centroid_col = 0;
  friend bool operator==(const BlobReport&, const BlobReport&) = default;
};

enum class WorldKind { Ltl, Stl };

struct Door {
  Segment segment;
  int from_room = 0;
  int to_room = 0;
};

struct Room {
  int id = 0;
  Box area;
};

/// Static description of a world, loaded from a world file.
struct WorldConfig {
  std::string name;
  WorldKind kind = WorldKind::Stl;
  RobotGeometry robot;
  std::vector<Segment> walls;
  std::vector<Disc> pillars;
  std::vector<Box> blocks;
  std::vector<Segment> markers;  // blue paint, not solid
  std::optional<Box> target;     // blue and solid
  std::vector<Door> doors;
  std::vector<Room> rooms;
  Pose start;
  std::optional<Segment> finish;
  bool has_wanderer = false;
  Pose wanderer_start;
  std::optional<Box> robot_spawn;
  std::optional<Box> target_spawn;
  std::optional<Box> wanderer_spawn;

  int room_of(Vec2 p) const;
};

struct WorldState {
  std::shared_ptr<const WorldConfig> config;
  Pose robot;
  Vec2 robot_previous;
  Pose wanderer;
  bool wanderer_active = false;
  std::vector<bool> door_closed;
  std::optional<Box> target;
  double clock = 0.0;
  int collisions = 0;
  bool in_contact = false;
  int robot_room = -1;
  bool finished = false;

  const RobotGeometry& geometry() const { return config->robot; }
  int doors_passed() const;
};

/// Fresh state at the configured start poses with all doors open.
WorldState make_world(std::shared_ptr<const WorldConfig> config);

/// Advances the robot by dt under differential-drive kinematics, resolving
/// penetration by projecting the body out of obstacles. Commands are
/// clamped to +-kMaxWheelSpeed.
void step(WorldState& world, WheelCommand cmd, double dt);

/// Noise-free IR response for an obstacle at `distance` metres from the
/// sensor, before rounding.
double ir_response(double distance);

/// Distance from the body surface along sensor `index`'s ray to the
/// nearest solid, or +inf.
double ir_ray_distance(const WorldState& world, int index);

IrReadings read_ir(const WorldState& world, Rng& rng, bool noise = true);

BlobReport read_blob(const WorldState& world);

/// Signed clearance between a disc body at `p` and the nearest solid,
/// ignoring the mission robot (and the wanderer when `include_wanderer`
/// is false).
double clearance(const WorldState& world, Vec2 p, double radius, bool include_wanderer);

}  // namespace idionav::sim
