#pragma once

#include <string_view>

#include "idionav/sim/world.hpp"

namespace idionav::perception {

enum class AntigenMode { Eight = 8, Nine = 9 };

inline constexpr int kObstacleThreshold = 250;
inline constexpr int kCollisionThreshold = 2400;
/// Lower bound of the flanking-sensor window for the "near left and right"
/// antigen in nine-antigen mode.
inline constexpr int kFlankThreshold = 140;
inline constexpr int kRightFlankSensor = 2;
inline constexpr int kLeftFlankSensor = 5;

constexpr int antigen_count(AntigenMode mode) { return static_cast<int>(mode); }

AntigenMode parse_mode(std::string_view text);

struct AntigenCode {
  int code = 0;
  AntigenMode mode = AntigenMode::Eight;
  friend bool operator==(const AntigenCode&, const AntigenCode&) = default;
};

enum class Orientation { Right, Rear, Left };
enum class AntigenKind { TargetUnseen, TargetSeen, Near, NearBoth, Collision };

struct SensorSummary {
  int i_max = 0;
  int v_max = 0;
  sim::BlobReport blob;
};

SensorSummary summarize(const sim::IrReadings& ir, const sim::BlobReport& blob);

Orientation orientation_of(int sensor_index);

AntigenCode classify8(const SensorSummary& s);
AntigenCode classify9(const SensorSummary& s, const sim::IrReadings& raw);
AntigenCode classify(const SensorSummary& s, const sim::IrReadings& raw, AntigenMode mode);

AntigenKind kind_of(AntigenCode a);
bool is_obstacle(AntigenCode a);
bool is_collision(AntigenCode a);
bool is_near(AntigenCode a);
bool is_valid(AntigenCode a);

}  // namespace idionav::perception
