#include "idionav/perception.hpp"

#include <stdexcept>
#include <string>

namespace idionav::perception {
namespace {

int orientation_offset(Orientation o) {
  switch (o) {
    case Orientation::Right: return 0;
    case Orientation::Rear: return 1;
    case Orientation::Left: return 2;
  }
  return 0;
}

bool in_flank_window(int v) { return v >= kFlankThreshold && v < kCollisionThreshold; }

}  // namespace

AntigenMode parse_mode(std::string_view text) {
  if (text == "8") return AntigenMode::Eight;
  if (text == "9") return AntigenMode::Nine;
  throw std::invalid_argument("antigen mode must be 8 or 9, got '" + std::string(text) + "'");
}

SensorSummary summarize(const sim::IrReadings& ir, const sim::BlobReport& blob) {
  SensorSummary s;
  s.blob = blob;
  for (int i = 0; i < sim::kIrSensorCount; ++i) {
    const int v = ir.values[static_cast<std::size_t>(i)];
    if (v > s.v_max) {
      s.v_max = v;
      s.i_max = i;
    }
  }
  return s;
}

Orientation orientation_of(int sensor_index) {
  if (sensor_index <= 2) return Orientation::Right;
  if (sensor_index <= 4) return Orientation::Rear;
  return Orientation::Left;
}

AntigenCode classify8(const SensorSummary& s) {
  AntigenCode a{0, AntigenMode::Eight};
  if (s.v_max < kObstacleThreshold) {
    a.code = s.blob.seen ? 1 : 0;
  } else {
    const int base = s.v_max < kCollisionThreshold ? 2 : 5;
    a.code = base + orientation_offset(orientation_of(s.i_max));
  }
  return a;
}

AntigenCode classify9(const SensorSummary& s, const sim::IrReadings& raw) {
  AntigenCode a{0, AntigenMode::Nine};
  if (s.v_max >= kCollisionThreshold) {
    a.code = 6 + orientation_offset(orientation_of(s.i_max));
  } else if (in_flank_window(raw.values[kLeftFlankSensor]) &&
             in_flank_window(raw.values[kRightFlankSensor])) {
    a.code = 5;
  } else {
    a.code = classify8(s).code;
  }
  return a;
}

AntigenCode classify(const SensorSummary& s, const sim::IrReadings& raw, AntigenMode mode) {
  return mode == AntigenMode::Eight ? classify8(s) : classify9(s, raw);
}

AntigenKind kind_of(AntigenCode a) {
  if (a.code == 0) return AntigenKind::TargetUnseen;
  if (a.code == 1) return AntigenKind::TargetSeen;
  if (a.mode == AntigenMode::Eight) {
    return a.code <= 4 ? AntigenKind::Near : AntigenKind::Collision;
  }
  if (a.code == 5) return AntigenKind::NearBoth;
  return a.code <= 4 ? AntigenKind::Near : AntigenKind::Collision;
}

bool is_obstacle(AntigenCode a) { return a.code >= 2; }
bool is_collision(AntigenCode a) { return kind_of(a) == AntigenKind::Collision; }
bool is_near(AntigenCode a) {
  const AntigenKind k = kind_of(a);
  return k == AntigenKind::Near || k == AntigenKind::NearBoth;
}
bool is_valid(AntigenCode a) { return a.code >= 0 && a.code < antigen_count(a.mode); }

}  // namespace idionav::perception
