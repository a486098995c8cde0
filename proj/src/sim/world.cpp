#include "idionav/sim/world.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace idionav::sim {
namespace {

constexpr double kTouchTolerance = 1e-6;
constexpr int kResolvePasses = 3;

// Calibration anchors (distance m, reading); interpolated linearly in
// log-distance. The 0.10 m anchor is the detection horizon.
struct IrAnchor {
  double distance;
  double reading;
};
constexpr std::array<IrAnchor, 4> kIrAnchors = {{
    {0.10, 0.0},
    {0.03, 250.0},
    {0.01, 2400.0},
    {0.002, 3500.0},
}};

// Visits every solid except the mission robot. The target counts as solid.
template <typename Fn>
void for_each_solid(const WorldState& w, bool include_wanderer, Fn&& fn) {
  const WorldConfig& cfg = *w.config;
  for (const Segment& s : cfg.walls) fn(s);
  for (std::size_t i = 0; i < cfg.doors.size(); ++i) {
    if (w.door_closed[i]) fn(cfg.doors[i].segment);
  }
  for (const Disc& d : cfg.pillars) fn(d);
  for (const Box& b : cfg.blocks) fn(b);
  if (w.target) fn(*w.target);
  if (include_wanderer && w.wanderer_active) {
    fn(Disc{w.wanderer.position(), cfg.robot.body_radius});
  }
}

// Pushes a disc body at c (radius r) out of `shape`. Returns true when the
// body touches or penetrates it.
bool push_out(Vec2& c, double r, Vec2 q, double d, Vec2 fallback_normal) {
  if (d >= r + kTouchTolerance) return false;
  if (d < r) {
    const Vec2 n = d > 1e-12 ? (c - q) * (1.0 / d) : fallback_normal;
    c = q + n * r;
  }
  return true;
}

bool push_out(Vec2& c, double r, const Segment& s) {
  const Vec2 q = closest_point(s, c);
  const Vec2 e = s.b - s.a;
  const double len = norm(e);
  const Vec2 perp = len > 0.0 ? Vec2{-e.y / len, e.x / len} : Vec2{1.0, 0.0};
  return push_out(c, r, q, norm(c - q), perp);
}

bool push_out(Vec2& c, double r, const Disc& disc) {
  const double d = norm(c - disc.center);
  const double reach = disc.radius + r;
  if (d >= reach + kTouchTolerance) return false;
  if (d < reach) {
    const Vec2 n = d > 1e-12 ? (c - disc.center) * (1.0 / d) : Vec2{1.0, 0.0};
    c = disc.center + n * reach;
  }
  return true;
}

bool push_out(Vec2& c, double r, const Box& b) {
  if (b.contains(c)) {
    // Leave through the nearest face.
    const double left = c.x - b.min.x;
    const double right = b.max.x - c.x;
    const double down = c.y - b.min.y;
    const double up = b.max.y - c.y;
    const double m = std::min({left, right, down, up});
    if (m == left) c.x = b.min.x - r;
    else if (m == right) c.x = b.max.x + r;
    else if (m == down) c.y = b.min.y - r;
    else c.y = b.max.y + r;
    return true;
  }
  const Vec2 q = closest_point(b, c);
  return push_out(c, r, q, norm(c - q), Vec2{1.0, 0.0});
}

bool resolve_penetration(WorldState& w) {
  Vec2 c = w.robot.position();
  const double r = w.geometry().body_radius;
  bool touched = false;
  for (int pass = 0; pass < kResolvePasses; ++pass) {
    const Vec2 before = c;
    for_each_solid(w, true, [&](const auto& shape) { touched |= push_out(c, r, shape); });
    if (before == c) break;
  }
  w.robot.x = c.x;
  w.robot.y = c.y;
  return touched;
}

template <typename Fn>
void for_each_blue(const WorldState& w, Fn&& fn) {
  for (const Segment& s : w.config->markers) fn(s);
  if (w.target) fn(*w.target);
}

double nearest_hit(const WorldState& w, Vec2 origin, Vec2 dir, bool include_target) {
  double best = std::numeric_limits<double>::infinity();
  const WorldConfig& cfg = *w.config;
  auto consider = [&](const auto& shape) {
    if (auto t = ray_cast(origin, dir, shape); t && *t < best) best = *t;
  };
  for (const Segment& s : cfg.walls) consider(s);
  for (std::size_t i = 0; i < cfg.doors.size(); ++i) {
    if (w.door_closed[i]) consider(cfg.doors[i].segment);
  }
  for (const Disc& d : cfg.pillars) consider(d);
  for (const Box& b : cfg.blocks) consider(b);
  if (include_target && w.target) consider(*w.target);
  if (w.wanderer_active) consider(Disc{w.wanderer.position(), cfg.robot.body_radius});
  return best;
}

}  // namespace

int WorldConfig::room_of(Vec2 p) const {
  for (const Room& room : rooms) {
    if (room.area.contains(p)) return room.id;
  }
  return -1;
}

int WorldState::doors_passed() const {
  return static_cast<int>(std::count(door_closed.begin(), door_closed.end(), true));
}

WorldState make_world(std::shared_ptr<const WorldConfig> config) {
  WorldState w;
  w.robot = config->start;
  w.robot_previous = w.robot.position();
  w.wanderer = config->wanderer_start;
  w.wanderer_active = config->has_wanderer;
  w.door_closed.assign(config->doors.size(), false);
  w.target = config->target;
  w.robot_room = config->room_of(w.robot.position());
  w.config = std::move(config);
  return w;
}

void step(WorldState& w, WheelCommand cmd, double dt) {
  const RobotGeometry& g = w.geometry();
  const double metres_per_unit = kSpeedUnit * g.wheel_radius;
  const double left = std::clamp(cmd.left, -kMaxWheelSpeed, kMaxWheelSpeed) * metres_per_unit;
  const double right = std::clamp(cmd.right, -kMaxWheelSpeed, kMaxWheelSpeed) * metres_per_unit;
  const double v = 0.5 * (left + right);
  const double omega = (right - left) / g.axle;
  const double h = dt / kPhysicsSubsteps;

  w.robot_previous = w.robot.position();
  bool contact = false;
  for (int k = 0; k < kPhysicsSubsteps; ++k) {
    const double theta = w.robot.heading;
    if (std::abs(omega) < 1e-12) {
      w.robot.x += v * std::cos(theta) * h;
      w.robot.y += v * std::sin(theta) * h;
    } else {
      const double theta_next = theta + omega * h;
      const double radius = v / omega;
      w.robot.x += radius * (std::sin(theta_next) - std::sin(theta));
      w.robot.y -= radius * (std::cos(theta_next) - std::cos(theta));
      w.robot.heading = normalize_angle(theta_next);
    }
    contact |= resolve_penetration(w);
  }
  if (contact && !w.in_contact) ++w.collisions;
  w.in_contact = contact;
  w.clock += dt;
}

double ir_response(double distance) {
  if (distance >= kIrAnchors.front().distance) return 0.0;
  if (distance <= kIrAnchors.back().distance) return kIrAnchors.back().reading;
  for (std::size_t i = 0; i + 1 < kIrAnchors.size(); ++i) {
    const IrAnchor far = kIrAnchors[i];
    const IrAnchor near = kIrAnchors[i + 1];
    if (distance <= far.distance && distance >= near.distance) {
      const double u = (std::log(far.distance) - std::log(distance)) /
                       (std::log(far.distance) - std::log(near.distance));
      return far.reading + u * (near.reading - far.reading);
    }
  }
  return 0.0;
}

double ir_ray_distance(const WorldState& w, int index) {
  const double r = w.geometry().body_radius;
  const double bearing = w.robot.heading + kIrBearings[static_cast<std::size_t>(index)];
  const Vec2 dir = unit(bearing);
  const Vec2 origin = w.robot.position() + dir * r;
  return nearest_hit(w, origin, dir, true);
}

IrReadings read_ir(const WorldState& w, Rng& rng, bool noise) {
  IrReadings out;
  for (int i = 0; i < kIrSensorCount; ++i) {
    double value = ir_response(ir_ray_distance(w, i));
    if (noise) value *= rng.uniform(0.9, 1.1);
    out.values[static_cast<std::size_t>(i)] =
        std::clamp(static_cast<int>(std::lround(value)), 0, kIrMaxReading);
  }
  return out;
}

BlobReport read_blob(const WorldState& w) {
  const double r = w.geometry().body_radius;
  const Vec2 origin = w.robot.position() + unit(w.robot.heading) * r;
  constexpr double column_width = kCameraFov / kCameraColumns;
  int blue_columns = 0;
  int column_sum = 0;
  for (int c = 0; c < kCameraColumns; ++c) {
    const Vec2 dir = unit(w.robot.heading + (kCameraCentreColumn - c) * column_width);
    const double occluder = nearest_hit(w, origin, dir, false);
    double blue = std::numeric_limits<double>::infinity();
    for_each_blue(w, [&](const auto& shape) {
      if (auto t = ray_cast(origin, dir, shape); t && *t < blue) blue = *t;
    });
    if (std::isfinite(blue) && blue <= occluder) {
      ++blue_columns;
      column_sum += c;
    }
  }
  BlobReport report;
  report.pixel_count = blue_columns * kCameraRows;
  report.seen = blue_columns > 0;
  if (report.seen) {
    report.centroid_col = static_cast<int>(
        std::lround(static_cast<double>(column_sum) / blue_columns));
  }
  return report;
}

double clearance(const WorldState& w, Vec2 p, double radius, bool include_wanderer) {
  double best = std::numeric_limits<double>::infinity();
  for_each_solid(w, include_wanderer, [&](const auto& shape) {
    best = std::min(best, distance(shape, p) - radius);
  });
  return best;
}

}  // namespace idionav::sim
