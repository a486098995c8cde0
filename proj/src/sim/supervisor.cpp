#include "idionav/sim/supervisor.hpp"

#include <numbers>

namespace idionav::sim {
namespace {

constexpr int kPlacementAttempts = 2000;
constexpr double kPlacementMargin = 0.01;
constexpr double kWandererKeepout = 0.15;
constexpr double kDoorClearance = 0.005;

Vec2 random_point(const Box& b, Rng& rng) {
  return {rng.uniform(b.min.x, b.max.x), rng.uniform(b.min.y, b.max.y)};
}

double random_heading(Rng& rng) { return rng.uniform(-std::numbers::pi, std::numbers::pi); }

bool wanderer_fits(const WorldState& w, Vec2 p, double keepout) {
  const double r = w.geometry().body_radius;
  if (clearance(w, p, r, false) < kPlacementMargin) return false;
  return norm(p - w.robot.position()) >= 2.0 * r + keepout;
}

void place_wanderer(WorldState& w, const Box& region, Rng& rng) {
  for (int attempt = 0; attempt < kPlacementAttempts; ++attempt) {
    const Vec2 p = random_point(region, rng);
    if (wanderer_fits(w, p, kWandererKeepout)) {
      w.wanderer = {p.x, p.y, random_heading(rng)};
      return;
    }
  }
  // Nowhere to put it; park it out of play.
  w.wanderer_active = false;
}

void randomize_layout(WorldState& w, Rng& rng) {
  const WorldConfig& cfg = *w.config;
  const double r = cfg.robot.body_radius;

  if (cfg.target && cfg.target_spawn) {
    const Vec2 half = (cfg.target->max - cfg.target->min) * 0.5;
    const Vec2 c = random_point(*cfg.target_spawn, rng);
    w.target = Box{c - half, c + half};
  }

  if (cfg.robot_spawn) {
    bool placed = false;
    for (int attempt = 0; attempt < kPlacementAttempts && !placed; ++attempt) {
      const Vec2 p = random_point(*cfg.robot_spawn, rng);
      const double h = random_heading(rng);
      w.robot = {p.x, p.y, h};
      placed = clearance(w, p, r, false) >= kPlacementMargin;
    }
    if (!placed) w.robot = cfg.start;
  }

  if (cfg.has_wanderer) {
    w.wanderer_active = true;
    w.wanderer = cfg.wanderer_start;
    if (cfg.wanderer_spawn) place_wanderer(w, *cfg.wanderer_spawn, rng);
  }
}

void wander(WorldState& w, Rng& rng, double dt) {
  if (rng.bernoulli(kWandererTurnProbability)) w.wanderer.heading = random_heading(rng);
  const Vec2 next = w.wanderer.position() + unit(w.wanderer.heading) * (kWandererSpeed * dt);
  if (wanderer_fits(w, next, 0.0)) {
    w.wanderer.x = next.x;
    w.wanderer.y = next.y;
  } else {
    w.wanderer.heading = random_heading(rng);
  }
}

}  // namespace

void place_wanderer_in_room(WorldState& w, int room_id, Rng& rng) {
  for (const Room& room : w.config->rooms) {
    if (room.id == room_id) {
      w.wanderer_active = true;
      place_wanderer(w, room.area, rng);
      return;
    }
  }
}

void begin_run(WorldState& w, Rng& rng) {
  const WorldConfig& cfg = *w.config;
  w.clock = 0.0;
  w.collisions = 0;
  w.in_contact = false;
  w.finished = false;
  w.door_closed.assign(cfg.doors.size(), false);
  w.target = cfg.target;
  w.robot = cfg.start;
  w.wanderer_active = false;

  if (cfg.kind == WorldKind::Stl) {
    randomize_layout(w, rng);
  } else if (cfg.has_wanderer) {
    const int room = cfg.room_of(w.robot.position());
    if (room >= 0) {
      place_wanderer_in_room(w, room, rng);
    } else {
      w.wanderer_active = true;
      w.wanderer = cfg.wanderer_start;
    }
  }
  w.robot_previous = w.robot.position();
  w.robot_room = cfg.room_of(w.robot.position());
}

void supervisor_tick(WorldState& w, Rng& rng, double dt) {
  const WorldConfig& cfg = *w.config;
  if (w.wanderer_active) wander(w, rng, dt);
  if (cfg.kind != WorldKind::Ltl) return;

  const Vec2 p = w.robot.position();
  const double r = cfg.robot.body_radius;
  for (std::size_t i = 0; i < cfg.doors.size(); ++i) {
    if (w.door_closed[i]) continue;
    const Door& door = cfg.doors[i];
    if (cfg.room_of(p) == door.to_room && distance(door.segment, p) > r + kDoorClearance) {
      w.door_closed[i] = true;
    }
  }

  const int room = cfg.room_of(p);
  if (room >= 0 && room != w.robot_room) {
    w.robot_room = room;
    if (cfg.has_wanderer) place_wanderer_in_room(w, room, rng);
  }

  if (cfg.finish && !w.finished) {
    w.finished = segments_intersect(w.robot_previous, p, *cfg.finish);
  }
}

}  // namespace idionav::sim
