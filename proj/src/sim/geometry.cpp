#include "idionav/sim/geometry.hpp"

#include <algorithm>
#include <limits>
#include <numbers>

namespace idionav::sim {

double normalize_angle(double a) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  a = std::fmod(a + std::numbers::pi, two_pi);
  if (a < 0.0) a += two_pi;
  a -= std::numbers::pi;
  // fmod rounding can land exactly on +pi
  if (a >= std::numbers::pi) a -= two_pi;
  return a;
}

Vec2 closest_point(const Segment& s, Vec2 p) {
  const Vec2 d = s.b - s.a;
  const double len2 = dot(d, d);
  if (len2 == 0.0) return s.a;
  const double t = std::clamp(dot(p - s.a, d) / len2, 0.0, 1.0);
  return s.a + d * t;
}

Vec2 closest_point(const Box& b, Vec2 p) {
  return {std::clamp(p.x, b.min.x, b.max.x), std::clamp(p.y, b.min.y, b.max.y)};
}

double distance(const Segment& s, Vec2 p) { return norm(p - closest_point(s, p)); }

double distance(const Disc& d, Vec2 p) { return norm(p - d.center) - d.radius; }

double distance(const Box& b, Vec2 p) {
  if (b.contains(p)) {
    const double dx = std::min(p.x - b.min.x, b.max.x - p.x);
    const double dy = std::min(p.y - b.min.y, b.max.y - p.y);
    return -std::min(dx, dy);
  }
  return norm(p - closest_point(b, p));
}

std::optional<double> ray_cast(Vec2 origin, Vec2 dir, const Segment& s) {
  const Vec2 e = s.b - s.a;
  const double denom = cross(dir, e);
  if (std::abs(denom) < 1e-15) return std::nullopt;  // parallel
  const Vec2 w = s.a - origin;
  const double t = cross(w, e) / denom;
  const double u = cross(w, dir) / denom;
  if (t < 0.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return t;
}

std::optional<double> ray_cast(Vec2 origin, Vec2 dir, const Disc& d) {
  const Vec2 oc = origin - d.center;
  const double c = dot(oc, oc) - d.radius * d.radius;
  if (c <= 0.0) return 0.0;
  const double b = dot(oc, dir);
  if (b > 0.0) return std::nullopt;
  const double disc = b * b - c;
  if (disc < 0.0) return std::nullopt;
  return -b - std::sqrt(disc);
}

std::optional<double> ray_cast(Vec2 origin, Vec2 dir, const Box& b) {
  if (b.contains(origin)) return 0.0;
  double t_near = 0.0;
  double t_far = std::numeric_limits<double>::infinity();
  const double o[2] = {origin.x, origin.y};
  const double d[2] = {dir.x, dir.y};
  const double lo[2] = {b.min.x, b.min.y};
  const double hi[2] = {b.max.x, b.max.y};
  for (int k = 0; k < 2; ++k) {
    if (std::abs(d[k]) < 1e-15) {
      if (o[k] < lo[k] || o[k] > hi[k]) return std::nullopt;
      continue;
    }
    double t0 = (lo[k] - o[k]) / d[k];
    double t1 = (hi[k] - o[k]) / d[k];
    if (t0 > t1) std::swap(t0, t1);
    t_near = std::max(t_near, t0);
    t_far = std::min(t_far, t1);
    if (t_near > t_far) return std::nullopt;
  }
  return t_near;
}

bool segments_intersect(Vec2 p0, Vec2 p1, const Segment& s) {
  const Vec2 r = p1 - p0;
  const Vec2 e = s.b - s.a;
  const double denom = cross(r, e);
  const Vec2 w = s.a - p0;
  if (std::abs(denom) < 1e-15) return false;
  const double t = cross(w, e) / denom;
  const double u = cross(w, r) / denom;
  return t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0;
}

}  // namespace idionav::sim
