#pragma once

#include <cmath>
#include <optional>

namespace idionav::sim {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
  friend Vec2 operator*(double s, Vec2 a) { return {a.x * s, a.y * s}; }
  friend bool operator==(const Vec2&, const Vec2&) = default;
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline Vec2 unit(double angle) { return {std::cos(angle), std::sin(angle)}; }

struct Segment {
  Vec2 a;
  Vec2 b;
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Disc {
  Vec2 center;
  double radius = 0.0;
  friend bool operator==(const Disc&, const Disc&) = default;
};

/// Axis-aligned rectangle.
struct Box {
  Vec2 min;
  Vec2 max;

  Vec2 center() const { return (min + max) * 0.5; }
  bool contains(Vec2 p) const { return p.x >= min.x && p.x <= max.x && p.y >= min.y && p.y <= max.y; }
  friend bool operator==(const Box&, const Box&) = default;
};

/// Wraps an angle into [-pi, pi).
double normalize_angle(double a);

Vec2 closest_point(const Segment& s, Vec2 p);
Vec2 closest_point(const Box& b, Vec2 p);

double distance(const Segment& s, Vec2 p);
double distance(const Disc& d, Vec2 p);   // signed: negative inside
double distance(const Box& b, Vec2 p);    // signed: negative inside

// Ray casts return the ray parameter t >= 0 of the first hit for a ray
// origin + t * dir with |dir| = 1. An origin inside a solid hits at t = 0.
std::optional<double> ray_cast(Vec2 origin, Vec2 dir, const Segment& s);
std::optional<double> ray_cast(Vec2 origin, Vec2 dir, const Disc& d);
std::optional<double> ray_cast(Vec2 origin, Vec2 dir, const Box& b);

/// True if the segments p0-p1 and s intersect (endpoints inclusive).
bool segments_intersect(Vec2 p0, Vec2 p1, const Segment& s);

}  // namespace idionav::sim
