#include "idionav/behaviors.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace idionav::behaviors {
namespace {

constexpr std::size_t idx(Attribute a) { return static_cast<std::size_t>(a); }
constexpr std::size_t idx(BehaviourType t) { return static_cast<std::size_t>(t); }

constexpr Bounds kDirectionBounds{0, 1};

double reduced(double speed, double percent) { return speed * (1.0 - percent / 100.0); }

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s) {
  std::size_t used = 0;
  const std::string str(s);
  int v = 0;
  try {
    v = std::stoi(str, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer '" + str + "'");
  }
  if (used != str.size()) throw std::invalid_argument("bad integer '" + str + "'");
  return v;
}

}  // namespace

LimitProfile LimitProfile::table2() {
  LimitProfile p;
  p.name_ = "table2";
  auto row = [&](BehaviourType t) -> Row& { return p.rows_[idx(t)]; };

  row(BehaviourType::WanderSingle)[idx(Attribute::Speed)] = Bounds{50, 800};
  row(BehaviourType::WanderSingle)[idx(Attribute::Frequency)] = Bounds{10, 90};
  row(BehaviourType::WanderSingle)[idx(Attribute::Angle)] = Bounds{10, 110};
  row(BehaviourType::WanderSingle)[idx(Attribute::Direction)] = kDirectionBounds;

  row(BehaviourType::WanderBoth)[idx(Attribute::Speed)] = Bounds{50, 800};
  row(BehaviourType::WanderBoth)[idx(Attribute::Frequency)] = Bounds{10, 90};
  row(BehaviourType::WanderBoth)[idx(Attribute::Angle)] = Bounds{10, 110};
  row(BehaviourType::WanderBoth)[idx(Attribute::RightFrequency)] = Bounds{10, 90};
  row(BehaviourType::WanderBoth)[idx(Attribute::RightAngle)] = Bounds{10, 110};

  row(BehaviourType::ForwardTurn)[idx(Attribute::Speed)] = Bounds{50, 800};
  row(BehaviourType::ForwardTurn)[idx(Attribute::Angle)] = Bounds{20, 200};
  row(BehaviourType::ForwardTurn)[idx(Attribute::Direction)] = kDirectionBounds;

  row(BehaviourType::StaticTurn)[idx(Attribute::Speed)] = Bounds{50, 800};
  row(BehaviourType::StaticTurn)[idx(Attribute::Angle)] = Bounds{100, 100};
  row(BehaviourType::StaticTurn)[idx(Attribute::Direction)] = kDirectionBounds;

  row(BehaviourType::ReverseTurn)[idx(Attribute::Speed)] = Bounds{500, 800};
  row(BehaviourType::ReverseTurn)[idx(Attribute::Angle)] = Bounds{20, 200};
  row(BehaviourType::ReverseTurn)[idx(Attribute::Direction)] = kDirectionBounds;

  row(BehaviourType::TrackMarkers)[idx(Attribute::Speed)] = Bounds{50, 800};
  row(BehaviourType::TrackMarkers)[idx(Attribute::Angle)] = Bounds{0, 30};
  return p;
}

LimitProfile LimitProfile::slow() {
  LimitProfile p = table2();
  p.name_ = "slow";
  for (int t = 0; t < kTypeCount; ++t) {
    auto& speed = p.rows_[static_cast<std::size_t>(t)][idx(Attribute::Speed)];
    speed->hi = 400;
  }
  p.rows_[idx(BehaviourType::StaticTurn)][idx(Attribute::Speed)]->hi = 100;
  p.rows_[idx(BehaviourType::ReverseTurn)][idx(Attribute::Speed)]->lo = 300;
  return p;
}

LimitProfile LimitProfile::named(std::string_view name) {
  if (name == "table2") return table2();
  if (name == "slow") return slow();
  throw std::invalid_argument("unknown limit profile '" + std::string(name) + "'");
}

std::optional<Bounds> LimitProfile::bounds(BehaviourType type, Attribute attr) const {
  return rows_[idx(type)][idx(attr)];
}

int LimitProfile::max_speed() const {
  int best = 0;
  for (const Row& row : rows_) best = std::max(best, row[idx(Attribute::Speed)]->hi);
  return best;
}

std::string to_string(const Antibody& ab) {
  std::string out = std::to_string(static_cast<int>(ab.type));
  for (Attribute a : kAllAttributes) {
    out += ';';
    const auto v = ab.get(a);
    if (!v) out += '-';
    else if (a == Attribute::Direction) out += (*v == 0 ? 'L' : 'R');
    else out += std::to_string(*v);
  }
  return out;
}

Antibody parse_antibody(std::string_view text) {
  const auto parts = split(trim(text), ';');
  if (parts.size() != 1 + kAttributeCount) {
    throw std::invalid_argument("antibody needs 7 ';'-separated fields: '" + std::string(text) + "'");
  }
  const int type = parse_int(trim(parts[0]));
  if (type < 0 || type >= kTypeCount) throw std::invalid_argument("antibody type out of range");
  Antibody ab;
  ab.type = static_cast<BehaviourType>(type);
  const LimitProfile shape = LimitProfile::table2();
  for (std::size_t k = 0; k < kAllAttributes.size(); ++k) {
    const Attribute a = kAllAttributes[k];
    const std::string_view field = trim(parts[k + 1]);
    const bool used = shape.uses(ab.type, a);
    if (field == "-") {
      if (used) throw std::invalid_argument("antibody is missing a used attribute");
      continue;
    }
    if (!used) throw std::invalid_argument("antibody sets an attribute its type does not use");
    if (a == Attribute::Direction) {
      if (field == "L") ab.set(a, 0);
      else if (field == "R") ab.set(a, 1);
      else throw std::invalid_argument("direction must be L or R");
    } else {
      ab.set(a, parse_int(field));
    }
  }
  return ab;
}

bool within_limits(const Antibody& ab, const LimitProfile& limits) {
  for (Attribute a : kAllAttributes) {
    const auto b = limits.bounds(ab.type, a);
    const auto v = ab.get(a);
    if (b.has_value() != v.has_value()) return false;
    if (v && (*v < b->lo || *v > b->hi)) return false;
  }
  return true;
}

Antibody random_antibody(const LimitProfile& limits, Rng& rng) {
  Antibody ab;
  ab.type = static_cast<BehaviourType>(rng.uniform_int(0, kTypeCount - 1));
  for (Attribute a : kAllAttributes) {
    if (const auto b = limits.bounds(ab.type, a)) ab.set(a, rng.uniform_int(b->lo, b->hi));
  }
  return ab;
}

Antibody clamp_to_limits(Antibody ab, const LimitProfile& limits) {
  for (Attribute a : kAllAttributes) {
    const auto b = limits.bounds(ab.type, a);
    if (!b) {
      ab.set(a, std::nullopt);
    } else if (auto v = ab.get(a)) {
      ab.set(a, std::clamp(*v, b->lo, b->hi));
    } else {
      ab.set(a, b->lo);
    }
  }
  return ab;
}

sim::WheelCommand act(const Antibody& ab, const sim::BlobReport& blob, Rng& rng) {
  const double s = ab.speed();
  const double a = ab.get(Attribute::Angle).value_or(0);
  const bool left_side = ab.direction() == TurnDirection::Left;
  auto turn_toward = [&](bool left, double base, double percent) {
    return left ? sim::WheelCommand{reduced(base, percent), base}
                : sim::WheelCommand{base, reduced(base, percent)};
  };

  switch (ab.type) {
    case BehaviourType::WanderSingle: {
      const double f = ab.get(Attribute::Frequency).value_or(0);
      if (rng.bernoulli(f / 100.0)) return turn_toward(left_side, s, a);
      return {s, s};
    }
    case BehaviourType::WanderBoth: {
      const double f = ab.get(Attribute::Frequency).value_or(0);
      const double rf = ab.get(Attribute::RightFrequency).value_or(0);
      const double ra = ab.get(Attribute::RightAngle).value_or(0);
      const bool left = rng.bernoulli(f / 100.0);
      const bool right = rng.bernoulli(rf / 100.0);
      if (left && !right) return turn_toward(true, s, a);
      if (right && !left) return turn_toward(false, s, ra);
      return {s, s};
    }
    case BehaviourType::ForwardTurn:
      return turn_toward(left_side, s, a);
    case BehaviourType::StaticTurn:
      return turn_toward(left_side, s, 100.0);
    case BehaviourType::ReverseTurn:
      return turn_toward(left_side, -s, a);
    case BehaviourType::TrackMarkers: {
      if (!blob.seen) return {s, s};
      const double offset =
          static_cast<double>(blob.centroid_col - sim::kCameraCentreColumn) / sim::kCameraCentreColumn;
      // Column 0 is the left edge of the image.
      return turn_toward(offset < 0.0, s, std::abs(offset) * a);
    }
  }
  return {0.0, 0.0};
}

std::string_view type_name(BehaviourType type) {
  switch (type) {
    case BehaviourType::WanderSingle: return "wander-single";
    case BehaviourType::WanderBoth: return "wander-both";
    case BehaviourType::ForwardTurn: return "forward-turn";
    case BehaviourType::StaticTurn: return "static-turn";
    case BehaviourType::ReverseTurn: return "reverse-turn";
    case BehaviourType::TrackMarkers: return "track-markers";
  }
  return "?";
}

}  // namespace idionav::behaviors
