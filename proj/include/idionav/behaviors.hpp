#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "idionav/rng.hpp"
#include "idionav/sim/world.hpp"

namespace idionav::behaviors {

enum class BehaviourType {
  WanderSingle = 0,
  WanderBoth = 1,
  ForwardTurn = 2,
  StaticTurn = 3,
  ReverseTurn = 4,
  TrackMarkers = 5,
};

enum class TurnDirection { Left = 0, Right = 1 };

/// Attribute slots, in textual order after the type.
enum class Attribute {
  Speed = 0,
  Frequency = 1,
  Angle = 2,
  Direction = 3,
  RightFrequency = 4,
  RightAngle = 5,
};

inline constexpr int kTypeCount = 6;
inline constexpr int kAttributeCount = 6;
inline constexpr std::array<Attribute, kAttributeCount> kAllAttributes = {
    Attribute::Speed,     Attribute::Frequency,      Attribute::Angle,
    Attribute::Direction, Attribute::RightFrequency, Attribute::RightAngle};

struct Bounds {
  int lo = 0;
  int hi = 0;
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

/// Per-type attribute limits. An empty entry means the type does not use
/// that attribute.
class LimitProfile {
 public:
  /// Full-range limits.
  static LimitProfile table2();
  /// Reduced speeds used for the seed re-run: static turn capped at 100,
  /// other speeds capped at 400, reverse turn lower bound 300.
  static LimitProfile slow();
  /// "table2" or "slow"; throws std::invalid_argument otherwise.
  static LimitProfile named(std::string_view name);

  const std::string& name() const { return name_; }
  std::optional<Bounds> bounds(BehaviourType type, Attribute attr) const;
  bool uses(BehaviourType type, Attribute attr) const { return bounds(type, attr).has_value(); }
  /// Largest speed bound across types.
  int max_speed() const;

 private:
  using Row = std::array<std::optional<Bounds>, kAttributeCount>;
  std::string name_;
  std::array<Row, kTypeCount> rows_{};
};

/// One behaviour: a type plus the attributes that type uses. Direction is
/// stored as 0 (left) / 1 (right).
struct Antibody {
  BehaviourType type = BehaviourType::WanderSingle;
  std::array<std::optional<int>, kAttributeCount> attributes{};

  std::optional<int> get(Attribute a) const { return attributes[static_cast<std::size_t>(a)]; }
  void set(Attribute a, std::optional<int> v) { attributes[static_cast<std::size_t>(a)] = v; }

  int speed() const { return get(Attribute::Speed).value_or(0); }
  TurnDirection direction() const {
    return get(Attribute::Direction).value_or(0) == 0 ? TurnDirection::Left : TurnDirection::Right;
  }

  friend bool operator==(const Antibody&, const Antibody&) = default;
};

/// Textual form `U;S;F;A;D;RF;RA`, '-' for unused slots, D as L or R.
std::string to_string(const Antibody& ab);
Antibody parse_antibody(std::string_view text);

bool within_limits(const Antibody& ab, const LimitProfile& limits);

Antibody random_antibody(const LimitProfile& limits, Rng& rng);

/// Clamps each used attribute into its bound and nulls unused ones.
Antibody clamp_to_limits(Antibody ab, const LimitProfile& limits);

/// Wheel command for one control tick. Turn decisions of the wander types
/// are redrawn every call.
sim::WheelCommand act(const Antibody& ab, const sim::BlobReport& blob, Rng& rng);

std::string_view type_name(BehaviourType type);

}  // namespace idionav::behaviors
