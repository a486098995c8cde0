#pragma once

#include <optional>

#include "idionav/perception.hpp"

namespace idionav::rl {

enum class Phase { Ltl, Stl };

/// Long-term scores are in whole points; short-term scores are the same
/// points divided by 100.
inline constexpr double kStlScale = 0.01;
/// The obstacle-to-obstacle row is the exception: -4..5 points become
/// -0.40..0.50.
inline constexpr double kStlObstacleScale = 0.1;

inline constexpr double kLtlReplaceBelow = -14.0;
inline constexpr double kLtlSameAntigenSeconds = 60.0;
inline constexpr int kStlWanderLimit = 250;
inline constexpr int kStlObstacleLimit = 15;
inline constexpr double kStlDeductionPlain = 1.0;
inline constexpr double kStlDeductionIdiotypic = 0.5;

/// Score range of the obstacle-to-obstacle rubric, in points.
inline constexpr double kObstacleMinPoints = -4.0;
inline constexpr double kObstacleMaxPoints = 5.0;
/// Boosted orientation rubric used after the "near left and right" antigen.
inline constexpr double kBoostStepPoints = 6.0;
inline constexpr double kBoostFactor = 3.0;
inline constexpr double kBoostMaxPoints = 54.0;
inline constexpr double kTrackMaxPoints = 5.0;

/// Everything the transition rubric looks at for one reading pair.
struct RlContext {
  perception::AntigenCode prev_code;
  perception::AntigenCode cur_code;
  perception::SensorSummary prev;
  perception::SensorSummary cur;
  /// Length of the current run of identical near codes, including cur.
  int consecutive_near = 0;
  /// Length of the current run of collision codes, including cur.
  int consecutive_collision = 0;
};

/// Score for the antibody that acted between prev and cur. Throws
/// std::invalid_argument for invalid or mixed-mode codes.
double transition_score(const RlContext& ctx, Phase phase);

/// Reward for keeping the target in view: full when centred, zero at the
/// image edge.
double track_subscore(const sim::BlobReport& prev, const sim::BlobReport& cur, Phase phase);

/// Obstacle-to-obstacle rubric. In nine-antigen mode with prev = "near left
/// and right" only orientation changes count, non-negative and tripled.
double obstacle_subscore(const RlContext& ctx, Phase phase);

/// 0 for the two frontal sensors, rising to 3 for the rear pair.
int frontal_rank(int sensor_index);

/// Builds RlContext values from a stream of readings.
class TransitionTracker {
 public:
  /// Records a reading; returns the context relative to the previous
  /// reading, or nothing on the first call.
  std::optional<RlContext> observe(perception::AntigenCode code, const perception::SensorSummary& summary);
  void reset();

 private:
  std::optional<perception::AntigenCode> prev_code_;
  perception::SensorSummary prev_;
  int consecutive_near_ = 0;
  int consecutive_collision_ = 0;
};

struct StagnationState {
  /// Cumulative score of the active long-term behaviour.
  double cumulative_e = 0.0;
  double same_antigen_clock = 0.0;
  int wander_run = 0;
  int obstacle_run = 0;

  /// Advances the counters by one reading of `code` lasting dt seconds.
  void observe(perception::AntigenCode code, bool changed, double dt);
};

enum class StagnationSignal { None, Replace, Deduct };

struct StagnationOutcome {
  StagnationSignal signal = StagnationSignal::None;
  /// Positive amount to subtract, for Deduct.
  double deduction = 0.0;
};

/// Long-term: replace when E falls below -14 or the antigen has not
/// changed for 60 s. Short-term: deduct after more than 250 wandering
/// readings or more than 15 obstacle readings in a row. Counters that fire
/// are reset.
StagnationOutcome stagnation_adjust(StagnationState& state, Phase phase, bool idiotypic);

}  // namespace idionav::rl
