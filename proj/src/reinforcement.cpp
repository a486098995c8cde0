#include "idionav/reinforcement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace idionav::rl {
namespace {

using perception::AntigenCode;
using perception::AntigenKind;

double scaled(double points, Phase phase) { return phase == Phase::Ltl ? points : points * kStlScale; }

bool boosted_row(const RlContext& ctx) {
  return ctx.prev_code.mode == perception::AntigenMode::Nine && ctx.prev_code.code == 5;
}

}  // namespace

int frontal_rank(int sensor_index) {
  static constexpr std::array<int, sim::kIrSensorCount> ranks = {0, 1, 2, 3, 3, 2, 1, 0};
  return ranks[static_cast<std::size_t>(sensor_index)];
}

double track_subscore(const sim::BlobReport& /*prev*/, const sim::BlobReport& cur, Phase phase) {
  if (!cur.seen) return 0.0;
  const double offset = std::abs(cur.centroid_col - sim::kCameraCentreColumn) /
                        static_cast<double>(sim::kCameraCentreColumn);
  const double points = std::clamp(std::round(kTrackMaxPoints * (1.0 - offset)), 0.0, kTrackMaxPoints);
  return scaled(points, phase);
}

double obstacle_subscore(const RlContext& ctx, Phase phase) {
  const int rank_change = frontal_rank(ctx.cur.i_max) - frontal_rank(ctx.prev.i_max);

  if (boosted_row(ctx)) {
    const double points = kBoostFactor * kBoostStepPoints * std::abs(rank_change);
    return scaled(std::clamp(points, 0.0, kBoostMaxPoints), phase);
  }

  double points = 0.0;
  if (ctx.cur.v_max < ctx.prev.v_max) points += 2.0;
  else if (ctx.cur.v_max > ctx.prev.v_max) points -= 2.0;

  const bool prev_collision = perception::is_collision(ctx.prev_code);
  const bool cur_collision = perception::is_collision(ctx.cur_code);
  if (prev_collision && !cur_collision) points += 1.0;
  else if (!prev_collision && cur_collision) points -= 1.0;

  if (rank_change > 0) points += 1.0;
  else if (rank_change < 0) points -= 1.0;

  points -= std::min(2, ctx.consecutive_collision / 5);

  // A near streak that restarts on a different near code: the obstacle
  // has been moved out of the sector it was in.
  if (perception::is_near(ctx.prev_code) && perception::is_near(ctx.cur_code) &&
      ctx.prev_code.code != ctx.cur_code.code) {
    points += 1.0;
  }
  const double clamped = std::clamp(points, kObstacleMinPoints, kObstacleMaxPoints);
  return phase == Phase::Ltl ? clamped : clamped * kStlObstacleScale;
}

double transition_score(const RlContext& ctx, Phase phase) {
  if (!perception::is_valid(ctx.prev_code) || !perception::is_valid(ctx.cur_code) ||
      ctx.prev_code.mode != ctx.cur_code.mode) {
    throw std::invalid_argument("transition_score: invalid antigen code pair");
  }
  const int prev = ctx.prev_code.code;
  const int cur = ctx.cur_code.code;
  const bool prev_obstacle = prev >= 2;

  if (cur == 0) {
    if (prev == 0) return phase == Phase::Ltl ? 0.0 : scaled(5.0, phase);
    if (prev == 1) return scaled(-10.0, phase);
    return scaled(10.0, phase);
  }
  if (cur == 1) {
    if (prev == 0) return scaled(10.0, phase);
    if (prev == 1) return track_subscore(ctx.prev.blob, ctx.cur.blob, phase);
    return scaled(20.0, phase);
  }
  // Current reading is an obstacle.
  if (!prev_obstacle) return phase == Phase::Ltl ? 0.0 : scaled(-5.0, phase);
  return obstacle_subscore(ctx, phase);
}

std::optional<RlContext> TransitionTracker::observe(perception::AntigenCode code,
                                                    const perception::SensorSummary& summary) {
  const bool near = perception::is_near(code);
  const bool collision = perception::is_collision(code);
  const bool same_code = prev_code_ && prev_code_->code == code.code;
  consecutive_near_ = near ? (same_code ? consecutive_near_ + 1 : 1) : 0;
  consecutive_collision_ = collision ? consecutive_collision_ + 1 : 0;

  std::optional<RlContext> ctx;
  if (prev_code_) {
    ctx = RlContext{*prev_code_, code, prev_, summary, consecutive_near_, consecutive_collision_};
  }
  prev_code_ = code;
  prev_ = summary;
  return ctx;
}

void TransitionTracker::reset() { *this = TransitionTracker{}; }

void StagnationState::observe(perception::AntigenCode code, bool changed, double dt) {
  same_antigen_clock = changed ? 0.0 : same_antigen_clock + dt;
  wander_run = code.code == 0 ? wander_run + 1 : 0;
  obstacle_run = perception::is_obstacle(code) ? obstacle_run + 1 : 0;
}

StagnationOutcome stagnation_adjust(StagnationState& state, Phase phase, bool idiotypic) {
  if (phase == Phase::Ltl) {
    if (state.cumulative_e < kLtlReplaceBelow) return {StagnationSignal::Replace, 0.0};
    if (state.same_antigen_clock >= kLtlSameAntigenSeconds) {
      state.same_antigen_clock = 0.0;
      return {StagnationSignal::Replace, 0.0};
    }
    return {};
  }
  const double amount = idiotypic ? kStlDeductionIdiotypic : kStlDeductionPlain;
  if (state.wander_run > kStlWanderLimit) {
    state.wander_run = 0;
    return {StagnationSignal::Deduct, amount};
  }
  if (state.obstacle_run > kStlObstacleLimit) {
    state.obstacle_run = 0;
    return {StagnationSignal::Deduct, amount};
  }
  return {};
}

}  // namespace idionav::rl
