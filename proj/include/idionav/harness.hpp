#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "idionav/ais.hpp"
#include "idionav/behaviors.hpp"
#include "idionav/perception.hpp"
#include "idionav/rng.hpp"
#include "idionav/seed_file.hpp"
#include "idionav/sim/world.hpp"

namespace idionav::harness {

inline constexpr double kStlTimeLimit = 4000.0;
inline constexpr int kStlCollisionLimit = 100;
inline constexpr int kSuccessPixels = 40;
inline constexpr int kSuccessReadings = 3;
inline constexpr double kQualityRho = 8.0;

enum class Scheme { Sie, Srl, Uie, Url, Hdc };
Scheme parse_scheme(std::string_view text);
/// Upper-case short name, e.g. "SIE".
std::string_view scheme_name(Scheme scheme);
bool is_seeded(Scheme scheme);
bool is_idiotypic(Scheme scheme);

enum class FailReason { None, Time, Collisions };
std::string_view fail_reason_name(FailReason reason);
FailReason parse_fail_reason(std::string_view text);

/// Time is checked before collisions.
FailReason classify_failure(double st, int sc);

/// (st + 8 sc) / 2.
double solution_quality(double st, int sc);

struct SchemeConfig {
  Scheme scheme = Scheme::Sie;
  perception::AntigenMode mode = perception::AntigenMode::Eight;
  /// Required for the seeded schemes.
  std::shared_ptr<const ga::SeedFile> seeds;
  /// Seed of the random behaviour set used by the unseeded schemes; all
  /// trials sharing it start from the same antibodies.
  std::uint64_t behaviour_set_seed = 1;
  behaviors::LimitProfile limits = behaviors::LimitProfile::slow();
  ais::AisConstants constants;
  bool ir_noise = true;
  bool hdc_track = false;
  /// Writes the AIS state to `dump` every k ticks when k > 0.
  int dump_every = 0;
  std::ostream* dump = nullptr;
};

struct TrialRecord {
  std::string scheme;
  std::string world;
  std::uint64_t rng_seed = 0;
  double st = 0.0;
  int sc = 0;
  double sq = 0.0;
  bool success = false;
  FailReason fail_reason = FailReason::None;
  double idio_rate = 0.0;

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

TrialRecord run_stl_trial(const SchemeConfig& cfg, const std::shared_ptr<const sim::WorldConfig>& world,
                          std::uint64_t seed);

/// Hand-designed baseline: reverse away from collisions, steer away from
/// near obstacles, otherwise wander. Tracks the target when `track` is set.
sim::WheelCommand hdc_policy(const sim::IrReadings& ir, const sim::BlobReport& blob, Rng& rng, bool track);

/// Initial AIS state for a scheme; identical for every trial of the scheme.
ais::AisState initial_state(const SchemeConfig& cfg);

struct PlanEntry {
  Scheme scheme = Scheme::Sie;
  std::filesystem::path world;
  int replicates = 1;
  std::uint64_t base_seed = 1;
  perception::AntigenMode mode = perception::AntigenMode::Eight;
  std::optional<std::filesystem::path> seeds;
  std::string behaviour_set = "R1";
  std::uint64_t behaviour_set_seed = 1;
  std::string profile = "slow";
  bool hdc_track = false;
};

/// One entry per non-comment line:
///   <scheme> <world> <replicates> <base_seed> [seeds=<file>] [antigens=8|9]
///            [set=<name>:<seed>] [profile=<name>] [hdc-track=on|off]
/// Relative paths are resolved against `base_dir`.
std::vector<PlanEntry> parse_plan(std::istream& in, const std::filesystem::path& base_dir);
std::vector<PlanEntry> load_plan(const std::filesystem::path& path);

/// Replicate r of an entry uses seed base_seed + r.
std::vector<TrialRecord> run_batch(const std::vector<PlanEntry>& plan, int threads = 0);

inline constexpr std::string_view kCsvHeader = "scheme,world,rng_seed,st,sc,sq,success,fail_reason,idio_rate";
void write_csv(std::ostream& out, const std::vector<TrialRecord>& rows);
std::vector<TrialRecord> read_csv(std::istream& in);

struct GroupSummary {
  std::string scheme;
  std::string world;
  int rows = 0;
  double mean_st = 0.0;
  double mean_sc = 0.0;
  double mean_sq = 0.0;
  double fail_time_pct = 0.0;
  double fail_collision_pct = 0.0;
  double fail_total_pct = 0.0;
  double mean_idio_rate = 0.0;
};

/// Per (scheme, world) means over all rows, failed rows included at their
/// capped values. Groups appear in scheme order SIE, SRL, UIE, URL, HDC.
std::vector<GroupSummary> summarize(const std::vector<TrialRecord>& rows);

}  // namespace idionav::harness
