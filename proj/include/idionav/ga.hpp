#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "idionav/behaviors.hpp"
#include "idionav/fitness.hpp"
#include "idionav/perception.hpp"
#include "idionav/rng.hpp"
#include "idionav/seed_file.hpp"
#include "idionav/sim/world.hpp"

namespace idionav::ga {

inline constexpr double kLtlTimeLimit = 1250.0;
inline constexpr double kDefaultMutationRate = 0.05;
inline constexpr int kMaxGeneration = 30;
inline constexpr int kSeedSets = 5;

/// One robot's behaviour row. Slots stay empty until the robot first meets
/// that antigen. `lineage` holds, per slot, a bitmask of the populations the
/// slot's genetic material came from.
struct Genome {
  std::vector<std::optional<behaviors::Antibody>> behaviours;
  std::vector<double> e_scores;
  std::vector<std::uint32_t> lineage;

  int y() const { return static_cast<int>(behaviours.size()); }
  static Genome empty(int y, std::uint32_t lineage_mask);
};

struct FitnessRecord {
  double lt = 0.0;
  int lc = 0;
  double lf = 0.0;
  double lmu = 0.0;
  int doors_passed = 0;
};

struct EvaluationOptions {
  perception::AntigenMode mode = perception::AntigenMode::Eight;
  behaviors::LimitProfile limits = behaviors::LimitProfile::table2();
  bool ir_noise = true;
  double time_limit = kLtlTimeLimit;
};

/// Extra seconds added to the time cap when the robot runs out of time.
double timeout_penalty(int doors_passed);

/// Runs one robot through an LTL world. Resets the genome's E scores,
/// fills behaviour slots as antigens are met and replaces stagnant ones.
/// lmu is left at 0; it needs the whole population.
FitnessRecord evaluate(Genome& genome, const std::shared_ptr<const sim::WorldConfig>& world,
                       const EvaluationOptions& options, Rng& rng);

/// Index drawn with probability proportional to weights[i].
int roulette(std::span<const double> weights, Rng& rng);

/// Two distinct indices; the second is drawn from the remaining weights.
std::pair<int, int> pick_parents(std::span<const double> weights, Rng& rng);

/// Slot-wise recombination of two parents followed by mutation. Children
/// carry lineage `tag` on freshly generated slots.
Genome breed(const Genome& a, const Genome& b, double epsilon, const behaviors::LimitProfile& limits, Rng& rng,
             std::uint32_t tag);

enum class CrossoverMode { Average, RandomPick, Alternating };

/// Same-type crossover of a single slot. `mirrored` picks which parent
/// supplies the even attributes in the alternating mode.
behaviors::Antibody crossover(const behaviors::Antibody& a, const behaviors::Antibody& b, CrossoverMode mode,
                              bool mirrored, Rng& rng);

/// Scales every attribute except D by 1 +- U[0.2, 0.5] with probability
/// epsilon each, then clamps.
behaviors::Antibody mutate(behaviors::Antibody ab, double epsilon, const behaviors::LimitProfile& limits, Rng& rng);

enum class CriteriaSet { World1, World2, Rerun };
CriteriaSet parse_criteria(std::string_view text);

struct GenerationStats {
  int generation = 0;
  double lt = 0.0;
  double lc = 0.0;
  double lf = 0.0;
  double wall_clock = 0.0;
};

/// Returns the name of the first stopping rule that holds for the last
/// entry of `history`, or nothing. The fitness-change rules compare the
/// relative change |f_g - f_{g-1}| / f_{g-1}.
std::optional<std::string> converged(std::span<const GenerationStats> history, CriteriaSet criteria);

struct PopulationModel {
  int populations = 1;
  int size = 25;
  bool multi() const { return populations > 1; }
  /// "single:<x>" or "multi:<k>x<n>".
  static PopulationModel parse(std::string_view text);
};

struct LtlConfig {
  PopulationModel model;
  double epsilon = kDefaultMutationRate;
  std::shared_ptr<const sim::WorldConfig> world;
  CriteriaSet criteria = CriteriaSet::World1;
  behaviors::LimitProfile limits = behaviors::LimitProfile::table2();
  perception::AntigenMode mode = perception::AntigenMode::Eight;
  std::uint64_t seed = 1;
  bool ir_noise = true;
  int threads = 0;
  std::function<void(const GenerationStats&)> progress;
};

struct LtlResult {
  SeedFile seeds;
  std::vector<GenerationStats> history;
  std::string reason;
  /// Final population(s) as evaluated in the last generation.
  std::vector<std::vector<Genome>> populations;
  /// Lineage masks of the genomes exported to the seed file, per set.
  std::vector<std::vector<std::uint32_t>> seed_lineage;
};

LtlResult run_ltl(const LtlConfig& config);

/// True when every slot of every genome in population p carries only the
/// bit of population p.
bool lineage_isolated(const LtlResult& result);

}  // namespace idionav::ga
