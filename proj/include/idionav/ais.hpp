#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "idionav/behaviors.hpp"
#include "idionav/rng.hpp"
#include "idionav/seed_file.hpp"

namespace idionav::ais {

/// Dense row-major matrix; rows are antibody sets, columns antigens.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(int rows, int cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& operator()(int r, int c) { return data_[index(r, c)]; }
  const T& operator()(int r, int c) const { return data_[index(r, c)]; }
  std::vector<T>& data() { return data_; }
  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

struct AisConstants {
  double b = 100.0;                 // clone gain per unit of strength
  double k1 = 0.85;                 // stimulation
  double k2 = 1.10;                 // suppression
  double k3 = 0.0;                  // clone death rate
  double total_concentration = 25.0;
  double score_divisor = 20.0;      // E to paratope scaling
  double collision_weight = 8.0;    // rho when ranking seed sets
  double initial_clones = 1000.0;
  /// Clone counts never drop below this, keeping N positive under heavy
  /// suppression.
  double min_clones = 1.0;
  int idiotope_period = 120;
  double replace_below = 0.1;
  double random_p_lo = 0.25;
  double random_p_hi = 0.75;
};

struct Slot {
  int set = 0;
  int antigen = 0;
  friend bool operator==(const Slot&, const Slot&) = default;
};

struct SelectionOutcome {
  Slot alpha;
  Slot beta;
  bool differed = false;
};

struct AisState {
  AisConstants constants;
  bool seeded = false;
  Grid<behaviors::Antibody> antibodies;
  Grid<double> paratope;
  Grid<int> idiotope;
  Grid<double> clones;
  Grid<double> concentration;
  std::vector<double> set_fitness;
  std::vector<double> initial_means;
  int readings_since_idiotope = 0;
  long idio_diff_count = 0;
  long selection_count = 0;

  int v() const { return paratope.rows(); }
  int y() const { return paratope.cols(); }
};

inline constexpr int kSets = 5;

/// Seeded start from a GA seed file with exactly 5 sets.
AisState init_seeded(const ga::SeedFile& seeds, Rng& rng, const AisConstants& constants = {});

/// Random antibodies and paratope values in [0.25, 0.75].
AisState init_unseeded(int y, const behaviors::LimitProfile& limits, Rng& rng, const AisConstants& constants = {});

std::vector<double> column_means(const Grid<double>& p);

/// Candidate 1s where P is strictly below its column mean, then one random
/// survivor per row.
Grid<int> build_idiotope(const Grid<double>& p, Rng& rng);

/// C = total * N / sum(N) for every entry.
void refresh_concentrations(AisState& state);

/// Set with the highest paratope value for antigen m (lowest index on ties).
int stage1(const AisState& state, int m);

/// Strength of every set for antigen m after stimulation and suppression by
/// set n. Updates the clone counts of column m and all concentrations.
std::vector<double> idiotypic_adjust(AisState& state, int m, int n);

/// Picks the set with the highest activation C * S2 and updates the
/// difference counters.
SelectionOutcome stage3(AisState& state, int m, int n, const std::vector<double>& strength);

/// Full selection for antigen m. Without idiotypic effects the stage-one
/// winner is final.
SelectionOutcome select(AisState& state, int m, bool idiotypic);

/// Adds delta to the winner's paratope (clamped to [0, 1]), rescales the
/// column back to its initial mean and rebuilds the idiotope every
/// `idiotope_period` calls.
void reinforce(AisState& state, Slot winner, double delta, Rng& rng);

/// Unseeded only: replaces every antibody whose paratope is below the
/// threshold. Returns the number replaced.
int replace_weak(AisState& state, const behaviors::LimitProfile& limits, Rng& rng);

/// idio_diff_count / selection_count; throws std::logic_error before the
/// first selection.
double difference_rate(const AisState& state);

void dump_state(std::ostream& out, const AisState& state);

}  // namespace idionav::ais
