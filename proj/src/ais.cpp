#include "idionav/ais.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "idionav/fitness.hpp"

namespace idionav::ais {
namespace {

void finish_init(AisState& state, Rng& rng) {
  state.initial_means = column_means(state.paratope);
  state.idiotope = build_idiotope(state.paratope, rng);
  state.clones = Grid<double>(state.v(), state.y(), state.constants.initial_clones);
  state.concentration = Grid<double>(state.v(), state.y(), 0.0);
  refresh_concentrations(state);
}

int argmax_column(const std::vector<double>& values) {
  int best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (values[i] > values[static_cast<std::size_t>(best)]) best = static_cast<int>(i);
  }
  return best;
}

// Scales column m so that its mean returns to `target`, keeping every entry
// at or below 1. Entries that would pass 1 are pinned there and the rest
// share the remaining mass.
void restore_column_mean(Grid<double>& p, int m, double target) {
  const int v = p.rows();
  std::vector<bool> pinned(static_cast<std::size_t>(v), false);
  for (int pass = 0; pass <= v; ++pass) {
    double free_sum = 0.0;
    int pinned_count = 0;
    for (int i = 0; i < v; ++i) {
      if (pinned[static_cast<std::size_t>(i)]) ++pinned_count;
      else free_sum += p(i, m);
    }
    const double wanted = target * v - pinned_count;
    if (!(free_sum > 0.0) || wanted <= 0.0) return;
    const double factor = wanted / free_sum;
    bool changed = false;
    for (int i = 0; i < v; ++i) {
      if (pinned[static_cast<std::size_t>(i)]) continue;
      if (p(i, m) * factor > 1.0) {
        p(i, m) = 1.0;
        pinned[static_cast<std::size_t>(i)] = true;
        changed = true;
      }
    }
    if (!changed) {
      for (int i = 0; i < v; ++i) {
        if (!pinned[static_cast<std::size_t>(i)]) p(i, m) *= factor;
      }
      return;
    }
  }
}

}  // namespace

AisState init_seeded(const ga::SeedFile& seeds, Rng& rng, const AisConstants& constants) {
  if (seeds.v() != kSets) throw std::invalid_argument("init_seeded: seed file must hold exactly 5 sets");
  AisState state;
  state.constants = constants;
  state.seeded = true;
  const int y = seeds.y;
  state.antibodies = Grid<behaviors::Antibody>(kSets, y);
  state.paratope = Grid<double>(kSets, y, 0.0);

  std::vector<double> fitness;
  for (const auto& set : seeds.sets) {
    fitness.push_back(ga::absolute_fitness(set.lt, set.lc, constants.collision_weight));
  }
  state.set_fitness = ga::relative_fitness(fitness);

  for (int i = 0; i < kSets; ++i) {
    const auto& set = seeds.sets[static_cast<std::size_t>(i)];
    for (int j = 0; j < y; ++j) {
      state.antibodies(i, j) = set.antibodies[static_cast<std::size_t>(j)];
      const double p = set.e[static_cast<std::size_t>(j)] * state.set_fitness[static_cast<std::size_t>(i)] /
                       constants.score_divisor;
      state.paratope(i, j) = std::clamp(p, 0.0, 1.0);
    }
  }
  finish_init(state, rng);
  return state;
}

AisState init_unseeded(int y, const behaviors::LimitProfile& limits, Rng& rng, const AisConstants& constants) {
  if (y < 1) throw std::invalid_argument("init_unseeded: need at least one antigen");
  AisState state;
  state.constants = constants;
  state.seeded = false;
  state.antibodies = Grid<behaviors::Antibody>(kSets, y);
  state.paratope = Grid<double>(kSets, y, 0.0);
  state.set_fitness.assign(kSets, 1.0 / kSets);
  for (int i = 0; i < kSets; ++i) {
    for (int j = 0; j < y; ++j) {
      state.antibodies(i, j) = behaviors::random_antibody(limits, rng);
      state.paratope(i, j) = rng.uniform(constants.random_p_lo, constants.random_p_hi);
    }
  }
  finish_init(state, rng);
  return state;
}

std::vector<double> column_means(const Grid<double>& p) {
  std::vector<double> means(static_cast<std::size_t>(p.cols()), 0.0);
  for (int j = 0; j < p.cols(); ++j) {
    double sum = 0.0;
    for (int i = 0; i < p.rows(); ++i) sum += p(i, j);
    means[static_cast<std::size_t>(j)] = sum / p.rows();
  }
  return means;
}

Grid<int> build_idiotope(const Grid<double>& p, Rng& rng) {
  const auto means = column_means(p);
  Grid<int> idiotope(p.rows(), p.cols(), 0);
  std::vector<int> candidates;
  for (int i = 0; i < p.rows(); ++i) {
    candidates.clear();
    for (int j = 0; j < p.cols(); ++j) {
      if (p(i, j) < means[static_cast<std::size_t>(j)]) candidates.push_back(j);
    }
    if (candidates.empty()) continue;
    const int pick = candidates.size() == 1 ? 0 : rng.uniform_int(0, static_cast<int>(candidates.size()) - 1);
    idiotope(i, candidates[static_cast<std::size_t>(pick)]) = 1;
  }
  return idiotope;
}

void refresh_concentrations(AisState& state) {
  const auto& n = state.clones.data();
  const double total = std::accumulate(n.begin(), n.end(), 0.0);
  if (state.concentration.rows() != state.clones.rows() || state.concentration.cols() != state.clones.cols()) {
    state.concentration = Grid<double>(state.clones.rows(), state.clones.cols());
  }
  auto& c = state.concentration.data();
  for (std::size_t k = 0; k < n.size(); ++k) c[k] = state.constants.total_concentration * n[k] / total;
}

int stage1(const AisState& state, int m) {
  std::vector<double> column;
  for (int i = 0; i < state.v(); ++i) column.push_back(state.paratope(i, m));
  return argmax_column(column);
}

std::vector<double> idiotypic_adjust(AisState& state, int m, int n) {
  const auto& k = state.constants;
  const auto& p = state.paratope;
  const auto& id = state.idiotope;
  const auto& c = state.concentration;
  std::vector<double> strength(static_cast<std::size_t>(state.v()), 0.0);
  for (int i = 0; i < state.v(); ++i) {
    double stimulation = 0.0;
    double suppression = 0.0;
    for (int j = 0; j < state.y(); ++j) {
      const double cc = c(i, j) * c(n, j);
      stimulation += (1.0 - p(i, j)) * id(n, j) * cc;
      suppression += p(n, j) * id(i, j) * cc;
    }
    strength[static_cast<std::size_t>(i)] = p(i, m) + k.k1 * stimulation - k.k2 * suppression;
  }
  for (int i = 0; i < state.v(); ++i) {
    const double grown = k.b * strength[static_cast<std::size_t>(i)] + state.clones(i, m) * (1.0 - k.k3);
    state.clones(i, m) = std::max(grown, k.min_clones);
  }
  refresh_concentrations(state);
  return strength;
}

SelectionOutcome stage3(AisState& state, int m, int n, const std::vector<double>& strength) {
  std::vector<double> activation;
  for (int i = 0; i < state.v(); ++i) {
    activation.push_back(state.concentration(i, m) * strength[static_cast<std::size_t>(i)]);
  }
  const int p = argmax_column(activation);
  SelectionOutcome out{{n, m}, {p, m}, p != n};
  ++state.selection_count;
  if (out.differed) ++state.idio_diff_count;
  return out;
}

SelectionOutcome select(AisState& state, int m, bool idiotypic) {
  if (m < 0 || m >= state.y()) throw std::out_of_range("select: antigen out of range");
  const int n = stage1(state, m);
  if (!idiotypic) {
    ++state.selection_count;
    return {{n, m}, {n, m}, false};
  }
  const auto strength = idiotypic_adjust(state, m, n);
  return stage3(state, m, n, strength);
}

void reinforce(AisState& state, Slot winner, double delta, Rng& rng) {
  auto& p = state.paratope;
  const int m = winner.antigen;
  p(winner.set, m) = std::clamp(p(winner.set, m) + delta, 0.0, 1.0);

  double sum = 0.0;
  for (int i = 0; i < state.v(); ++i) sum += p(i, m);
  const double current = sum / state.v();
  const double initial = state.initial_means[static_cast<std::size_t>(m)];
  if (current > 0.0 && initial > 0.0) restore_column_mean(p, m, initial);

  if (++state.readings_since_idiotope >= state.constants.idiotope_period) {
    state.idiotope = build_idiotope(p, rng);
    state.readings_since_idiotope = 0;
  }
}

int replace_weak(AisState& state, const behaviors::LimitProfile& limits, Rng& rng) {
  if (state.seeded) throw std::logic_error("replace_weak: seeded systems never replace antibodies");
  const auto& k = state.constants;
  int replaced = 0;
  for (int i = 0; i < state.v(); ++i) {
    for (int j = 0; j < state.y(); ++j) {
      if (state.paratope(i, j) >= k.replace_below) continue;
      state.antibodies(i, j) = behaviors::random_antibody(limits, rng);
      state.paratope(i, j) = rng.uniform(k.random_p_lo, k.random_p_hi);
      state.clones(i, j) = k.initial_clones;
      ++replaced;
    }
  }
  if (replaced > 0) refresh_concentrations(state);
  return replaced;
}

double difference_rate(const AisState& state) {
  if (state.selection_count == 0) throw std::logic_error("difference_rate: no selections yet");
  return static_cast<double>(state.idio_diff_count) / static_cast<double>(state.selection_count);
}

void dump_state(std::ostream& out, const AisState& state) {
  char buf[32];
  auto matrix = [&](const char* name, auto&& cell) {
    out << name << '\n';
    for (int i = 0; i < state.v(); ++i) {
      for (int j = 0; j < state.y(); ++j) {
        std::snprintf(buf, sizeof buf, "%.6f", static_cast<double>(cell(i, j)));
        out << (j ? " " : "") << buf;
      }
      out << '\n';
    }
  };
  matrix("P", [&](int i, int j) { return state.paratope(i, j); });
  matrix("I", [&](int i, int j) { return state.idiotope(i, j); });
  matrix("N", [&](int i, int j) { return state.clones(i, j); });
  matrix("C", [&](int i, int j) { return state.concentration(i, j); });
}

}  // namespace idionav::ais
