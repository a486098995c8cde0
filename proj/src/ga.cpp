#include "idionav/ga.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "idionav/parallel.hpp"
#include "idionav/reinforcement.hpp"
#include "idionav/sim/supervisor.hpp"

namespace idionav::ga {

using behaviors::Antibody;
using behaviors::Attribute;

std::vector<double> relative_fitness(std::span<const double> fitness) {
  if (fitness.empty()) throw std::invalid_argument("relative_fitness: empty input");
  double inverse_sum = 0.0;
  for (double f : fitness) {
    if (!(f > 0.0) || !std::isfinite(f)) throw std::invalid_argument("relative_fitness: fitness must be positive");
    inverse_sum += 1.0 / f;
  }
  std::vector<double> mu;
  mu.reserve(fitness.size());
  for (double f : fitness) mu.push_back(1.0 / (f * inverse_sum));
  return mu;
}

Genome Genome::empty(int y, std::uint32_t lineage_mask) {
  Genome g;
  g.behaviours.assign(static_cast<std::size_t>(y), std::nullopt);
  g.e_scores.assign(static_cast<std::size_t>(y), 0.0);
  g.lineage.assign(static_cast<std::size_t>(y), lineage_mask);
  return g;
}

double timeout_penalty(int doors_passed) {
  switch (doors_passed) {
    case 0: return 1000.0;
    case 1: return 750.0;
    default: return 500.0;
  }
}

FitnessRecord evaluate(Genome& genome, const std::shared_ptr<const sim::WorldConfig>& world_cfg,
                       const EvaluationOptions& options, Rng& rng) {
  const int y = perception::antigen_count(options.mode);
  if (genome.y() != y) throw std::invalid_argument("evaluate: genome size does not match antigen mode");
  std::fill(genome.e_scores.begin(), genome.e_scores.end(), 0.0);

  sim::WorldState world = sim::make_world(world_cfg);
  sim::begin_run(world, rng);

  rl::TransitionTracker tracker;
  rl::StagnationState stagnation;
  std::optional<int> prev;

  auto fresh = [&](int slot) {
    genome.behaviours[static_cast<std::size_t>(slot)] = behaviors::random_antibody(options.limits, rng);
    genome.e_scores[static_cast<std::size_t>(slot)] = 0.0;
  };

  FitnessRecord record;
  while (true) {
    if (world.finished) {
      record.lt = world.clock;
      break;
    }
    if (world.clock >= options.time_limit) {
      record.lt = options.time_limit + timeout_penalty(world.doors_passed());
      break;
    }

    const sim::IrReadings ir = sim::read_ir(world, rng, options.ir_noise);
    perception::SensorSummary summary = perception::summarize(ir, {});
    if (summary.v_max < perception::kObstacleThreshold) summary.blob = sim::read_blob(world);
    const perception::AntigenCode code = perception::classify(summary, ir, options.mode);
    const int m = code.code;

    stagnation.observe(code, !prev || *prev != m, sim::kControlTick);
    if (auto ctx = tracker.observe(code, summary)) {
      double& e = genome.e_scores[static_cast<std::size_t>(*prev)];
      e += rl::transition_score(*ctx, rl::Phase::Ltl);
      stagnation.cumulative_e = e;
      // The clock only runs while the antigen is unchanged, so both
      // stagnation signals concern the behaviour that just acted.
      if (rl::stagnation_adjust(stagnation, rl::Phase::Ltl, false).signal == rl::StagnationSignal::Replace) {
        fresh(*prev);
      }
    }

    if (!genome.behaviours[static_cast<std::size_t>(m)]) fresh(m);
    const sim::WheelCommand cmd = behaviors::act(*genome.behaviours[static_cast<std::size_t>(m)], summary.blob, rng);
    sim::step(world, cmd, sim::kControlTick);
    sim::supervisor_tick(world, rng, sim::kControlTick);
    prev = m;
  }

  record.lc = world.collisions;
  record.doors_passed = world.doors_passed();
  record.lf = absolute_fitness(record.lt, record.lc, kLtlRho);
  return record;
}

int roulette(std::span<const double> weights, Rng& rng) {
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (weights.empty() || !(total > 0.0)) throw std::invalid_argument("roulette: weights must have positive sum");
  const double r = rng.uniform() * total;
  double acc = 0.0;
  int last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    acc += weights[i];
    last_positive = static_cast<int>(i);
    if (r < acc) return static_cast<int>(i);
  }
  return last_positive;
}

std::pair<int, int> pick_parents(std::span<const double> weights, Rng& rng) {
  if (weights.size() < 2) throw std::invalid_argument("pick_parents: need at least two candidates");
  const int first = roulette(weights, rng);
  std::vector<double> rest(weights.begin(), weights.end());
  rest[static_cast<std::size_t>(first)] = 0.0;
  if (std::accumulate(rest.begin(), rest.end(), 0.0) <= 0.0) {
    // Every other weight is zero: fall back to a uniform pick.
    std::fill(rest.begin(), rest.end(), 1.0);
    rest[static_cast<std::size_t>(first)] = 0.0;
  }
  return {first, roulette(rest, rng)};
}

Antibody crossover(const Antibody& a, const Antibody& b, CrossoverMode mode, bool mirrored, Rng& rng) {
  if (a.type != b.type) throw std::invalid_argument("crossover: parents have different types");
  Antibody child;
  child.type = a.type;
  for (std::size_t k = 0; k < behaviors::kAllAttributes.size(); ++k) {
    const Attribute attr = behaviors::kAllAttributes[k];
    const auto va = a.get(attr);
    const auto vb = b.get(attr);
    if (!va || !vb) {
      child.set(attr, va ? va : vb);
      continue;
    }
    switch (mode) {
      case CrossoverMode::Average:
        if (attr == Attribute::Direction) {
          child.set(attr, *va == *vb ? *va : (rng.bernoulli(0.5) ? *va : *vb));
        } else {
          child.set(attr, static_cast<int>(std::lround((*va + *vb) / 2.0)));
        }
        break;
      case CrossoverMode::RandomPick:
        child.set(attr, rng.bernoulli(0.5) ? *va : *vb);
        break;
      case CrossoverMode::Alternating: {
        const bool even = k % 2 == 0;
        child.set(attr, (even != mirrored) ? *va : *vb);
        break;
      }
    }
  }
  return child;
}

Antibody mutate(Antibody ab, double epsilon, const behaviors::LimitProfile& limits, Rng& rng) {
  for (Attribute attr : behaviors::kAllAttributes) {
    if (attr == Attribute::Direction) continue;
    const auto v = ab.get(attr);
    if (!v || !rng.bernoulli(epsilon)) continue;
    const double magnitude = rng.uniform(0.2, 0.5);
    const double factor = rng.bernoulli(0.5) ? 1.0 + magnitude : 1.0 - magnitude;
    ab.set(attr, static_cast<int>(std::lround(*v * factor)));
  }
  return behaviors::clamp_to_limits(ab, limits);
}

Genome breed(const Genome& a, const Genome& b, double epsilon, const behaviors::LimitProfile& limits, Rng& rng,
             std::uint32_t tag) {
  if (a.y() != b.y()) throw std::invalid_argument("breed: parents differ in size");
  Genome child = Genome::empty(a.y(), tag);
  for (int j = 0; j < a.y(); ++j) {
    const auto s = static_cast<std::size_t>(j);
    const auto& pa = a.behaviours[s];
    const auto& pb = b.behaviours[s];
    if (rng.bernoulli(epsilon)) {
      child.behaviours[s] = behaviors::random_antibody(limits, rng);
      child.lineage[s] = tag;
      continue;
    }
    std::optional<Antibody> gene;
    const bool same_type = pa && pb && pa->type == pb->type;
    if (!same_type) {
      const bool take_a = rng.bernoulli(0.5);
      gene = take_a ? pa : pb;
      child.lineage[s] = take_a ? a.lineage[s] : b.lineage[s];
    } else {
      const auto mode = static_cast<CrossoverMode>(rng.uniform_int(0, 2));
      const bool mirrored = mode == CrossoverMode::Alternating && rng.bernoulli(0.5);
      gene = crossover(*pa, *pb, mode, mirrored, rng);
      child.lineage[s] = a.lineage[s] | b.lineage[s];
    }
    if (gene) gene = mutate(*gene, epsilon, limits, rng);
    child.behaviours[s] = gene;
  }
  return child;
}

CriteriaSet parse_criteria(std::string_view text) {
  if (text == "world1") return CriteriaSet::World1;
  if (text == "world2") return CriteriaSet::World2;
  if (text == "rerun") return CriteriaSet::Rerun;
  throw std::invalid_argument("unknown criteria set '" + std::string(text) + "' (world1|world2|rerun)");
}

std::optional<std::string> converged(std::span<const GenerationStats> history, CriteriaSet criteria) {
  if (history.empty()) return std::nullopt;
  const GenerationStats& s = history.back();
  const int g = s.generation;
  if (g > kMaxGeneration) return "g > 30";

  std::optional<double> change;
  if (history.size() >= 2) {
    const double before = history[history.size() - 2].lf;
    change = before != 0.0 ? std::abs(s.lf - before) / std::abs(before) : std::abs(s.lf);
  }
  auto small_change = [&](double limit) { return change && *change < limit; };

  switch (criteria) {
    case CriteriaSet::World1:
      if (g > 0 && s.lt < 400 && s.lc < 60 && small_change(0.1)) return "g > 0, LT < 400, LC < 60, df < 0.1";
      if (s.lt < 225 && s.lc < 35) return "LT < 225, LC < 35";
      if (g > 15 && small_change(0.1)) return "g > 15, df < 0.1";
      break;
    case CriteriaSet::World2:
      if (g > 0 && s.lt < 600 && s.lc < 90 && small_change(0.2)) return "g > 0, LT < 600, LC < 90, df < 0.2";
      if (s.lt < 400 && s.lc < 45) return "LT < 400, LC < 45";
      if (g > 15 && small_change(0.2)) return "g > 15, df < 0.2";
      break;
    case CriteriaSet::Rerun:
      if (g > 0 && s.lt < 500 && s.lc < 25) return "g > 0, LT < 500, LC < 25";
      break;
  }
  return std::nullopt;
}

PopulationModel PopulationModel::parse(std::string_view text) {
  auto number = [&](std::string_view t) {
    if (t.empty() || t.find_first_not_of("0123456789") != std::string_view::npos) {
      throw std::invalid_argument("bad population model '" + std::string(text) + "'");
    }
    return std::stoi(std::string(t));
  };
  PopulationModel m;
  if (text.rfind("single:", 0) == 0) {
    m.populations = 1;
    m.size = number(text.substr(7));
  } else if (text.rfind("multi:", 0) == 0) {
    const auto rest = text.substr(6);
    const auto x = rest.find('x');
    if (x == std::string_view::npos) throw std::invalid_argument("bad population model '" + std::string(text) + "'");
    m.populations = number(rest.substr(0, x));
    m.size = number(rest.substr(x + 1));
    if (m.populations < 2) throw std::invalid_argument("multi model needs at least two populations");
  } else {
    throw std::invalid_argument("population model must be single:<x> or multi:<k>x<n>");
  }
  return m;
}

namespace {

struct Scored {
  int index;
  FitnessRecord record;
};

// Fittest first; ties keep population order.
std::vector<Scored> ranked(const std::vector<FitnessRecord>& records) {
  std::vector<Scored> out;
  for (std::size_t i = 0; i < records.size(); ++i) out.push_back({static_cast<int>(i), records[i]});
  std::stable_sort(out.begin(), out.end(), [](const Scored& a, const Scored& b) { return a.record.lf < b.record.lf; });
  return out;
}

}  // namespace

LtlResult run_ltl(const LtlConfig& config) {
  const PopulationModel& model = config.model;
  if (!config.world) throw std::invalid_argument("run_ltl: no world");
  if (!model.multi() && model.size < kSeedSets) throw std::invalid_argument("run_ltl: single population needs x >= 5");
  if (model.multi() && model.populations != kSeedSets) {
    throw std::invalid_argument("run_ltl: multi model needs exactly 5 populations");
  }
  if (model.size < 2) throw std::invalid_argument("run_ltl: population size must be at least 2");
  if (model.populations > 32) throw std::invalid_argument("run_ltl: at most 32 populations");

  const int y = perception::antigen_count(config.mode);
  const int k = model.populations;
  const int n = model.size;
  EvaluationOptions options;
  options.mode = config.mode;
  options.limits = config.limits;
  options.ir_noise = config.ir_noise;

  std::vector<std::vector<Genome>> pops(static_cast<std::size_t>(k));
  for (int p = 0; p < k; ++p) pops[static_cast<std::size_t>(p)].assign(static_cast<std::size_t>(n), Genome::empty(y, 1u << p));

  LtlResult result;
  const auto started = std::chrono::steady_clock::now();
  std::vector<std::vector<FitnessRecord>> records(static_cast<std::size_t>(k));

  for (int g = 0;; ++g) {
    for (auto& r : records) r.assign(static_cast<std::size_t>(n), {});
    parallel_for(k * n, config.threads, [&](int idx) {
      const int p = idx / n;
      const int i = idx % n;
      Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(idx)));
      records[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)] =
          evaluate(pops[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)], config.world, options, rng);
    });

    std::vector<std::pair<int, int>> chosen;  // (population, index)
    for (int p = 0; p < k; ++p) {
      auto& recs = records[static_cast<std::size_t>(p)];
      std::vector<double> lf;
      for (const auto& r : recs) lf.push_back(r.lf);
      const auto mu = relative_fitness(lf);
      for (std::size_t i = 0; i < recs.size(); ++i) recs[i].lmu = mu[i];
      const auto order = ranked(recs);
      if (model.multi()) {
        chosen.emplace_back(p, order.front().index);
      } else {
        for (int t = 0; t < kSeedSets; ++t) chosen.emplace_back(p, order[static_cast<std::size_t>(t)].index);
      }
    }

    GenerationStats stats;
    stats.generation = g;
    for (const auto& [p, i] : chosen) {
      const auto& r = records[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
      stats.lt += r.lt;
      stats.lc += r.lc;
    }
    stats.lt /= static_cast<double>(chosen.size());
    stats.lc /= static_cast<double>(chosen.size());
    stats.lf = absolute_fitness(stats.lt, stats.lc, kLtlRho);
    stats.wall_clock = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    result.history.push_back(stats);
    if (config.progress) config.progress(stats);

    if (auto reason = converged(result.history, config.criteria)) {
      result.reason = *reason;
      SeedFile& seeds = result.seeds;
      seeds.y = y;
      seeds.profile = config.limits.name();
      Rng filler(derive_seed(config.seed, 0xF111ULL));
      for (const auto& [p, i] : chosen) {
        const Genome& genome = pops[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
        const auto& r = records[static_cast<std::size_t>(p)][static_cast<std::size_t>(i)];
        SeedSet set;
        set.lt = r.lt;
        set.lc = r.lc;
        for (int j = 0; j < y; ++j) {
          const auto& b = genome.behaviours[static_cast<std::size_t>(j)];
          // A slot the robot never met has no evolved behaviour and no score.
          set.antibodies.push_back(b ? *b : behaviors::random_antibody(config.limits, filler));
          set.e.push_back(b ? genome.e_scores[static_cast<std::size_t>(j)] : 0.0);
        }
        seeds.sets.push_back(std::move(set));
        result.seed_lineage.push_back(genome.lineage);
      }
      result.populations = std::move(pops);
      return result;
    }

    for (int p = 0; p < k; ++p) {
      const auto& recs = records[static_cast<std::size_t>(p)];
      std::vector<double> mu;
      for (const auto& r : recs) mu.push_back(r.lmu);
      Rng rng(derive_seed(config.seed, 0xB4EEDULL + static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(p)));
      const auto& parents = pops[static_cast<std::size_t>(p)];
      std::vector<Genome> children;
      children.reserve(static_cast<std::size_t>(n));
      for (int c = 0; c < n; ++c) {
        const auto [ia, ib] = pick_parents(mu, rng);
        children.push_back(breed(parents[static_cast<std::size_t>(ia)], parents[static_cast<std::size_t>(ib)],
                                 config.epsilon, config.limits, rng, 1u << p));
      }
      pops[static_cast<std::size_t>(p)] = std::move(children);
    }
  }
}

bool lineage_isolated(const LtlResult& result) {
  for (std::size_t p = 0; p < result.populations.size(); ++p) {
    const std::uint32_t own = 1u << p;
    for (const Genome& g : result.populations[p]) {
      for (std::uint32_t mask : g.lineage) {
        if (mask != own) return false;
      }
    }
  }
  if (result.populations.size() > 1) {
    for (std::size_t p = 0; p < result.seed_lineage.size(); ++p) {
      for (std::uint32_t mask : result.seed_lineage[p]) {
        if (mask != (1u << p)) return false;
      }
    }
  }
  return true;
}

}  // namespace idionav::ga
