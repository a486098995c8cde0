#include "idionav/harness.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "idionav/parallel.hpp"
#include "idionav/reinforcement.hpp"
#include "idionav/sim/supervisor.hpp"
#include "idionav/sim/world_config.hpp"

namespace idionav::harness {

using behaviors::Antibody;
using behaviors::Attribute;
using behaviors::BehaviourType;

Scheme parse_scheme(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "sie") return Scheme::Sie;
  if (lower == "srl") return Scheme::Srl;
  if (lower == "uie") return Scheme::Uie;
  if (lower == "url") return Scheme::Url;
  if (lower == "hdc") return Scheme::Hdc;
  throw std::invalid_argument("unknown scheme '" + std::string(text) + "' (sie|srl|uie|url|hdc)");
}

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Sie: return "SIE";
    case Scheme::Srl: return "SRL";
    case Scheme::Uie: return "UIE";
    case Scheme::Url: return "URL";
    case Scheme::Hdc: return "HDC";
  }
  return "?";
}

bool is_seeded(Scheme scheme) { return scheme == Scheme::Sie || scheme == Scheme::Srl; }
bool is_idiotypic(Scheme scheme) { return scheme == Scheme::Sie || scheme == Scheme::Uie; }

std::string_view fail_reason_name(FailReason reason) {
  switch (reason) {
    case FailReason::None: return "none";
    case FailReason::Time: return "time";
    case FailReason::Collisions: return "collisions";
  }
  return "?";
}

FailReason parse_fail_reason(std::string_view text) {
  if (text == "none") return FailReason::None;
  if (text == "time") return FailReason::Time;
  if (text == "collisions") return FailReason::Collisions;
  throw std::invalid_argument("unknown fail reason '" + std::string(text) + "'");
}

FailReason classify_failure(double st, int sc) {
  if (st > kStlTimeLimit) return FailReason::Time;
  if (sc > kStlCollisionLimit) return FailReason::Collisions;
  return FailReason::None;
}

double solution_quality(double st, int sc) { return (st + kQualityRho * sc) / 2.0; }

namespace {

Antibody make(BehaviourType type, int speed, std::optional<int> f, std::optional<int> a, std::optional<int> d) {
  Antibody ab;
  ab.type = type;
  ab.set(Attribute::Speed, speed);
  ab.set(Attribute::Frequency, f);
  ab.set(Attribute::Angle, a);
  ab.set(Attribute::Direction, d);
  return ab;
}

constexpr int kHdcSpeed = 300;
constexpr int kHdcReverseSpeed = 300;
constexpr int kHdcTurn = 150;
constexpr int kLeft = 0;
constexpr int kRight = 1;

}  // namespace

sim::WheelCommand hdc_policy(const sim::IrReadings& ir, const sim::BlobReport& blob, Rng& rng, bool track) {
  const perception::SensorSummary s = perception::summarize(ir, blob);
  if (s.v_max >= perception::kObstacleThreshold) {
    const auto side = perception::orientation_of(s.i_max);
    const bool collision = s.v_max >= perception::kCollisionThreshold;
    if (side == perception::Orientation::Rear) {
      return {static_cast<double>(kHdcSpeed), static_cast<double>(kHdcSpeed)};
    }
    const int obstacle_side = side == perception::Orientation::Left ? kLeft : kRight;
    if (collision) {
      // Backing up with the obstacle-side wheel slowed swings the nose away.
      return behaviors::act(make(BehaviourType::ReverseTurn, kHdcReverseSpeed, std::nullopt, kHdcTurn, obstacle_side),
                            blob, rng);
    }
    // Slow the wheel opposite the obstacle to steer away from it.
    const int away = obstacle_side == kLeft ? kRight : kLeft;
    return behaviors::act(make(BehaviourType::ForwardTurn, kHdcSpeed, std::nullopt, kHdcTurn, away), blob, rng);
  }
  if (track && blob.seen) {
    return behaviors::act(make(BehaviourType::TrackMarkers, kHdcSpeed, std::nullopt, 100, std::nullopt), blob, rng);
  }
  const int d = rng.bernoulli(0.5) ? kLeft : kRight;
  return behaviors::act(make(BehaviourType::WanderSingle, kHdcSpeed, 50, 60, d), blob, rng);
}

ais::AisState initial_state(const SchemeConfig& cfg) {
  Rng rng(derive_seed(cfg.behaviour_set_seed, 0x5E7ULL));
  if (is_seeded(cfg.scheme)) {
    if (!cfg.seeds) throw std::invalid_argument("seeded scheme needs a seed file");
    if (cfg.seeds->y != perception::antigen_count(cfg.mode)) {
      throw std::invalid_argument("seed file antigen count does not match the antigen mode");
    }
    return ais::init_seeded(*cfg.seeds, rng, cfg.constants);
  }
  return ais::init_unseeded(perception::antigen_count(cfg.mode), cfg.limits, rng, cfg.constants);
}

TrialRecord run_stl_trial(const SchemeConfig& cfg, const std::shared_ptr<const sim::WorldConfig>& world_cfg,
                          std::uint64_t seed) {
  if (!world_cfg) throw std::invalid_argument("run_stl_trial: no world");
  if (world_cfg->kind != sim::WorldKind::Stl) throw std::invalid_argument("run_stl_trial: world is not an STL world");

  Rng layout_rng(derive_seed(seed, 1));
  Rng world_rng(derive_seed(seed, 2));
  Rng ctrl_rng(derive_seed(seed, 3));

  sim::WorldState world = sim::make_world(world_cfg);
  sim::begin_run(world, layout_rng);

  const bool hdc = cfg.scheme == Scheme::Hdc;
  const bool idiotypic = is_idiotypic(cfg.scheme);
  std::optional<ais::AisState> state;
  if (!hdc) state = initial_state(cfg);

  rl::TransitionTracker tracker;
  rl::StagnationState stagnation;
  std::optional<perception::AntigenCode> prev_code;
  std::optional<ais::Slot> prev_winner;
  int bright_streak = 0;
  long tick = 0;

  TrialRecord rec;
  rec.scheme = std::string(scheme_name(cfg.scheme));
  rec.world = world_cfg->name;
  rec.rng_seed = seed;

  while (true) {
    rec.fail_reason = classify_failure(world.clock, world.collisions);
    if (rec.fail_reason != FailReason::None) break;

    const sim::IrReadings ir = sim::read_ir(world, world_rng, cfg.ir_noise);
    const sim::BlobReport blob = sim::read_blob(world);
    bright_streak = blob.pixel_count > kSuccessPixels ? bright_streak + 1 : 0;
    if (bright_streak >= kSuccessReadings) {
      rec.success = true;
      break;
    }

    sim::WheelCommand cmd;
    if (hdc) {
      cmd = hdc_policy(ir, blob, ctrl_rng, cfg.hdc_track);
    } else {
      const perception::SensorSummary summary = perception::summarize(ir, blob);
      const perception::AntigenCode code = perception::classify(summary, ir, cfg.mode);
      stagnation.observe(code, !prev_code || prev_code->code != code.code, sim::kControlTick);
      if (auto ctx = tracker.observe(code, summary); ctx && prev_winner) {
        double delta = rl::transition_score(*ctx, rl::Phase::Stl);
        const auto outcome = rl::stagnation_adjust(stagnation, rl::Phase::Stl, idiotypic);
        if (outcome.signal == rl::StagnationSignal::Deduct) delta -= outcome.deduction;
        ais::reinforce(*state, *prev_winner, delta, ctrl_rng);
      }
      if (!state->seeded) ais::replace_weak(*state, cfg.limits, ctrl_rng);
      const ais::SelectionOutcome sel = ais::select(*state, code.code, idiotypic);
      cmd = behaviors::act(state->antibodies(sel.beta.set, sel.beta.antigen), blob, ctrl_rng);
      prev_winner = sel.beta;
      prev_code = code;
      if (cfg.dump && cfg.dump_every > 0 && tick % cfg.dump_every == 0) {
        *cfg.dump << "tick " << tick << " t=" << world.clock << '\n';
        ais::dump_state(*cfg.dump, *state);
      }
    }
    sim::step(world, cmd, sim::kControlTick);
    sim::supervisor_tick(world, world_rng, sim::kControlTick);
    ++tick;
  }

  rec.st = std::min(world.clock, kStlTimeLimit);
  rec.sc = std::min(world.collisions, kStlCollisionLimit);
  rec.sq = solution_quality(rec.st, rec.sc);
  rec.idio_rate = state && state->selection_count > 0 ? ais::difference_rate(*state) : 0.0;
  return rec;
}

std::vector<PlanEntry> parse_plan(std::istream& in, const std::filesystem::path& base_dir) {
  std::vector<PlanEntry> plan;
  std::string raw;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("plan line " + std::to_string(line_no) + ": " + what);
  };
  auto resolve = [&](const std::string& p) {
    std::filesystem::path path(p);
    return path.is_absolute() ? path : base_dir / path;
  };
  while (std::getline(in, raw)) {
    ++line_no;
    if (const auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream line(raw);
    std::string scheme, world;
    PlanEntry e;
    if (!(line >> scheme)) continue;
    if (!(line >> world >> e.replicates >> e.base_seed)) fail("expected <scheme> <world> <replicates> <base_seed>");
    try {
      e.scheme = parse_scheme(scheme);
    } catch (const std::invalid_argument& err) {
      fail(err.what());
    }
    if (e.replicates < 1) fail("replicates must be positive");
    e.world = resolve(world);
    std::string opt;
    while (line >> opt) {
      const auto eq = opt.find('=');
      if (eq == std::string::npos) fail("expected key=value, got '" + opt + "'");
      const std::string key = opt.substr(0, eq);
      const std::string value = opt.substr(eq + 1);
      if (key == "seeds") {
        e.seeds = resolve(value);
      } else if (key == "antigens") {
        try {
          e.mode = perception::parse_mode(value);
        } catch (const std::invalid_argument& err) {
          fail(err.what());
        }
      } else if (key == "set") {
        const auto colon = value.find(':');
        if (colon == std::string::npos) fail("set needs <name>:<seed>");
        e.behaviour_set = value.substr(0, colon);
        const std::string num = value.substr(colon + 1);
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), e.behaviour_set_seed);
        if (ec != std::errc{} || ptr != num.data() + num.size()) fail("bad set seed '" + num + "'");
      } else if (key == "profile") {
        e.profile = value;
      } else if (key == "hdc-track") {
        if (value != "on" && value != "off") fail("hdc-track must be on or off");
        e.hdc_track = value == "on";
      } else {
        fail("unknown option '" + key + "'");
      }
    }
    if (is_seeded(e.scheme) && !e.seeds) fail("seeded scheme needs seeds=<file>");
    plan.push_back(std::move(e));
  }
  return plan;
}

std::vector<PlanEntry> load_plan(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open plan " + path.string());
  return parse_plan(in, path.parent_path());
}

std::vector<TrialRecord> run_batch(const std::vector<PlanEntry>& plan, int threads) {
  struct Job {
    SchemeConfig cfg;
    std::shared_ptr<const sim::WorldConfig> world;
    std::uint64_t seed;
  };
  std::map<std::string, std::shared_ptr<const sim::WorldConfig>> worlds;
  std::map<std::string, std::shared_ptr<const ga::SeedFile>> seed_files;
  std::vector<Job> jobs;
  for (const PlanEntry& e : plan) {
    auto& world = worlds[e.world.string()];
    if (!world) world = sim::load_world_shared(e.world);
    SchemeConfig cfg;
    cfg.scheme = e.scheme;
    cfg.mode = e.mode;
    cfg.limits = behaviors::LimitProfile::named(e.profile);
    cfg.behaviour_set_seed = e.behaviour_set_seed;
    cfg.hdc_track = e.hdc_track;
    if (e.seeds) {
      auto& seeds = seed_files[e.seeds->string()];
      if (!seeds) seeds = std::make_shared<const ga::SeedFile>(ga::load_seed_file(*e.seeds));
      cfg.seeds = seeds;
    }
    for (int r = 0; r < e.replicates; ++r) jobs.push_back({cfg, world, e.base_seed + static_cast<std::uint64_t>(r)});
  }
  std::vector<TrialRecord> rows(jobs.size());
  parallel_for(static_cast<int>(jobs.size()), threads, [&](int i) {
    const Job& job = jobs[static_cast<std::size_t>(i)];
    rows[static_cast<std::size_t>(i)] = run_stl_trial(job.cfg, job.world, job.seed);
  });
  return rows;
}

void write_csv(std::ostream& out, const std::vector<TrialRecord>& rows) {
  out << kCsvHeader << '\n';
  for (const TrialRecord& r : rows) {
    out << r.scheme << ',' << r.world << ',' << r.rng_seed << ',' << ga::format_double(r.st) << ',' << r.sc << ','
        << ga::format_double(r.sq) << ',' << (r.success ? 1 : 0) << ',' << fail_reason_name(r.fail_reason) << ','
        << ga::format_double(r.idio_rate) << '\n';
  }
}

namespace {

template <typename T>
T parse_number(const std::string& text, int line_no) {
  T v{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad number '" + text + "'");
  }
  return v;
}

}  // namespace

std::vector<TrialRecord> read_csv(std::istream& in) {
  std::vector<TrialRecord> rows;
  std::string raw;
  int line_no = 0;
  bool header = false;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    if (raw.empty()) continue;
    if (!header) {
      if (raw != kCsvHeader) throw std::invalid_argument("csv: unexpected header");
      header = true;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream line(raw);
    std::string cell;
    while (std::getline(line, cell, ',')) f.push_back(cell);
    if (f.size() != 9) throw std::invalid_argument("csv line " + std::to_string(line_no) + ": expected 9 columns");
    TrialRecord r;
    r.scheme = f[0];
    r.world = f[1];
    r.rng_seed = parse_number<std::uint64_t>(f[2], line_no);
    r.st = parse_number<double>(f[3], line_no);
    r.sc = parse_number<int>(f[4], line_no);
    r.sq = parse_number<double>(f[5], line_no);
    if (f[6] != "0" && f[6] != "1") throw std::invalid_argument("csv line " + std::to_string(line_no) + ": bad success");
    r.success = f[6] == "1";
    r.fail_reason = parse_fail_reason(f[7]);
    r.idio_rate = parse_number<double>(f[8], line_no);
    rows.push_back(std::move(r));
  }
  return rows;
}

std::vector<GroupSummary> summarize(const std::vector<TrialRecord>& rows) {
  auto order = [](const std::string& scheme) {
    try {
      return static_cast<int>(parse_scheme(scheme));
    } catch (const std::invalid_argument&) {
      return 99;
    }
  };
  std::map<std::tuple<int, std::string, std::string>, GroupSummary> groups;
  for (const TrialRecord& r : rows) {
    GroupSummary& g = groups[{order(r.scheme), r.world, r.scheme}];
    g.scheme = r.scheme;
    g.world = r.world;
    ++g.rows;
    g.mean_st += r.st;
    g.mean_sc += r.sc;
    g.mean_sq += r.sq;
    g.mean_idio_rate += r.idio_rate;
    if (r.fail_reason == FailReason::Time) g.fail_time_pct += 1;
    if (r.fail_reason == FailReason::Collisions) g.fail_collision_pct += 1;
  }
  std::vector<GroupSummary> out;
  for (auto& [key, g] : groups) {
    const double n = g.rows;
    g.mean_st /= n;
    g.mean_sc /= n;
    g.mean_sq /= n;
    g.mean_idio_rate /= n;
    g.fail_time_pct *= 100.0 / n;
    g.fail_collision_pct *= 100.0 / n;
    g.fail_total_pct = g.fail_time_pct + g.fail_collision_pct;
    out.push_back(g);
  }
  return out;
}

}  // namespace idionav::harness
