// Acceptance run: one PASS/FAIL line per criterion, details indented below.
// Usage: idionav_acceptance <source-dir> <cli-path> <scratch-dir>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "idionav/ais.hpp"
#include "idionav/diversity.hpp"
#include "idionav/fitness.hpp"
#include "idionav/ga.hpp"
#include "idionav/harness.hpp"
#include "idionav/parallel.hpp"
#include "idionav/reinforcement.hpp"
#include "idionav/sim/world_config.hpp"
#include "idionav/stats.hpp"

using namespace idionav;
namespace fs = std::filesystem;

namespace {

fs::path g_source, g_cli, g_scratch;
int g_failures = 0;

void detail(const char* fmt, auto... args) {
  std::printf("    ");
  std::printf(fmt, args...);
  std::printf("\n");
}

// Runs a criterion body and prints its verdict with the elapsed time. A
// body that throws fails.
void criterion(int id, const char* title, double budget_s, const std::function<bool()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  bool ok = false;
  std::string error;
  try {
    ok = body();
  } catch (const std::exception& e) {
    error = e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget_s) detail("over the %.0f s budget", budget_s);
  if (!error.empty()) detail("exception: %s", error.c_str());
  ok = ok && error.empty() && secs <= budget_s;
  if (!ok) ++g_failures;
  std::printf("%s %d %s (%.1f s)\n", ok ? "PASS" : "FAIL", id, title, secs);
  std::fflush(stdout);
}

// ---------------------------------------------------------------- 1

bool diversity_oracle() {
  Rng rng(20240601);
  const auto est = diversity::expected_sigma(6, 1000000, rng);
  const int points = diversity::group_points(std::vector<int>{1, 3, 4, 4, 1});
  detail("sigma(6) = %.4f over %ld samples; group [1,3,4,4,1] -> %d", est.sigma, est.samples, points);
  return std::abs(est.sigma - 8.333) <= 0.02 && points == 8;
}

// ---------------------------------------------------------------- 2

bool fitness_normalisation() {
  Rng rng(77);
  double worst_sum = 0.0;
  long order_breaks = 0;
  for (int k = 0; k < 10000; ++k) {
    std::vector<double> f(static_cast<std::size_t>(rng.uniform_int(2, 50)));
    for (auto& x : f) x = rng.uniform(1e-3, 1e4);
    const auto mu = ga::relative_fitness(f);
    worst_sum = std::max(worst_sum, std::abs(std::accumulate(mu.begin(), mu.end(), 0.0) - 1.0));
    std::vector<std::size_t> idx(f.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return f[a] < f[b]; });
    for (std::size_t i = 1; i < idx.size(); ++i) {
      if (f[idx[i]] > f[idx[i - 1]] && !(mu[idx[i]] < mu[idx[i - 1]])) ++order_breaks;
    }
  }
  detail("max |sum(mu) - 1| = %.3g; ordering violations = %ld", worst_sum, order_breaks);
  return worst_sum <= 1e-12 && order_breaks == 0;
}

// ---------------------------------------------------------------- 3

struct Matrices {
  int v = 0, y = 0;
  std::vector<double> P, N;
  std::vector<int> I;
  double& p(int i, int j) { return P[static_cast<std::size_t>(i * y + j)]; }
  double& n(int i, int j) { return N[static_cast<std::size_t>(i * y + j)]; }
  int id(int i, int j) const { return I[static_cast<std::size_t>(i * y + j)]; }
};

struct TickResult {
  int alpha = 0, beta = 0;
  std::vector<double> P, N, C;
};

// Selection plus reinforcement recomputed without the library: column means,
// concentrations, both argmax stages, stimulation and suppression, clone
// growth, the score update and the mean restore.
TickResult oracle_tick(Matrices m, const std::vector<double>& sigma0, int antigen, double delta,
                       const ais::AisConstants& k) {
  const int v = m.v, y = m.y;
  auto conc = [&](const std::vector<double>& N) {
    const double total = std::accumulate(N.begin(), N.end(), 0.0);
    std::vector<double> C;
    for (double x : N) C.push_back(k.total_concentration * x / total);
    return C;
  };
  const std::vector<double> C = conc(m.N);
  auto c = [&](int i, int j) { return C[static_cast<std::size_t>(i * y + j)]; };

  TickResult r;
  for (int i = 1; i < v; ++i)
    if (m.p(i, antigen) > m.p(r.alpha, antigen)) r.alpha = i;
  const int a = r.alpha;
  std::vector<double> s2(static_cast<std::size_t>(v));
  for (int i = 0; i < v; ++i) {
    double stim = 0.0, supp = 0.0;
    for (int j = 0; j < y; ++j) {
      stim += (1.0 - m.p(i, j)) * m.id(a, j) * c(i, j) * c(a, j);
      supp += m.p(a, j) * m.id(i, j) * c(i, j) * c(a, j);
    }
    s2[static_cast<std::size_t>(i)] = m.p(i, antigen) + k.k1 * stim - k.k2 * supp;
  }
  for (int i = 0; i < v; ++i) {
    m.n(i, antigen) = std::max(k.b * s2[static_cast<std::size_t>(i)] + m.n(i, antigen) * (1.0 - k.k3), k.min_clones);
  }
  r.C = conc(m.N);
  double best = -INFINITY;
  for (int i = 0; i < v; ++i) {
    const double act = r.C[static_cast<std::size_t>(i * y + antigen)] * s2[static_cast<std::size_t>(i)];
    if (act > best) best = act, r.beta = i;
  }

  m.p(r.beta, antigen) = std::clamp(m.p(r.beta, antigen) + delta, 0.0, 1.0);
  double col = 0.0;
  for (int i = 0; i < v; ++i) col += m.p(i, antigen);
  const double target = sigma0[static_cast<std::size_t>(antigen)];
  if (col > 0.0 && target > 0.0) {
    // Entries that would pass 1 are held at 1 and the rest share the
    // remaining mass; found by bisection on the common factor.
    double lo = 0.0, hi = 1e12;
    for (int it = 0; it < 300; ++it) {
      const double mid = 0.5 * (lo + hi);
      double s = 0.0;
      for (int i = 0; i < v; ++i) s += std::min(1.0, mid * m.p(i, antigen));
      (s < target * v ? lo : hi) = mid;
    }
    const double f = 0.5 * (lo + hi);
    for (int i = 0; i < v; ++i) m.p(i, antigen) = std::min(1.0, f * m.p(i, antigen));
  }
  r.P = m.P;
  r.N = m.N;
  return r;
}

bool ais_tick_oracle() {
  Rng rng(3030);
  const int ys[] = {2, 8, 9};
  long ticks = 0, select_mismatch = 0;
  double worst_n = 0.0, worst_c = 0.0, worst_p = 0.0, worst_mean = 0.0, worst_total = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int y = ys[trial % 3];
    ais::AisState s;
    s.paratope = ais::Grid<double>(5, y);
    s.clones = ais::Grid<double>(5, y);
    s.idiotope = ais::Grid<int>(5, y, 0);
    s.antibodies = ais::Grid<behaviors::Antibody>(5, y);
    for (auto& p : s.paratope.data()) p = rng.bernoulli(0.1) ? 1.0 : rng.uniform();
    for (auto& n : s.clones.data()) n = rng.uniform(100.0, 5000.0);
    s.idiotope = ais::build_idiotope(s.paratope, rng);
    s.initial_means = ais::column_means(s.paratope);
    s.constants.idiotope_period = 1 << 30;  // keep I fixed so the oracle can follow
    ais::refresh_concentrations(s);

    // Several consecutive ticks on the same state.
    for (int t = 0; t < 5; ++t) {
      Matrices m{5, y, s.paratope.data(), s.clones.data(), s.idiotope.data()};
      const int antigen = rng.uniform_int(0, y - 1);
      const double delta = rng.uniform(-0.3, 0.3);
      const TickResult want = oracle_tick(m, s.initial_means, antigen, delta, s.constants);

      const auto sel = ais::select(s, antigen, true);
      ais::reinforce(s, sel.beta, delta, rng);
      ++ticks;
      if (sel.alpha.set != want.alpha || sel.beta.set != want.beta) ++select_mismatch;
      for (std::size_t q = 0; q < want.N.size(); ++q) {
        worst_n = std::max(worst_n, std::abs(s.clones.data()[q] - want.N[q]) / std::max(1.0, want.N[q]));
        worst_c = std::max(worst_c, std::abs(s.concentration.data()[q] - want.C[q]));
        worst_p = std::max(worst_p, std::abs(s.paratope.data()[q] - want.P[q]));
      }
      double col = 0.0;
      for (int i = 0; i < 5; ++i) col += s.paratope(i, antigen);
      if (s.initial_means[static_cast<std::size_t>(antigen)] > 0.0) {
        worst_mean = std::max(worst_mean, std::abs(col / 5.0 - s.initial_means[static_cast<std::size_t>(antigen)]));
      }
      const auto& cd = s.concentration.data();
      worst_total = std::max(worst_total, std::abs(std::accumulate(cd.begin(), cd.end(), 0.0) - 25.0));
    }
  }
  detail("%ld ticks; selection mismatches %ld", ticks, select_mismatch);
  detail("max rel err N %.2g, abs err C %.2g, abs err P %.2g", worst_n, worst_c, worst_p);
  detail("max column-mean error %.2g; max |sum C - 25| %.2g", worst_mean, worst_total);
  // P goes through the bisection oracle, so it is held to the restore
  // tolerance.
  return select_mismatch == 0 && worst_n <= 1e-12 && worst_c <= 1e-12 && worst_p <= 1e-9 && worst_mean <= 1e-9 &&
         worst_total <= 1e-12;
}

// ---------------------------------------------------------------- 4

// Fixed cells of the score tables, LTL points and STL values, written out
// row by row. Returns false for the "depends on" rows.
bool table_cell(int prev, int cur, rl::Phase phase, double& out) {
  const bool ltl = phase == rl::Phase::Ltl;
  const bool po = prev >= 2, co = cur >= 2;
  if (prev == 0 && cur == 0) out = ltl ? 0 : 0.05;
  else if (prev == 1 && cur == 0) out = ltl ? -10 : -0.10;
  else if (po && cur == 0) out = ltl ? 10 : 0.10;
  else if (prev == 0 && cur == 1) out = ltl ? 10 : 0.10;
  else if (po && cur == 1) out = ltl ? 20 : 0.20;
  else if (!po && co) out = ltl ? 0 : -0.05;
  else return false;
  return true;
}

bool rl_table_fidelity() {
  int cells = 0, wrong = 0, scale_checked = 0, scale_wrong = 0;
  for (auto mode : {perception::AntigenMode::Eight, perception::AntigenMode::Nine}) {
    const int n = perception::antigen_count(mode);
    for (int p = 0; p < n; ++p) {
      for (int c = 0; c < n; ++c) {
        rl::RlContext ctx{{p, mode}, {c, mode}, {}, {}, 0, 0};
        double want = 0.0;
        for (auto phase : {rl::Phase::Ltl, rl::Phase::Stl}) {
          if (!table_cell(p, c, phase, want)) continue;
          ++cells;
          if (std::abs(rl::transition_score(ctx, phase) - want) > 1e-12) ++wrong;
        }
        // The scale law covers the rows the two columns share.
        const bool shared = table_cell(p, c, rl::Phase::Ltl, want) && !(p == 0 && c == 0) && !(p < 2 && c >= 2);
        if (shared) {
          ++scale_checked;
          const double l = rl::transition_score(ctx, rl::Phase::Ltl), s = rl::transition_score(ctx, rl::Phase::Stl);
          if (std::abs(s - l / 100.0) > 1e-12) ++scale_wrong;
        }
      }
    }
  }
  detail("%d fixed cells checked, %d wrong; scale law on %d rows, %d wrong", cells, wrong, scale_checked,
         scale_wrong);
  return cells > 0 && wrong == 0 && scale_wrong == 0;
}

// ---------------------------------------------------------------- 5

bool ga_protocol() {
  const auto world = sim::load_world_shared(g_source / "worlds/world_a1.world");
  bool isolated = true, converged = true, z_primary = false;
  std::vector<double> times;
  for (std::uint64_t seed : {1, 2, 3}) {
    ga::LtlConfig cfg;
    cfg.world = world;
    cfg.model = ga::PopulationModel::parse("multi:5x5");
    cfg.criteria = ga::CriteriaSet::World1;
    cfg.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = ga::run_ltl(cfg);
    times.push_back(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    const auto div = diversity::diversity_report(result.seeds);
    const int g = result.history.back().generation;
    const bool iso = ga::lineage_isolated(result);
    detail("seed %llu: stopped at g=%d (%s); lineage isolated %s; Z_U %.1f%%, Z_S %.1f%%",
           static_cast<unsigned long long>(seed), g, result.reason.c_str(), iso ? "yes" : "no", 100 * div.z_u,
           100 * div.z_s);
    isolated = isolated && iso;
    converged = converged && g <= ga::kMaxGeneration + 1;
    if (seed == 1) z_primary = std::abs(div.z_s - 1.0) < 1e-12;
  }
  std::sort(times.begin(), times.end());
  detail("(a) isolation %s; (b) Z_S = 100%% on the primary run (seed 1) %s; (c) convergence by g=31 %s",
         isolated ? "ok" : "FAILED", z_primary ? "ok" : "FAILED", converged ? "ok" : "FAILED");
  detail("median run %.1f s", times[1]);
  return isolated && z_primary && converged && times[1] < 300.0;
}

// ---------------------------------------------------------------- 6, 7, 9

// Trials pooled over several independently evolved seed files. Each seed
// file k comes from a GA run with seed derive_seed(kMaster, k); every
// scheme sees the same seed files and the same trial layouts.
constexpr std::uint64_t kMaster = 0xAC1D;
constexpr int kSeedFiles = 6;
constexpr int kTrialsPerFile = 30;

struct Pool {
  std::vector<std::shared_ptr<const ga::SeedFile>> seeds8, seeds9;
  std::shared_ptr<const sim::WorldConfig> world;
  std::vector<harness::TrialRecord> sie, srl, uie, url, sie9;
};

Pool& pool() {
  static Pool p;
  return p;
}

std::vector<std::shared_ptr<const ga::SeedFile>> evolve(perception::AntigenMode mode) {
  std::vector<std::shared_ptr<const ga::SeedFile>> out(kSeedFiles);
  const auto world = sim::load_world_shared(g_source / "worlds/world_a1.world");
  for (int k = 0; k < kSeedFiles; ++k) {
    ga::LtlConfig cfg;
    cfg.world = world;
    cfg.model = ga::PopulationModel::parse("multi:5x10");
    cfg.criteria = ga::CriteriaSet::Rerun;
    cfg.limits = behaviors::LimitProfile::slow();
    cfg.mode = mode;
    cfg.seed = derive_seed(kMaster, static_cast<std::uint64_t>(k));
    const auto r = ga::run_ltl(cfg);
    out[static_cast<std::size_t>(k)] = std::make_shared<const ga::SeedFile>(r.seeds);
  }
  return out;
}

std::vector<harness::TrialRecord> run_pooled(harness::Scheme scheme, perception::AntigenMode mode,
                                             const ais::AisConstants& constants = {}) {
  Pool& p = pool();
  const auto& files = mode == perception::AntigenMode::Eight ? p.seeds8 : p.seeds9;
  std::vector<harness::TrialRecord> rows(kSeedFiles * kTrialsPerFile);
  parallel_for(static_cast<int>(rows.size()), 0, [&](int idx) {
    const int k = idx / kTrialsPerFile, r = idx % kTrialsPerFile;
    harness::SchemeConfig cfg;
    cfg.scheme = scheme;
    cfg.mode = mode;
    cfg.constants = constants;
    cfg.seeds = files[static_cast<std::size_t>(k)];
    cfg.behaviour_set_seed = derive_seed(kMaster, 0x5E75, static_cast<std::uint64_t>(k));
    rows[static_cast<std::size_t>(idx)] =
        harness::run_stl_trial(cfg, p.world, derive_seed(kMaster, 0x7121A1, static_cast<std::uint64_t>(r)));
  });
  return rows;
}

std::vector<double> column(const std::vector<harness::TrialRecord>& rows, double harness::TrialRecord::*field) {
  std::vector<double> out;
  for (const auto& r : rows) out.push_back(r.*field);
  return out;
}

double fail_pct(const std::vector<harness::TrialRecord>& rows) {
  const auto n = std::count_if(rows.begin(), rows.end(), [](const auto& r) { return !r.success; });
  return 100.0 * static_cast<double>(n) / static_cast<double>(rows.size());
}

bool hypothesis_ordering() {
  Pool& p = pool();
  p.world = sim::load_world_shared(g_source / "worlds/world_b3.world");
  p.seeds8 = evolve(perception::AntigenMode::Eight);
  p.sie = run_pooled(harness::Scheme::Sie, perception::AntigenMode::Eight);
  p.srl = run_pooled(harness::Scheme::Srl, perception::AntigenMode::Eight);
  p.uie = run_pooled(harness::Scheme::Uie, perception::AntigenMode::Eight);
  p.url = run_pooled(harness::Scheme::Url, perception::AntigenMode::Eight);

  const auto sie = column(p.sie, &harness::TrialRecord::sq);
  detail("%d seed files x %d layouts = %zu trials per scheme, world %s", kSeedFiles, kTrialsPerFile, sie.size(),
         p.world->name.c_str());
  detail("SIE median sq %.1f, fail %.1f%%", stats::median(sie), fail_pct(p.sie));
  bool ok = true;
  const std::pair<const char*, const std::vector<harness::TrialRecord>*> others[] = {
      {"SRL", &p.srl}, {"UIE", &p.uie}, {"URL", &p.url}};
  for (const auto& [name, rows] : others) {
    const auto other = column(*rows, &harness::TrialRecord::sq);
    const auto mw = stats::mann_whitney_less(sie, other);
    const bool better = stats::median(sie) < stats::median(other) && mw.p < 0.05;
    detail("SIE vs %s: median %.1f vs %.1f, one-sided rank p = %.3g -> %s", name, stats::median(sie),
           stats::median(other), mw.p, better ? "ok" : "NOT MET");
    ok = ok && better;
  }
  // Per seed file, for the record.
  for (int k = 0; k < kSeedFiles; ++k) {
    auto slice = [&](const std::vector<harness::TrialRecord>& rows) {
      std::vector<double> out;
      for (int r = 0; r < kTrialsPerFile; ++r) out.push_back(rows[static_cast<std::size_t>(k * kTrialsPerFile + r)].sq);
      return out;
    };
    detail("  seed file %d: median sq SIE %.1f SRL %.1f UIE %.1f URL %.1f", k, stats::median(slice(p.sie)),
           stats::median(slice(p.srl)), stats::median(slice(p.uie)), stats::median(slice(p.url)));
  }
  const bool fail_ok = fail_pct(p.sie) <= 5.0 && fail_pct(p.url) > fail_pct(p.sie);
  detail("failure rates: SIE %.1f%% (<= 5%%), URL %.1f%% (> SIE) -> %s", fail_pct(p.sie), fail_pct(p.url),
         fail_ok ? "ok" : "NOT MET");
  return ok && fail_ok;
}

bool difference_rate() {
  Pool& p = pool();
  if (p.sie.empty()) throw std::runtime_error("needs the trials of criterion 6");
  const double rate = stats::mean(column(p.sie, &harness::TrialRecord::idio_rate));
  detail("seeded idiotypic mean difference rate %.3f over %zu trials", rate, p.sie.size());

  // No stimulation or suppression and no clone growth: C stays uniform.
  ais::AisConstants flat;
  flat.k1 = flat.k2 = 0.0;
  flat.b = 0.0;
  const auto zero = run_pooled(harness::Scheme::Sie, perception::AntigenMode::Eight, flat);
  const double zero_max = stats::mean(column(zero, &harness::TrialRecord::idio_rate));
  double zero_worst = 0.0;
  for (const auto& r : zero) zero_worst = std::max(zero_worst, r.idio_rate);
  detail("k1 = k2 = 0 with uniform C: mean %.3g, max %.3g", zero_max, zero_worst);
  return rate >= 0.10 && rate <= 0.35 && zero_worst == 0.0;
}

bool nine_antigen_parity() {
  Pool& p = pool();
  if (p.sie.empty()) throw std::runtime_error("needs the trials of criterion 6");
  p.seeds9 = evolve(perception::AntigenMode::Nine);
  p.sie9 = run_pooled(harness::Scheme::Sie, perception::AntigenMode::Nine);
  const auto a = column(p.sie, &harness::TrialRecord::sq), b = column(p.sie9, &harness::TrialRecord::sq);
  const auto w = stats::wilcoxon_signed_rank(a, b);
  detail("%zu pairs (same seed-file index and layout); median sq 8-antigen %.1f, 9-antigen %.1f", a.size(),
         stats::median(a), stats::median(b));
  detail("Wilcoxon signed-rank two-sided p = %.3g (parity needs p >= 0.05); 9-antigen fail %.1f%%", w.p,
         fail_pct(p.sie9));
  return a.size() >= 30 && w.p >= 0.05;
}

// ---------------------------------------------------------------- 8

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

int run(const std::string& cmd) { return std::system(cmd.c_str()); }

bool determinism() {
  fs::create_directories(g_scratch);
  const std::string cli = "\"" + g_cli.string() + "\"";
  const std::string a1 = "\"" + (g_source / "worlds/world_a1.world").string() + "\"";
  const std::string b4 = "\"" + (g_source / "worlds/world_b4.world").string() + "\"";
  auto out = [&](const std::string& name) { return g_scratch / name; };
  auto q = [](const fs::path& p) { return "\"" + p.string() + "\""; };

  bool ok = true;
  auto same = [&](const char* what, const fs::path& x, const fs::path& y) {
    const std::string sx = slurp(x), sy = slurp(y);
    const bool eq = !sx.empty() && sx == sy;
    detail("%-6s %zu bytes, identical: %s", what, sx.size(), eq ? "yes" : "no");
    ok = ok && eq;
  };

  for (const char* tag : {"1", "2"}) {
    ok = ok && run(cli + " ltl --world " + a1 + " --pop multi:5x3 --criteria rerun --profile slow --seed 9 --quiet" +
                   " --out " + q(out(std::string("seeds_") + tag + ".txt"))) == 0;
  }
  same("ltl", out("seeds_1.txt"), out("seeds_2.txt"));

  for (const char* tag : {"1", "2"}) {
    ok = ok && run(cli + " stl --scheme sie --world " + b4 + " --seeds " + q(out("seeds_1.txt")) + " --seed 5 > " +
                   q(out(std::string("stl_") + tag + ".csv"))) == 0;
  }
  same("stl", out("stl_1.csv"), out("stl_2.csv"));

  {
    std::ofstream plan(out("det.plan"));
    plan << "sie " << (g_source / "worlds/world_b3.world").string() << " 4 30 seeds=seeds_1.txt\n"
         << "uie " << (g_source / "worlds/world_b4.world").string() << " 4 30 set=R2:5\n"
         << "hdc " << (g_source / "worlds/world_b3.world").string() << " 4 30\n";
  }
  ok = ok && run(cli + " batch --plan " + q(out("det.plan")) + " --threads 1 --out " + q(out("batch_1.csv"))) == 0;
  ok = ok && run(cli + " batch --plan " + q(out("det.plan")) + " --threads 3 --out " + q(out("batch_2.csv"))) == 0;
  same("batch", out("batch_1.csv"), out("batch_2.csv"));
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 4) {
    std::fprintf(stderr, "usage: %s <source-dir> <cli> <scratch-dir>\n", argv[0]);
    return 2;
  }
  g_source = argv[1];
  g_cli = argv[2];
  g_scratch = argv[3];

  criterion(1, "diversity oracle", 10, diversity_oracle);
  criterion(2, "fitness normalisation", 5, fitness_normalisation);
  criterion(3, "AIS tick oracle", 30, ais_tick_oracle);
  criterion(4, "reinforcement table fidelity", 1, rl_table_fidelity);
  criterion(5, "GA protocol (isolation, speed diversity, termination)", 900, ga_protocol);
  criterion(6, "hypothesis ordering SIE < SRL, UIE, URL", 1800, hypothesis_ordering);
  criterion(7, "idiotypic difference rate", 600, difference_rate);
  criterion(8, "CLI determinism", 300, determinism);
  criterion(9, "nine-antigen parity", 1200, nine_antigen_parity);

  std::printf("%d of 9 criteria failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
