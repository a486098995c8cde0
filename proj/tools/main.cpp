// Command-line front end: evolve seed sets, run trials and batches, and
// summarise results.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "idionav/diversity.hpp"
#include "idionav/ga.hpp"
#include "idionav/harness.hpp"
#include "idionav/sim/world_config.hpp"
#include "idionav/stats.hpp"

using namespace idionav;

namespace {

bool on_off(const std::string& v) { return v == "on"; }

int run_ltl_command(const std::string& world, const std::string& pop, const std::string& antigens,
                    const std::string& profile, const std::string& criteria, std::uint64_t seed,
                    const std::string& out, const std::string& noise, double epsilon, int threads, bool quiet) {
  ga::LtlConfig cfg;
  cfg.world = sim::load_world_shared(world);
  cfg.model = ga::PopulationModel::parse(pop);
  cfg.mode = perception::parse_mode(antigens);
  cfg.limits = behaviors::LimitProfile::named(profile);
  cfg.criteria = ga::parse_criteria(criteria);
  cfg.seed = seed;
  cfg.ir_noise = on_off(noise);
  cfg.epsilon = epsilon;
  cfg.threads = threads;
  if (!quiet) {
    cfg.progress = [](const ga::GenerationStats& s) {
      std::cerr << "g=" << s.generation << " LT=" << std::fixed << std::setprecision(1) << s.lt << " LC=" << s.lc
                << " LF=" << s.lf << " tau=" << s.wall_clock << "s\n";
    };
  }
  const ga::LtlResult result = ga::run_ltl(cfg);
  if (!quiet) std::cerr << "stopped: " << result.reason << '\n';
  if (out.empty() || out == "-") {
    std::cout << ga::serialize(result.seeds);
  } else {
    ga::write_seed_file(out, result.seeds);
  }
  return 0;
}

void print_summary(const std::vector<harness::TrialRecord>& rows) {
  const auto groups = harness::summarize(rows);
  std::printf("%-6s %-12s %5s %9s %7s %9s %7s %7s %7s %7s\n", "scheme", "world", "rows", "ST", "SC", "Sq", "fail%T",
              "fail%C", "fail%", "idio");
  for (const auto& g : groups) {
    std::printf("%-6s %-12s %5d %9.1f %7.2f %9.1f %7.1f %7.1f %7.1f %7.3f\n", g.scheme.c_str(), g.world.c_str(),
                g.rows, g.mean_st, g.mean_sc, g.mean_sq, g.fail_time_pct, g.fail_collision_pct, g.fail_total_pct,
                g.mean_idio_rate);
  }
}

double metric_of(const harness::TrialRecord& r, const std::string& metric) {
  if (metric == "sq") return r.sq;
  if (metric == "st") return r.st;
  if (metric == "sc") return r.sc;
  throw std::invalid_argument("metric must be sq, st or sc");
}

void compare(const std::vector<harness::TrialRecord>& rows, const std::string& pair, const std::string& metric) {
  const auto comma = pair.find(',');
  if (comma == std::string::npos) throw std::invalid_argument("--compare expects A,B");
  const std::string a_name = std::string(harness::scheme_name(harness::parse_scheme(pair.substr(0, comma))));
  const std::string b_name = std::string(harness::scheme_name(harness::parse_scheme(pair.substr(comma + 1))));
  std::map<std::string, std::pair<std::vector<double>, std::vector<double>>> by_world;
  for (const auto& r : rows) {
    if (r.scheme == a_name) by_world[r.world].first.push_back(metric_of(r, metric));
    if (r.scheme == b_name) by_world[r.world].second.push_back(metric_of(r, metric));
  }
  std::printf("%-12s %-9s %10s %10s %9s %8s %10s %11s %5s\n", "world", "pair", "mean_a", "mean_b", "t", "df",
              "p_welch", "p_mw_less", "99%");
  for (const auto& [world, samples] : by_world) {
    const auto& [a, b] = samples;
    if (a.size() < 2 || b.size() < 2) {
      std::fprintf(stderr, "warning: %s has too few rows for a comparison\n", world.c_str());
      continue;
    }
    const auto w = stats::welch_t(a, b);
    const auto mw = stats::mann_whitney_less(a, b);
    std::printf("%-12s %-9s %10.2f %10.2f %9.3f %8.2f %10.4g %11.4g %5s\n", world.c_str(),
                (a_name + "," + b_name).c_str(), stats::mean(a), stats::mean(b), w.t, w.df, w.p, mw.p,
                w.p < 0.01 ? "yes" : "no");
  }
  std::printf("# t-test: Welch (unequal variances), two-sided; p_mw_less: one-sided Mann-Whitney, A < B\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Behaviour evolution and immune-network action selection for a simulated robot"};
  app.require_subcommand(1);

  // ltl
  auto* ltl = app.add_subcommand("ltl", "evolve behaviour sets and write a seed file");
  std::string ltl_world, pop = "multi:5x10", antigens = "8", profile = "table2", criteria = "world1", out,
                         noise = "on";
  std::uint64_t seed = 1;
  double epsilon = ga::kDefaultMutationRate;
  int threads = 0;
  bool quiet = false;
  ltl->add_option("--world", ltl_world, "LTL world file")->required()->check(CLI::ExistingFile);
  ltl->add_option("--pop", pop, "single:<x> or multi:5x<n>")->capture_default_str();
  ltl->add_option("--antigens", antigens, "8 or 9")->check(CLI::IsMember({"8", "9"}))->capture_default_str();
  ltl->add_option("--profile", profile, "attribute limits")->check(CLI::IsMember({"table2", "slow"}))->capture_default_str();
  ltl->add_option("--criteria", criteria, "stopping rules")
      ->check(CLI::IsMember({"world1", "world2", "rerun"}))
      ->capture_default_str();
  ltl->add_option("--seed", seed, "random seed")->capture_default_str();
  ltl->add_option("--out", out, "seed file to write (stdout when omitted)");
  ltl->add_option("--noise", noise, "IR noise")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  ltl->add_option("--epsilon", epsilon, "mutation rate")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  ltl->add_option("--threads", threads, "worker threads, 0 = all cores")->capture_default_str();
  ltl->add_flag("--quiet", quiet, "no per-generation progress");

  // stl
  auto* stl = app.add_subcommand("stl", "run one short-term trial and print a CSV row");
  std::string scheme = "sie", stl_world, seeds_path, stl_antigens = "8", stl_profile = "slow", stl_noise = "on";
  std::uint64_t stl_seed = 1, set_seed = 1;
  int dump_every = 0;
  bool hdc_track = false;
  stl->add_option("--scheme", scheme, "sie|srl|uie|url|hdc")
      ->check(CLI::IsMember({"sie", "srl", "uie", "url", "hdc"}, CLI::ignore_case))
      ->capture_default_str();
  stl->add_option("--world", stl_world, "STL world file")->required()->check(CLI::ExistingFile);
  stl->add_option("--seeds", seeds_path, "seed file (seeded schemes)")->check(CLI::ExistingFile);
  stl->add_option("--antigens", stl_antigens, "8 or 9")->check(CLI::IsMember({"8", "9"}))->capture_default_str();
  stl->add_option("--seed", stl_seed, "trial seed")->capture_default_str();
  stl->add_option("--set-seed", set_seed, "seed of the random behaviour set (unseeded schemes)")->capture_default_str();
  stl->add_option("--profile", stl_profile, "limits for random behaviours")
      ->check(CLI::IsMember({"table2", "slow"}))
      ->capture_default_str();
  stl->add_option("--noise", stl_noise, "IR noise")->check(CLI::IsMember({"on", "off"}))->capture_default_str();
  stl->add_option("--dump-state", dump_every, "print AIS matrices to stderr every k ticks");
  stl->add_flag("--hdc-track", hdc_track, "let the baseline steer toward a visible target");

  // batch
  auto* batch = app.add_subcommand("batch", "run a plan of trials and write CSV");
  std::string plan_path, batch_out;
  int batch_threads = 0;
  batch->add_option("--plan", plan_path, "plan file")->required()->check(CLI::ExistingFile);
  batch->add_option("--out", batch_out, "CSV file (stdout when omitted)");
  batch->add_option("--threads", batch_threads, "worker threads, 0 = all cores")->capture_default_str();

  // stats
  auto* st = app.add_subcommand("stats", "summarise a results CSV");
  std::string csv_in, compare_pair, metric = "sq";
  st->add_option("--in", csv_in, "results CSV")->check(CLI::ExistingFile);
  st->add_option("--compare", compare_pair, "two schemes, e.g. SIE,SRL");
  st->add_option("--metric", metric, "sq, st or sc")->check(CLI::IsMember({"sq", "st", "sc"}))->capture_default_str();
  auto* div = st->add_subcommand("diversity", "type and speed diversity of a seed file");
  std::string div_seeds;
  div->add_option("--seeds", div_seeds, "seed file")->required()->check(CLI::ExistingFile);
  auto* sigma = st->add_subcommand("sigma", "Monte-Carlo expected points of a random group");
  int domain = 6;
  long samples = 1000000;
  std::uint64_t sigma_seed = 1;
  sigma->add_option("--domain", domain, "number of distinct values")->capture_default_str();
  sigma->add_option("--samples", samples, "groups to draw")->capture_default_str();
  sigma->add_option("--seed", sigma_seed, "random seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    if (ltl->parsed()) {
      return run_ltl_command(ltl_world, pop, antigens, profile, criteria, seed, out, noise, epsilon, threads, quiet);
    }
    if (stl->parsed()) {
      harness::SchemeConfig cfg;
      cfg.scheme = harness::parse_scheme(scheme);
      cfg.mode = perception::parse_mode(stl_antigens);
      cfg.limits = behaviors::LimitProfile::named(stl_profile);
      cfg.behaviour_set_seed = set_seed;
      cfg.ir_noise = on_off(stl_noise);
      cfg.hdc_track = hdc_track;
      cfg.dump_every = dump_every;
      cfg.dump = &std::cerr;
      if (harness::is_seeded(cfg.scheme)) {
        if (seeds_path.empty()) throw std::invalid_argument("seeded schemes need --seeds");
        cfg.seeds = std::make_shared<const ga::SeedFile>(ga::load_seed_file(seeds_path));
      }
      const auto rec = harness::run_stl_trial(cfg, sim::load_world_shared(stl_world), stl_seed);
      harness::write_csv(std::cout, {rec});
      return 0;
    }
    if (batch->parsed()) {
      const auto rows = harness::run_batch(harness::load_plan(plan_path), batch_threads);
      if (batch_out.empty() || batch_out == "-") {
        harness::write_csv(std::cout, rows);
      } else {
        std::ofstream f(batch_out, std::ios::binary);
        if (!f) throw std::runtime_error("cannot write " + batch_out);
        harness::write_csv(f, rows);
      }
      return 0;
    }
    if (div->parsed()) {
      const auto report = diversity::diversity_report(ga::load_seed_file(div_seeds));
      std::printf("Z_U %.1f%%\nZ_S %.1f%%\n", 100.0 * report.z_u, 100.0 * report.z_s);
      return 0;
    }
    if (sigma->parsed()) {
      Rng rng(sigma_seed);
      const auto est = diversity::expected_sigma(domain, samples, rng);
      std::printf("sigma %.4f (exact %.4f, %ld samples)\n", est.sigma, diversity::exact_sigma(domain), est.samples);
      return 0;
    }
    if (st->parsed()) {
      if (csv_in.empty()) throw std::invalid_argument("stats needs --in <csv>");
      std::ifstream f(csv_in);
      const auto rows = harness::read_csv(f);
      if (compare_pair.empty()) print_summary(rows);
      else compare(rows, compare_pair, metric);
      return 0;
    }
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  }
  return 0;
}
