// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Tolerances are fixed below.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

#include "kemeny/exact.hpp"
#include "kemeny/experiments.hpp"
#include "kemeny/heuristics.hpp"
#include "kemeny/io.hpp"
#include "kemeny/pipeline.hpp"
#include "kemeny/qubo.hpp"
#include "kemeny/reduction.hpp"
#include "oracles.hpp"

namespace {

using namespace kemeny;
using Clock = std::chrono::steady_clock;

constexpr double kEquivalenceSeconds = 5.0;
constexpr double kExactSeconds = 30.0;
constexpr double kDescentFactor = 1.005;
constexpr double kAnnealingFactor = 1.05;
constexpr double kOptimalShare = 0.5;
constexpr double kDistinctShare = 0.9;
constexpr int kQualityReads = 10000;
// Annealing sweeps for criteria 5 and 6; the library default is 1000.
constexpr int kAcceptanceSweeps = 100;
const std::uint64_t kDiversitySeeds[] = {3, 4, 5};

const std::filesystem::path kSeasons = KEMENY_DATA_DIR "/seasons";

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

int failures = 0;

void report(int id, const char* name, bool pass, const std::string& detail) {
  std::printf("criterion %d [%s] %s: %s\n", id, pass ? "PASS" : "FAIL", name, detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

void qubo_equivalence() {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(101);
  int checked = 0, mismatches = 0;
  for (int t = 0; t < 20; ++t) {
    const auto e = oracle::random_election(5, 5, gen);
    const auto m = build_qubo(e);
    std::vector<int> order = {0, 1, 2, 3, 4};
    do {
      ++checked;
      const Ranking r(order);
      if (energy(m, encode(r)) != kemeny_score(r, e)) ++mismatches;
    } while (std::next_permutation(order.begin(), order.end()));
  }
  const double s = since(t0);
  report(1, "qubo-kemeny equivalence", mismatches == 0 && checked == 2400 && s < kEquivalenceSeconds,
         std::to_string(checked) + " rankings, " + std::to_string(mismatches) + " mismatches, " +
             fmt("%.3f s", s) + fmt(" (limit %.0f s)", kEquivalenceSeconds));
}

void penalty_dominance() {
  // Every election with three candidates and two votes.
  std::vector<std::vector<int>> perms;
  std::vector<int> o = {0, 1, 2};
  do perms.push_back(o);
  while (std::next_permutation(o.begin(), o.end()));
  int elections = 0, bad = 0;
  std::int64_t min_invalid = -1;
  for (const auto& a : perms) {
    for (const auto& b : perms) {
      const auto e = Election::unlabeled(3, {Ranking(a), Ranking(b)});
      const auto m = build_qubo(e);
      const Score opt = oracle::brute_force(e).optimum;
      std::int64_t best = -1;
      bool best_valid = false;
      bool ok = m.penalty() == 18;
      for (std::uint32_t mask = 0; mask < 512; ++mask) {
        Assignment x(9);
        for (int k = 0; k < 9; ++k) x[k] = (mask >> k) & 1U;
        const auto en = energy(m, x);
        const bool valid = std::holds_alternative<Ranking>(decode(x, 3));
        if (!valid) {
          if (en < 18) ok = false;
          if (min_invalid < 0 || en < min_invalid) min_invalid = en;
        }
        if (best < 0 || en < best || (en == best && valid)) {
          best = en;
          best_valid = valid;
        }
      }
      if (!ok || !best_valid || best != opt) ++bad;
      ++elections;
    }
  }
  report(2, "penalty dominance", bad == 0,
         std::to_string(elections) + " elections x 512 assignments, lowest invalid energy " +
             std::to_string(min_invalid) + " (P = 18), " + std::to_string(bad) + " violations");
}

void exact_oracle() {
  const auto t0 = Clock::now();
  std::mt19937_64 gen(103);
  int bad = 0;
  for (int t = 0; t < 20; ++t) {
    const int n = 6 + t % 3;
    const auto e = oracle::random_election(n, n, gen);
    const auto bf = oracle::brute_force(e);
    const auto r = exact_kemeny(e);
    if (r.optimal_score != bf.optimum || !bf.optima.count(r.witness.order())) ++bad;
  }
  const double s = since(t0);
  report(3, "exact-oracle equivalence", bad == 0 && s < kExactSeconds,
         "20 instances n in {6,7,8}, " + std::to_string(bad) + " mismatches, " + fmt("%.3f s", s) +
             fmt(" (limit %.0f s)", kExactSeconds));
}

std::set<std::vector<int>> recombined_optima(const Decomposition& d) {
  std::vector<std::vector<ScoredRanking>> lists;
  for (const auto& b : d.blocks) {
    if (b.kind != BlockKind::SubInstance) continue;
    const auto bf = oracle::brute_force(b.election);
    std::vector<ScoredRanking> l;
    for (const auto& opt : bf.optima) l.push_back({Ranking(opt), bf.optimum});
    lists.push_back(std::move(l));
  }
  std::set<std::vector<int>> out;
  for (const auto& s : recombine(d, lists, 1 << 20)) out.insert(s.ranking.order());
  return out;
}

void kernel_safety() {
  std::vector<Election> instances;
  std::mt19937_64 gen(104);
  for (int t = 0; t < 50; ++t) {
    const int n = 4 + t % 4;
    instances.push_back(oracle::grouped_election(n, 3 + static_cast<int>(gen() % 6), 0.15, gen));
  }
  int seasons = 0;
  for (const auto& f : dataset_files(kSeasons)) {
    const auto e = parse_election(f).election;
    std::vector<int> first(std::min(7, e.num_candidates()));
    std::iota(first.begin(), first.end(), 0);
    instances.push_back(induce_subelection(e, first).election);
    ++seasons;
  }
  int condorcet_split_count = 0, majority_fired = 0, bad = 0;
  for (const auto& e : instances) {
    const auto truth = oracle::brute_force(e).optima;
    const auto c = condorcet_split(e);
    if (c.blocks.size() > 1) ++condorcet_split_count;
    if (recombined_optima(c) != truth) ++bad;
    const auto m = majority_rule_split(e);
    if (m.blocks.size() > 1) {
      ++majority_fired;
      if (recombined_optima(m) != truth) ++bad;
    }
  }
  report(4, "kernel safety", bad == 0 && condorcet_split_count > 0 && majority_fired > 0,
         std::to_string(instances.size()) + " instances (" + std::to_string(seasons) +
             " truncated seasons), condorcet split " + std::to_string(condorcet_split_count) +
             ", majority rule fired " + std::to_string(majority_fired) + ", " + std::to_string(bad) +
             " set mismatches");
}

void quality_ladder() {
  const auto t0 = Clock::now();
  Experiment2Config cfg;
  cfg.single_solvers.clear();
  cfg.sweeps = kAcceptanceSweeps;
  const auto points = summarize_quality(run_experiment_2(cfg));
  std::map<std::string, std::vector<double>> ladder;
  for (const auto& p : points) ladder[p.solver].push_back(p.mean_factor);
  bool monotone = true;
  std::string detail;
  for (const auto& [solver, factors] : ladder) {
    detail += solver + " [";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      detail += fmt(k ? " %.4f" : "%.4f", factors[k]);
      if (k > 0 && factors[k] > factors[k - 1]) monotone = false;
    }
    detail += "] ";
  }
  const double sd = ladder["steepest-descent"].back();
  const double sa = ladder["simulated-annealing"].back();
  const bool pass = monotone && points.size() == 10 && sd <= kDescentFactor && sa <= kAnnealingFactor;
  report(5, "quality along reads ladder", pass,
         detail + fmt("limits SD %.3f", kDescentFactor) + fmt(" SA %.2f at 10^4 reads", kAnnealingFactor) +
             (monotone ? ", non-increasing" : ", NOT non-increasing") + fmt(", %.0f s", since(t0)));
}

struct ModeStats {
  double delta_sum = 0;
  int delta_n = 0;
  double min_kt_sum = 0, avg_kt_sum = 0;
  int kt_n = 0;
  int optimal = 0, distinct2 = 0, rows = 0;
};

void diversity_behaviour() {
  const auto t0 = Clock::now();
  // stats[solver][mode]
  std::map<std::string, std::map<std::string, ModeStats>> stats;
  for (std::uint64_t seed : kDiversitySeeds) {
    Experiment3Config cfg;
    cfg.dataset_dir = kSeasons;
    cfg.seed = seed;
    cfg.annealing_reads = kQualityReads;
    cfg.sweeps = kAcceptanceSweeps;
    for (const auto& r : run_experiment_3(cfg)) {
      auto& s = stats[r.solver][r.kernelization];
      ++s.rows;
      if (r.delta_percent) {
        s.delta_sum += *r.delta_percent;
        ++s.delta_n;
        if (*r.delta_percent == 0.0) ++s.optimal;
      }
      if (r.min_kt) {
        s.min_kt_sum += static_cast<double>(*r.min_kt);
        s.avg_kt_sum += *r.avg_kt;
        ++s.kt_n;
      }
      if (r.num_distinct >= 2) ++s.distinct2;
    }
  }
  bool pass = true;
  std::string detail;
  for (auto& [solver, modes] : stats) {
    const auto& none = modes["none"];
    const auto& cond = modes["condorcet"];
    const double dn = none.delta_sum / none.delta_n, dc = cond.delta_sum / cond.delta_n;
    const double mn = none.min_kt_sum / none.kt_n, mc = cond.min_kt_sum / cond.kt_n;
    const double an = none.avg_kt_sum / none.kt_n, ac = cond.avg_kt_sum / cond.kt_n;
    pass = pass && dc <= dn && mc <= mn && ac <= an;
    detail += solver + fmt(": delta%% none %.3f", dn) + fmt(" cond %.3f", dc) + fmt(", minKT %.2f", mn) +
              fmt("->%.2f", mc) + fmt(", avgKT %.2f", an) + fmt("->%.2f", ac) + "; ";
  }
  const auto& sa = stats["simulated-annealing"]["condorcet"];
  const double share = static_cast<double>(sa.optimal) / sa.delta_n;
  pass = pass && share >= kOptimalShare;
  detail += fmt("SA+condorcet optimal on %.0f%%", 100 * share) + fmt(" (need %.0f%%)", 100 * kOptimalShare);
  report(6, "diversity with condorcet rule", pass, detail + fmt(", 3 seeds, %.0f s", since(t0)));

  for (const char* mode : {"none", "condorcet"}) {
    const auto& s = stats["simulated-annealing"][mode];
    std::printf("  info: SA %s mode, >= 2 distinct solutions on %.0f%% of runs (reference floor %.0f%%)\n", mode,
                100.0 * s.distinct2 / s.rows, 100 * kDistinctShare);
  }
}

bool reinsertion_optimal(const Ranking& r, const Election& e) {
  const Score base = oracle::kemeny_pairs(r.order(), e);
  const int n = r.size();
  for (int from = 0; from < n; ++from) {
    for (int to = 0; to < n; ++to) {
      auto o = r.order();
      const int c = o[from];
      o.erase(o.begin() + from);
      o.insert(o.begin() + to, c);
      if (oracle::kemeny_pairs(o, e) < base) return false;
    }
  }
  return true;
}

void heuristic_contracts() {
  std::mt19937_64 gen(107);
  int ls_bad = 0;
  for (int t = 0; t < 100; ++t) {
    const int n = 3 + static_cast<int>(gen() % 10);
    const auto e = oracle::random_election(n, 1 + static_cast<int>(gen() % 9), gen);
    const auto r = local_search(e, gen());
    if (r.score != oracle::kemeny_pairs(r.ranking.order(), e) || !reinsertion_optimal(r.ranking, e)) ++ls_bad;
  }
  int unanimous_bad = 0;
  for (int t = 0; t < 20; ++t) {
    const Ranking v(oracle::random_order(2 + static_cast<int>(gen() % 12), gen));
    const auto e = Election::unlabeled(v.size(), {v, v, v});
    if (borda(e).ranking != v || quicksort_rank(e, gen()).ranking != v) ++unanimous_bad;
  }
  // Condorcet-consistent: every vote is the majority order with one
  // adjacent swap at a distinct position, so each pair keeps a strict
  // majority.
  int qs_bad = 0;
  for (int t = 0; t < 20; ++t) {
    const int n = 4 + t % 9;
    const auto base = oracle::random_order(n, gen);
    std::vector<Ranking> votes = {Ranking(base), Ranking(base)};
    const int k = static_cast<int>(gen() % (n - 1));
    auto swapped = base;
    std::swap(swapped[k], swapped[k + 1]);
    votes.emplace_back(swapped);
    const auto e = Election::unlabeled(n, std::move(votes));
    if (quicksort_rank(e, gen()).ranking.order() != base) ++qs_bad;
  }
  report(7, "heuristic contracts", ls_bad + unanimous_bad + qs_bad == 0,
         "local search not 1-reinsertion-optimal " + std::to_string(ls_bad) + "/100, unanimous failures " +
             std::to_string(unanimous_bad) + "/20, quicksort majority-order failures " + std::to_string(qs_bad) +
             "/20");
}

std::string fingerprint(const SolveOutcome& o) {
  std::string s;
  for (const auto& sol : o.solutions.solutions) {
    for (int c : sol.ranking.order()) s += std::to_string(c) + ",";
    s += ":" + std::to_string(sol.score) + ";";
  }
  auto row = o.row;
  row.sample_time_s = 0;
  row.kernel_time_s = 0;
  return s + "|" + to_csv_line(row);
}

void determinism() {
  std::vector<std::pair<std::string, Election>> instances = {{"random-n9", generate_random(9, 9, 108)}};
  const auto files = dataset_files(kSeasons);
  instances.emplace_back(files.front().stem().string(), parse_election(files.front()).election);
  int runs = 0, bad = 0;
  for (const auto& [id, e] : instances) {
    for (SolverKind s : {SolverKind::SimulatedAnnealing, SolverKind::SteepestDescent, SolverKind::LocalSearch,
                         SolverKind::Borda, SolverKind::QuickSort}) {
      for (Kernelization k : {Kernelization::None, Kernelization::Condorcet}) {
        SolveConfig cfg;
        cfg.solver = s;
        cfg.kernelization = k;
        cfg.num_reads = s == SolverKind::LocalSearch ? 50 : 200;
        cfg.max_answers = 10;
        cfg.seed = 2024;
        cfg.sweeps = 100;
        cfg.instance_id = id;
        std::set<std::string> prints;
        for (int workers : {1, 1, 8, 8}) {
          cfg.workers = workers;
          prints.insert(fingerprint(solve(e, cfg)));
          ++runs;
        }
        if (prints.size() != 1) ++bad;
      }
    }
  }
  report(8, "determinism", bad == 0,
         std::to_string(runs) + " solves (2 runs x workers {1, 8}), " + std::to_string(bad) +
             " configurations with differing output");
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria = {qubo_equivalence, penalty_dominance, exact_oracle,
                                                       kernel_safety,    quality_ladder,    diversity_behaviour,
                                                       heuristic_contracts, determinism};
  for (const auto& c : criteria) {
    try {
      c();
    } catch (const std::exception& ex) {
      std::printf("criterion error: %s\n", ex.what());
      ++failures;
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
