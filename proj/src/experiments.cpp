#include "kemeny/experiments.hpp"

#include <algorithm>
#include <map>

#include "kemeny/errors.hpp"
#include "kemeny/exact.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

namespace {

std::uint64_t derive(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return rng::splitmix64(seed ^ rng::splitmix64(a * 0x10001ULL + b));
}

void emit(std::vector<ExperimentRow>& rows, ExperimentRow row, const ProgressFn& progress) {
  if (progress) progress(row);
  rows.push_back(std::move(row));
}

}  // namespace

std::vector<ExperimentRow> run_experiment_1(const Experiment1Config& cfg, const ProgressFn& progress) {
  std::vector<ExperimentRow> rows;
  for (int n : cfg.sizes) {
    for (int i = 0; i < cfg.instances_per_size; ++i) {
      const auto e = generate_random(n, n, derive(cfg.seed, static_cast<std::uint64_t>(n), i));
      for (SolverKind s : cfg.solvers) {
        SolveConfig sc;
        sc.solver = s;
        sc.seed = derive(cfg.seed, 7, i);
        sc.sweeps = cfg.sweeps;
        sc.workers = cfg.workers;
        sc.compute_optimum = false;
        sc.instance_id = "random-n" + std::to_string(n) + "-" + std::to_string(i);
        emit(rows, solve(e, sc).row, progress);
      }
    }
  }
  return rows;
}

std::vector<ExperimentRow> run_experiment_2(const Experiment2Config& cfg, const ProgressFn& progress) {
  std::vector<ExperimentRow> rows;
  for (int i = 0; i < cfg.instances; ++i) {
    const auto e = generate_random(cfg.n, cfg.n, derive(cfg.seed, static_cast<std::uint64_t>(cfg.n), i));
    const Score optimum = exact_kemeny(e).optimal_score;
    SolveConfig base;
    base.known_optimum = optimum;
    base.sweeps = cfg.sweeps;
    base.workers = cfg.workers;
    base.seed = derive(cfg.seed, 11, i);
    base.instance_id = "random-n" + std::to_string(cfg.n) + "-" + std::to_string(i);
    for (SolverKind s : cfg.ladder_solvers) {
      for (int reads : cfg.reads_ladder) {
        SolveConfig sc = base;
        sc.solver = s;
        sc.num_reads = reads;
        emit(rows, solve(e, sc).row, progress);
      }
    }
    for (SolverKind s : cfg.single_solvers) {
      SolveConfig sc = base;
      sc.solver = s;
      emit(rows, solve(e, sc).row, progress);
    }
  }
  return rows;
}

std::vector<std::filesystem::path> dataset_files(const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) throw InputError("not a directory: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) throw InputError("no instance files in " + dir.string());
  return files;
}

std::vector<ExperimentRow> run_experiment_3(const Experiment3Config& cfg, const ProgressFn& progress) {
  std::vector<ExperimentRow> rows;
  std::uint64_t idx = 0;
  for (const auto& path : dataset_files(cfg.dataset_dir)) {
    const auto e = parse_election(path).election;
    std::optional<Score> optimum;
    if (e.num_candidates() <= kMaxExactCandidates) optimum = exact_kemeny(e).optimal_score;
    for (Kernelization mode : cfg.modes) {
      for (SolverKind s : {SolverKind::SimulatedAnnealing, SolverKind::LocalSearch}) {
        SolveConfig sc;
        sc.solver = s;
        sc.kernelization = mode;
        sc.num_reads = s == SolverKind::LocalSearch ? cfg.local_search_runs : cfg.annealing_reads;
        sc.max_answers = cfg.k;
        sc.seed = derive(cfg.seed, 13, idx);
        sc.sweeps = cfg.sweeps;
        sc.workers = cfg.workers;
        sc.known_optimum = optimum;
        sc.compute_optimum = false;
        sc.instance_id = path.stem().string();
        emit(rows, solve(e, sc).row, progress);
      }
    }
    ++idx;
  }
  return rows;
}

std::vector<QualityPoint> summarize_quality(const std::vector<ExperimentRow>& rows) {
  struct Acc {
    double factor = 0.0, time = 0.0;
    int count = 0;
  };
  std::map<std::pair<std::string, int>, Acc> acc;
  std::vector<std::pair<std::string, int>> order;
  for (const auto& r : rows) {
    if (!r.optimal_score || *r.optimal_score == 0) continue;
    const auto key = std::make_pair(r.solver, r.num_reads);
    if (!acc.count(key)) order.push_back(key);
    auto& a = acc[key];
    a.factor += static_cast<double>(r.best_score) / static_cast<double>(*r.optimal_score);
    a.time += r.sample_time_s;
    ++a.count;
  }
  std::vector<QualityPoint> out;
  for (const auto& key : order) {
    const auto& a = acc[key];
    out.push_back({key.first, key.second, a.factor / a.count, a.time / a.count});
  }
  return out;
}

}  // namespace kemeny
