#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "kemeny/io.hpp"
#include "kemeny/pipeline.hpp"

namespace kemeny {

using ProgressFn = std::function<void(const ExperimentRow&)>;

// Runtime scaling on random instances with as many votes as candidates.
// Every solver runs with default parameters (one read / one run).
struct Experiment1Config {
  std::vector<int> sizes = {3, 4, 5, 10, 20, 50};
  int instances_per_size = 10;
  std::vector<SolverKind> solvers = {SolverKind::SimulatedAnnealing, SolverKind::SteepestDescent,
                                     SolverKind::LocalSearch, SolverKind::Borda, SolverKind::QuickSort};
  std::uint64_t seed = 1;
  int sweeps = 1000;
  int workers = 0;
};

// Solution quality on random n = 20 instances along a num_reads ladder.
struct Experiment2Config {
  int n = 20;
  int instances = 10;
  std::vector<int> reads_ladder = {1, 10, 100, 1000, 10000};
  std::vector<SolverKind> ladder_solvers = {SolverKind::SimulatedAnnealing, SolverKind::SteepestDescent};
  std::vector<SolverKind> single_solvers = {SolverKind::LocalSearch, SolverKind::Borda, SolverKind::QuickSort};
  std::uint64_t seed = 2;
  int sweeps = 1000;
  int workers = 0;
};

// Diversity and preprocessing on a directory of `list` files.
struct Experiment3Config {
  std::filesystem::path dataset_dir;
  std::vector<Kernelization> modes = {Kernelization::None, Kernelization::Condorcet};
  int annealing_reads = 10000;
  int local_search_runs = 50;
  int k = 10;
  std::uint64_t seed = 3;
  int sweeps = 1000;
  int workers = 0;
};

struct QualityPoint {
  std::string solver;
  int num_reads = 0;
  double mean_factor = 0.0;  // best / optimal
  double mean_sample_time_s = 0.0;
};

std::vector<ExperimentRow> run_experiment_1(const Experiment1Config& cfg, const ProgressFn& progress = {});
std::vector<ExperimentRow> run_experiment_2(const Experiment2Config& cfg, const ProgressFn& progress = {});
std::vector<ExperimentRow> run_experiment_3(const Experiment3Config& cfg, const ProgressFn& progress = {});

// Per (solver, num_reads) mean quality factor over rows with an optimum.
std::vector<QualityPoint> summarize_quality(const std::vector<ExperimentRow>& rows);

// `list` files in a directory, sorted by name.
std::vector<std::filesystem::path> dataset_files(const std::filesystem::path& dir);

}  // namespace kemeny
