#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kemeny/diversity.hpp"
#include "kemeny/election.hpp"
#include "kemeny/io.hpp"
#include "kemeny/reduction.hpp"

namespace kemeny {

enum class SolverKind { SimulatedAnnealing, SteepestDescent, LocalSearch, Borda, QuickSort, Exact };
enum class Kernelization { None, Candidates, Condorcet };

std::string_view to_string(SolverKind s);
std::string_view to_string(Kernelization k);
// Throw DomainError on unknown names.
SolverKind parse_solver(std::string_view name);
Kernelization parse_kernelization(std::string_view name);

// Borda, QuickSort and Exact return one solution per block.
bool is_single_solution(SolverKind s);

struct SolveConfig {
  SolverKind solver = SolverKind::SimulatedAnnealing;
  Kernelization kernelization = Kernelization::None;
  int num_reads = 1;  // sampler reads, or local-search runs
  int max_answers = 1;
  std::uint64_t seed = 0;
  int sweeps = 1000;
  int workers = 0;
  bool compute_optimum = true;         // exact optimum when n <= 24
  std::optional<Score> known_optimum;  // skips the exact solve
  std::string instance_id;
};

struct SolveOutcome {
  DiverseSet solutions;
  ExperimentRow row;
  Decomposition decomposition;
  int invalid_samples_dropped = 0;
  std::vector<std::string> warnings;
};

// Kernelize, solve every sub-instance, recombine up to max_answers global
// rankings and measure them.
SolveOutcome solve(const Election& e, const SolveConfig& cfg);

Decomposition kernelize(const Election& e, Kernelization k);

}  // namespace kemeny
