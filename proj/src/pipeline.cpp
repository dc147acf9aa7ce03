#include "kemeny/pipeline.hpp"

#include <chrono>
#include <string>

#include "kemeny/errors.hpp"
#include "kemeny/exact.hpp"
#include "kemeny/heuristics.hpp"
#include "kemeny/qubo.hpp"
#include "kemeny/rng.hpp"
#include "kemeny/samplers.hpp"

namespace kemeny {

namespace {

constexpr std::pair<SolverKind, std::string_view> kSolverNames[] = {
    {SolverKind::SimulatedAnnealing, "simulated-annealing"},
    {SolverKind::SteepestDescent, "steepest-descent"},
    {SolverKind::LocalSearch, "local-search"},
    {SolverKind::Borda, "borda"},
    {SolverKind::QuickSort, "quicksort"},
    {SolverKind::Exact, "exact"},
};

constexpr std::pair<Kernelization, std::string_view> kKernelNames[] = {
    {Kernelization::None, "none"},
    {Kernelization::Candidates, "candidates"},
    {Kernelization::Condorcet, "condorcet"},
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct BlockSolution {
  std::vector<ScoredRanking> rankings;
  double seconds = 0.0;
  int invalid = 0;
};

BlockSolution solve_block(const Election& block, const SolveConfig& cfg, std::uint64_t seed) {
  BlockSolution out;
  const int k = is_single_solution(cfg.solver) ? 1 : cfg.max_answers;
  switch (cfg.solver) {
    case SolverKind::SimulatedAnnealing:
    case SolverKind::SteepestDescent: {
      const auto model = build_qubo(block);
      SamplerParams p;
      p.num_reads = cfg.num_reads;
      p.max_answers = k;
      p.seed = seed;
      p.sweeps = cfg.sweeps;
      p.workers = cfg.workers;
      const auto set = cfg.solver == SolverKind::SimulatedAnnealing ? simulated_annealing_sample(model, p)
                                                                   : steepest_descent_sample(model, p);
      out.seconds = set.sample_time_s;
      for (const auto& s : set.entries) {
        auto decoded = decode(s.assignment, block.num_candidates());
        if (auto* r = std::get_if<Ranking>(&decoded)) {
          out.rankings.push_back({std::move(*r), s.energy});
        } else {
          ++out.invalid;
        }
      }
      break;
    }
    case SolverKind::LocalSearch: {
      const auto t0 = Clock::now();
      for (auto& r : local_search_multi(block, cfg.num_reads, k, seed, cfg.workers)) {
        out.rankings.push_back({std::move(r.ranking), r.score});
      }
      out.seconds = seconds_since(t0);
      break;
    }
    case SolverKind::Borda: {
      const auto t0 = Clock::now();
      auto r = borda(block);
      out.seconds = seconds_since(t0);
      out.rankings.push_back({std::move(r.ranking), r.score});
      break;
    }
    case SolverKind::QuickSort: {
      const auto t0 = Clock::now();
      auto r = quicksort_rank(block, seed);
      out.seconds = seconds_since(t0);
      out.rankings.push_back({std::move(r.ranking), r.score});
      break;
    }
    case SolverKind::Exact: {
      const auto t0 = Clock::now();
      auto r = exact_kemeny(block);
      out.seconds = seconds_since(t0);
      out.rankings.push_back({std::move(r.witness), r.optimal_score});
      break;
    }
  }
  if (out.rankings.empty()) {
    throw SolverError(std::string(to_string(cfg.solver)) + " returned no valid ranking for a block of " +
                      std::to_string(block.num_candidates()) + " candidates");
  }
  return out;
}

}  // namespace

std::string_view to_string(SolverKind s) {
  for (const auto& [kind, name] : kSolverNames) {
    if (kind == s) return name;
  }
  return "?";
}

std::string_view to_string(Kernelization k) {
  for (const auto& [kind, name] : kKernelNames) {
    if (kind == k) return name;
  }
  return "?";
}

SolverKind parse_solver(std::string_view name) {
  for (const auto& [kind, n] : kSolverNames) {
    if (n == name) return kind;
  }
  throw DomainError("unknown solver '" + std::string(name) + "'");
}

Kernelization parse_kernelization(std::string_view name) {
  for (const auto& [kind, n] : kKernelNames) {
    if (n == name) return kind;
  }
  throw DomainError("unknown kernelization '" + std::string(name) + "'");
}

bool is_single_solution(SolverKind s) {
  return s == SolverKind::Borda || s == SolverKind::QuickSort || s == SolverKind::Exact;
}

Decomposition kernelize(const Election& e, Kernelization k) {
  switch (k) {
    case Kernelization::Candidates:
      return majority_rule_split(e);
    case Kernelization::Condorcet:
      return condorcet_split(e);
    case Kernelization::None:
      break;
  }
  return no_split(e);
}

SolveOutcome solve(const Election& e, const SolveConfig& cfg) {
  if (cfg.num_reads < 1) throw DomainError("num_reads must be positive");
  if (cfg.max_answers < 1) throw DomainError("max_answers must be positive");
  SolveOutcome out;
  if (is_single_solution(cfg.solver) && cfg.max_answers > 1) {
    out.warnings.push_back(std::string(to_string(cfg.solver)) +
                           " computes a single solution; max_answers ignored");
  }
  const int k = is_single_solution(cfg.solver) ? 1 : cfg.max_answers;

  const auto t_kernel = Clock::now();
  out.decomposition = kernelize(e, cfg.kernelization);
  const double kernel_time = seconds_since(t_kernel);

  std::vector<std::vector<ScoredRanking>> lists;
  double sample_time = 0.0;
  std::uint64_t block_index = 0;
  for (const auto& b : out.decomposition.blocks) {
    if (b.kind != BlockKind::SubInstance) continue;
    const std::uint64_t seed = block_index == 0 ? cfg.seed : rng::splitmix64(cfg.seed ^ rng::splitmix64(block_index));
    ++block_index;
    auto sol = solve_block(b.election, cfg, seed);
    sample_time += sol.seconds;
    out.invalid_samples_dropped += sol.invalid;
    lists.push_back(std::move(sol.rankings));
  }
  if (out.invalid_samples_dropped > 0) {
    out.warnings.push_back("dropped " + std::to_string(out.invalid_samples_dropped) + " invalid samples");
  }

  const auto w = pairwise_weights(e);
  out.solutions = top_k_distinct(recombine(out.decomposition, lists, k), k, w);

  auto& row = out.row;
  row.instance_id = cfg.instance_id;
  row.n_candidates = e.num_candidates();
  row.n_votes = e.num_votes();
  row.solver = to_string(cfg.solver);
  row.kernelization = to_string(cfg.kernelization);
  row.num_reads = cfg.num_reads;
  row.best_score = out.solutions.solutions.front().score;
  if (cfg.known_optimum) {
    row.optimal_score = cfg.known_optimum;
  } else if (cfg.compute_optimum && e.num_candidates() <= kMaxExactCandidates) {
    row.optimal_score = exact_kemeny(w).optimal_score;
  }
  if (row.optimal_score) row.delta_percent = quality_delta_percent(out.solutions, *row.optimal_score);
  row.num_distinct = static_cast<int>(out.solutions.solutions.size());
  if (row.num_distinct >= 2) {
    row.min_kt = min_pairwise_kt(out.solutions);
    row.avg_kt = avg_pairwise_kt(out.solutions);
  }
  row.sample_time_s = sample_time;
  row.kernel_time_s = kernel_time;
  row.num_blocks = static_cast<int>(out.decomposition.blocks.size());
  return out;
}

}  // namespace kemeny
