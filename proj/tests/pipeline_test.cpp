#include "kemeny/pipeline.hpp"

#include <gtest/gtest.h>

#include <random>

#include "kemeny/errors.hpp"
#include "kemeny/exact.hpp"
#include "kemeny/experiments.hpp"
#include "kemeny/io.hpp"
#include "oracles.hpp"

namespace kemeny {
namespace {

using oracle::from_strings;

const SolverKind kAllSolvers[] = {SolverKind::SimulatedAnnealing, SolverKind::SteepestDescent,
                                  SolverKind::LocalSearch,        SolverKind::Borda,
                                  SolverKind::QuickSort,          SolverKind::Exact};

TEST(NamesTest, RoundTrip) {
  for (auto s : kAllSolvers) EXPECT_EQ(parse_solver(to_string(s)), s);
  for (auto k : {Kernelization::None, Kernelization::Candidates, Kernelization::Condorcet}) {
    EXPECT_EQ(parse_kernelization(to_string(k)), k);
  }
  EXPECT_THROW(parse_solver("qpu"), DomainError);
  EXPECT_THROW(parse_kernelization("3/4"), DomainError);
}

TEST(SolveTest, UnanimousWithCondorcetNeedsNoSampling) {
  const auto e = from_strings({"dbca", "dbca", "dbca"});
  for (auto s : kAllSolvers) {
    SolveConfig cfg;
    cfg.solver = s;
    cfg.kernelization = Kernelization::Condorcet;
    cfg.max_answers = 5;
    cfg.num_reads = 10;
    const auto out = solve(e, cfg);
    ASSERT_EQ(out.solutions.solutions.size(), 1u);
    EXPECT_EQ(out.solutions.solutions[0].score, 0);
    EXPECT_EQ(out.solutions.solutions[0].ranking, oracle::rank("dbca"));
    EXPECT_EQ(out.decomposition.num_subinstances(), 0);
    EXPECT_EQ(out.row.sample_time_s, 0.0);
    EXPECT_EQ(out.row.num_blocks, 4);
    EXPECT_EQ(out.row.delta_percent, 0.0);
  }
}

TEST(SolveTest, ExactOptimumIndependentOfKernelization) {
  std::mt19937_64 gen(81);
  for (int t = 0; t < 40; ++t) {
    const auto e = oracle::grouped_election(3 + static_cast<int>(gen() % 6), 2 + static_cast<int>(gen() % 7), 0.2, gen);
    const Score opt = oracle::brute_force(e).optimum;
    for (auto k : {Kernelization::None, Kernelization::Candidates, Kernelization::Condorcet}) {
      SolveConfig cfg;
      cfg.solver = SolverKind::Exact;
      cfg.kernelization = k;
      const auto out = solve(e, cfg);
      ASSERT_EQ(out.row.best_score, opt);
      ASSERT_EQ(out.row.optimal_score, opt);
    }
  }
}

TEST(SolveTest, RowFields) {
  const auto e = generate_random(6, 6, 3);
  SolveConfig cfg;
  cfg.solver = SolverKind::LocalSearch;
  cfg.num_reads = 30;
  cfg.max_answers = 4;
  cfg.seed = 9;
  cfg.instance_id = "r6";
  const auto out = solve(e, cfg);
  const auto& r = out.row;
  EXPECT_EQ(r.instance_id, "r6");
  EXPECT_EQ(r.n_candidates, 6);
  EXPECT_EQ(r.n_votes, 6);
  EXPECT_EQ(r.solver, "local-search");
  EXPECT_EQ(r.kernelization, "none");
  EXPECT_EQ(r.num_reads, 30);
  EXPECT_EQ(r.num_blocks, 1);
  EXPECT_EQ(r.optimal_score, oracle::brute_force(e).optimum);
  EXPECT_EQ(r.num_distinct, static_cast<int>(out.solutions.solutions.size()));
  EXPECT_LE(r.num_distinct, 4);
  EXPECT_EQ(r.best_score, out.solutions.solutions.front().score);
  if (r.num_distinct >= 2) {
    EXPECT_EQ(r.min_kt, min_pairwise_kt(out.solutions));
  } else {
    EXPECT_FALSE(r.min_kt);
  }
  EXPECT_GE(*r.delta_percent, 0.0);
}

TEST(SolveTest, SamplersReturnValidScoredRankings) {
  const auto e = generate_random(5, 7, 11);
  const auto w = pairwise_weights(e);
  for (auto s : {SolverKind::SimulatedAnnealing, SolverKind::SteepestDescent}) {
    SolveConfig cfg;
    cfg.solver = s;
    cfg.num_reads = 200;
    cfg.max_answers = 10;
    cfg.sweeps = 100;
    cfg.seed = 4;
    const auto out = solve(e, cfg);
    for (const auto& sol : out.solutions.solutions) {
      EXPECT_EQ(sol.score, kemeny_score(sol.ranking, e));
    }
    EXPECT_GE(out.row.sample_time_s, 0.0);
  }
}

TEST(SolveTest, SingleSolutionSolversWarn) {
  const auto e = generate_random(4, 4, 1);
  for (auto s : {SolverKind::Borda, SolverKind::QuickSort, SolverKind::Exact}) {
    SolveConfig cfg;
    cfg.solver = s;
    cfg.max_answers = 10;
    const auto out = solve(e, cfg);
    EXPECT_EQ(out.solutions.solutions.size(), 1u);
    ASSERT_FALSE(out.warnings.empty());
  }
  SolveConfig quiet;
  quiet.solver = SolverKind::Borda;
  EXPECT_TRUE(solve(e, quiet).warnings.empty());
}

TEST(SolveTest, DeterministicForFixedSeed) {
  const auto e = parse_election(dataset_files(KEMENY_DATA_DIR "/seasons").front()).election;
  SolveConfig cfg;
  cfg.solver = SolverKind::SteepestDescent;
  cfg.kernelization = Kernelization::Condorcet;
  cfg.num_reads = 300;
  cfg.max_answers = 10;
  cfg.seed = 12;
  cfg.workers = 1;
  const auto a = solve(e, cfg);
  cfg.workers = 8;
  const auto b = solve(e, cfg);
  EXPECT_EQ(a.solutions.solutions, b.solutions.solutions);
}

TEST(SolveTest, CapacityErrorPropagates) {
  SolveConfig cfg;
  cfg.solver = SolverKind::Exact;
  EXPECT_THROW(solve(generate_random(25, 3, 1), cfg), CapacityError);
  cfg.num_reads = 0;
  EXPECT_THROW(solve(generate_random(3, 3, 1), cfg), DomainError);
}

TEST(ExperimentSummaryTest, MeanFactorAndTime) {
  std::vector<ExperimentRow> rows(3);
  const Score best[] = {10, 12, 5};
  const Score opt[] = {10, 10, 5};
  for (int i = 0; i < 3; ++i) {
    rows[i].solver = "steepest-descent";
    rows[i].num_reads = 100;
    rows[i].best_score = best[i];
    rows[i].optimal_score = opt[i];
    rows[i].sample_time_s = i;
  }
  const auto q = summarize_quality(rows);
  ASSERT_EQ(q.size(), 1u);
  EXPECT_DOUBLE_EQ(q[0].mean_factor, (1.0 + 1.2 + 1.0) / 3);
  EXPECT_DOUBLE_EQ(q[0].mean_sample_time_s, 1.0);
}

}  // namespace
}  // namespace kemeny
