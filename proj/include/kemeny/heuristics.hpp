#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kemeny/election.hpp"

namespace kemeny {

struct HeuristicResult {
  Ranking ranking;
  Score score = 0;
  int passes = 0;  // local search only
};

// Reinsertion local search: each pass visits positions in a fresh random
// order and moves the candidate found there to its best strictly improving
// position (smallest target on ties). Stops after a pass without moves.
HeuristicResult local_search(const Election& e, std::uint64_t seed,
                             const std::optional<Ranking>& start = std::nullopt);
HeuristicResult local_search(const PairwiseWeights& w, std::uint64_t seed,
                             const std::optional<Ranking>& start = std::nullopt);

// `runs` independent seeded runs; the k best
// distinct rankings by (score, lexicographic order). workers as in
// SamplerParams.
std::vector<HeuristicResult> local_search_multi(const Election& e, int runs, int k,
                                                std::uint64_t seed, int workers = 0);

// sum_j w(i, j) for every candidate i.
std::vector<Score> borda_losses(const PairwiseWeights& w);

// Candidates by ascending aggregate losses sum_j w(i, j); index breaks ties.
HeuristicResult borda(const Election& e);

// Quicksort with comparator "i before j iff w(i,j) < w(j,i)", index on
// ties, pivot drawn from the seed.
HeuristicResult quicksort_rank(const Election& e, std::uint64_t seed);

// Change in score from moving the candidate at `from` to `to`.
Score reinsertion_delta(const Ranking& r, const PairwiseWeights& w, int from, int to);

}  // namespace kemeny
