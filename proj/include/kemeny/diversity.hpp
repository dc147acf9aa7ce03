#pragma once

#include <optional>
#include <vector>

#include "kemeny/election.hpp"

namespace kemeny {

struct DiverseSet {
  std::vector<ScoredRanking> solutions;  // distinct, ascending (score, lex)
  int k_requested = 0;
};

// Deduplicates and keeps the k best. Every score is re-verified against
// `w`; a mismatch raises IntegrityError.
DiverseSet top_k_distinct(std::vector<ScoredRanking> candidates, int k, const PairwiseWeights& w);

// Both throw UndefinedMetricError for fewer than two solutions.
Score min_pairwise_kt(const DiverseSet& s);
double avg_pairwise_kt(const DiverseSet& s);

// 100 * (best - optimal) / optimal. Absent when optimal is 0 and best is
// not; IntegrityError when best < optimal.
std::optional<double> quality_delta_percent(const DiverseSet& s, Score optimal_score);

}  // namespace kemeny
