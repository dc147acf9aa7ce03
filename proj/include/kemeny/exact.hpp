#pragma once

#include <optional>
#include <vector>

#include "kemeny/election.hpp"

namespace kemeny {

inline constexpr int kMaxExactCandidates = 24;
inline constexpr int kMaxEnumerationCandidates = 8;

struct ExactResult {
  Score optimal_score = 0;
  Ranking witness;
  std::optional<std::vector<Ranking>> all_optima;  // enumeration only
  bool truncated = false;
};

// Subset dynamic program, layers of equal popcount in parallel. The witness
// is the lexicographically smallest optimal ranking. n <= 24.
ExactResult exact_kemeny(const Election& e);
ExactResult exact_kemeny(const PairwiseWeights& w);

// Brute force over all n! rankings, n <= 8. At most `limit` optima are
// kept, in lexicographic order.
ExactResult enumerate_optima(const Election& e, int limit);

namespace serial {
// Same recurrence visited in plain numeric subset order.
Score exact_kemeny_score(const PairwiseWeights& w);
}  // namespace serial

}  // namespace kemeny
