#include "kemeny/diversity.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "kemeny/errors.hpp"

namespace kemeny {

DiverseSet top_k_distinct(std::vector<ScoredRanking> candidates, int k, const PairwiseWeights& w) {
  if (k < 1) throw DomainError("k must be positive");
  for (const auto& c : candidates) {
    const Score actual = kemeny_score_from_weights(c.ranking, w);
    if (actual != c.score) {
      throw IntegrityError("stored score " + std::to_string(c.score) + " differs from recomputed " +
                           std::to_string(actual));
    }
  }
  std::sort(candidates.begin(), candidates.end(), score_then_lex);
  candidates.erase(std::unique(candidates.begin(), candidates.end(),
                               [](const auto& a, const auto& b) { return a.ranking == b.ranking; }),
                   candidates.end());
  if (static_cast<int>(candidates.size()) > k) candidates.resize(k);
  return {std::move(candidates), k};
}

namespace {

void require_pairs(const DiverseSet& s) {
  if (s.solutions.size() < 2) throw UndefinedMetricError("pairwise KT needs at least two solutions");
}

}  // namespace

Score min_pairwise_kt(const DiverseSet& s) {
  require_pairs(s);
  Score best = std::numeric_limits<Score>::max();
  for (std::size_t i = 0; i < s.solutions.size(); ++i) {
    for (std::size_t j = i + 1; j < s.solutions.size(); ++j) {
      best = std::min(best, kendall_tau(s.solutions[i].ranking, s.solutions[j].ranking));
    }
  }
  return best;
}

double avg_pairwise_kt(const DiverseSet& s) {
  require_pairs(s);
  Score sum = 0;
  const std::size_t k = s.solutions.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) sum += kendall_tau(s.solutions[i].ranking, s.solutions[j].ranking);
  }
  return static_cast<double>(sum) / (static_cast<double>(k * (k - 1)) / 2.0);
}

std::optional<double> quality_delta_percent(const DiverseSet& s, Score optimal_score) {
  if (s.solutions.empty()) throw DomainError("empty solution set");
  if (optimal_score < 0) throw DomainError("optimal score must be non-negative");
  const Score best = std::min_element(s.solutions.begin(), s.solutions.end(), score_then_lex)->score;
  if (best < optimal_score) {
    throw IntegrityError("best score " + std::to_string(best) + " beats the optimum " +
                         std::to_string(optimal_score));
  }
  if (optimal_score == 0) return best == 0 ? std::optional<double>(0.0) : std::nullopt;
  return 100.0 * static_cast<double>(best - optimal_score) / static_cast<double>(optimal_score);
}

}  // namespace kemeny
