#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace kemeny {

using Score = std::int64_t;

struct Candidate {
  int index = 0;
  std::string label;
};

// A strict total order over candidates 0..n-1. order()[0] is the winner.
class Ranking {
 public:
  Ranking() = default;
  // Throws DomainError unless `order` is a permutation of [0, n).
  explicit Ranking(std::vector<int> order);

  static Ranking identity(int n);

  int size() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int at(int position) const { return order_[position]; }
  int position_of(int candidate) const { return pos_[candidate]; }
  bool prefers(int a, int b) const { return pos_[a] < pos_[b]; }

  Ranking reversed() const;

  friend bool operator==(const Ranking& a, const Ranking& b) { return a.order_ == b.order_; }
  friend auto operator<=>(const Ranking& a, const Ranking& b) { return a.order_ <=> b.order_; }

 private:
  std::vector<int> order_;
  std::vector<int> pos_;
};

struct ScoredRanking {
  Ranking ranking;
  Score score = 0;

  friend bool operator==(const ScoredRanking&, const ScoredRanking&) = default;
};

// Orders by score first, then lexicographically by candidate sequence.
inline bool score_then_lex(const ScoredRanking& a, const ScoredRanking& b) {
  if (a.score != b.score) return a.score < b.score;
  return a.ranking < b.ranking;
}

// Candidates plus a non-empty multiset of complete votes.
class Election {
 public:
  Election() = default;
  // Validates every vote against the candidate count; throws DimensionError
  // or DomainError on malformed input.
  Election(std::vector<Candidate> candidates, std::vector<Ranking> votes);

  // Candidates labelled "0", "1", ...
  static Election unlabeled(int n, std::vector<Ranking> votes);

  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_votes() const { return static_cast<int>(votes_.size()); }
  const std::vector<Candidate>& candidates() const { return candidates_; }
  const std::vector<Ranking>& votes() const { return votes_; }
  const std::string& label(int c) const { return candidates_[c].label; }

 private:
  std::vector<Candidate> candidates_;
  std::vector<Ranking> votes_;
};

// w(i, j) = number of votes ranking j strictly better than i, i.e. the cost
// of placing i before j in an aggregate ranking.
class PairwiseWeights {
 public:
  PairwiseWeights() = default;
  PairwiseWeights(int n, int num_votes, std::vector<Score> flat);

  int size() const { return n_; }
  int num_votes() const { return num_votes_; }
  Score operator()(int i, int j) const { return w_[static_cast<std::size_t>(i) * n_ + j]; }
  std::span<const Score> row(int i) const {
    return {w_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const PairwiseWeights&, const PairwiseWeights&) = default;

 private:
  int n_ = 0;
  int num_votes_ = 0;
  std::vector<Score> w_;
};

// Discordant candidate pairs, O(n log n) by merge counting.
Score kendall_tau(const Ranking& a, const Ranking& b);

Score kemeny_score(const Ranking& r, const Election& e);

// Parallel over rows of the matrix.
PairwiseWeights pairwise_weights(const Election& e);

Score kemeny_score_from_weights(const Ranking& r, const PairwiseWeights& w);

// Sum of KT over ordered vote pairs divided by |C|(|C|-1).
double average_kt(const Election& e);

namespace serial {
// Vote-by-vote accumulation; reference for the parallel kernel.
PairwiseWeights pairwise_weights(const Election& e);
}  // namespace serial

}  // namespace kemeny
