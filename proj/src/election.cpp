#include "kemeny/election.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

#include "kemeny/errors.hpp"

namespace kemeny {

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)), pos_(order_.size(), -1) {
  const int n = size();
  for (int k = 0; k < n; ++k) {
    const int c = order_[k];
    if (c < 0 || c >= n || pos_[c] != -1) {
      throw DomainError("ranking is not a permutation of 0.." + std::to_string(n - 1));
    }
    pos_[c] = k;
  }
}

Ranking Ranking::identity(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

Ranking Ranking::reversed() const {
  return Ranking(std::vector<int>(order_.rbegin(), order_.rend()));
}

Election::Election(std::vector<Candidate> candidates, std::vector<Ranking> votes)
    : candidates_(std::move(candidates)), votes_(std::move(votes)) {
  if (votes_.empty()) throw DomainError("an election needs at least one vote");
  const int n = num_candidates();
  std::unordered_set<std::string> labels;
  for (int c = 0; c < n; ++c) {
    if (candidates_[c].index != c) throw DomainError("candidate indices must be dense");
    if (!labels.insert(candidates_[c].label).second) {
      throw DomainError("duplicate candidate label '" + candidates_[c].label + "'");
    }
  }
  for (const auto& v : votes_) {
    if (v.size() != n) throw DimensionError("vote length differs from candidate count");
  }
}

Election Election::unlabeled(int n, std::vector<Ranking> votes) {
  std::vector<Candidate> cands(n);
  for (int c = 0; c < n; ++c) cands[c] = {c, std::to_string(c)};
  return Election(std::move(cands), std::move(votes));
}

PairwiseWeights::PairwiseWeights(int n, int num_votes, std::vector<Score> flat)
    : n_(n), num_votes_(num_votes), w_(std::move(flat)) {
  if (w_.size() != static_cast<std::size_t>(n) * n) throw DimensionError("weight matrix size");
}

namespace {

Score merge_count(std::vector<int>& a, std::vector<int>& tmp, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  Score inv = merge_count(a, tmp, lo, mid) + merge_count(a, tmp, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (a[i] <= a[j]) {
      tmp[k++] = a[i++];
    } else {
      inv += static_cast<Score>(mid - i);
      tmp[k++] = a[j++];
    }
  }
  while (i < mid) tmp[k++] = a[i++];
  while (j < hi) tmp[k++] = a[j++];
  std::copy(tmp.begin() + lo, tmp.begin() + hi, a.begin() + lo);
  return inv;
}

void check_same_size(int a, int b) {
  if (a != b) {
    throw DimensionError("size mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
  }
}

}  // namespace

Score kendall_tau(const Ranking& a, const Ranking& b) {
  check_same_size(a.size(), b.size());
  // Positions in b of a's order; discordant pairs are inversions.
  std::vector<int> seq(a.size());
  for (int k = 0; k < a.size(); ++k) seq[k] = b.position_of(a.at(k));
  std::vector<int> tmp(seq.size());
  return merge_count(seq, tmp, 0, seq.size());
}

Score kemeny_score(const Ranking& r, const Election& e) {
  check_same_size(r.size(), e.num_candidates());
  Score total = 0;
  for (const auto& v : e.votes()) total += kendall_tau(r, v);
  return total;
}

PairwiseWeights pairwise_weights(const Election& e) {
  const int n = e.num_candidates();
  std::vector<Score> w(static_cast<std::size_t>(n) * n, 0);
  const auto& votes = e.votes();
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    Score* row = w.data() + static_cast<std::size_t>(i) * n;
    for (const auto& v : votes) {
      const int pi = v.position_of(i);
      for (int k = 0; k < pi; ++k) ++row[v.at(k)];
    }
  }
  return PairwiseWeights(n, e.num_votes(), std::move(w));
}

namespace serial {

PairwiseWeights pairwise_weights(const Election& e) {
  const int n = e.num_candidates();
  std::vector<Score> w(static_cast<std::size_t>(n) * n, 0);
  for (const auto& v : e.votes()) {
    for (int better = 0; better < n; ++better) {
      for (int worse = better + 1; worse < n; ++worse) {
        ++w[static_cast<std::size_t>(v.at(worse)) * n + v.at(better)];
      }
    }
  }
  return PairwiseWeights(n, e.num_votes(), std::move(w));
}

}  // namespace serial

Score kemeny_score_from_weights(const Ranking& r, const PairwiseWeights& w) {
  check_same_size(r.size(), w.size());
  Score total = 0;
  const int n = r.size();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) total += w(r.at(a), r.at(b));
  }
  return total;
}

double average_kt(const Election& e) {
  const int m = e.num_votes();
  const int n = e.num_candidates();
  if (m < 2) throw UndefinedMetricError("average KT distance needs at least two votes");
  if (n < 2) throw UndefinedMetricError("average KT distance needs at least two candidates");
  Score sum = 0;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) sum += kendall_tau(e.votes()[i], e.votes()[j]);
  }
  // Every unordered pair counted in both directions.
  return static_cast<double>(2 * sum) / (static_cast<double>(n) * (n - 1));
}

}  // namespace kemeny
