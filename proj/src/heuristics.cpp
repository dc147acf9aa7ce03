#include "kemeny/heuristics.hpp"

#include <algorithm>
#include <numeric>

#include "kemeny/errors.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

Score reinsertion_delta(const Ranking& r, const PairwiseWeights& w, int from, int to) {
  const int c = r.at(from);
  Score delta = 0;
  if (to > from) {
    for (int k = from + 1; k <= to; ++k) delta += w(r.at(k), c) - w(c, r.at(k));
  } else {
    for (int k = to; k < from; ++k) delta += w(c, r.at(k)) - w(r.at(k), c);
  }
  return delta;
}

namespace {

Ranking random_permutation(int n, std::mt19937_64& gen) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  rng::shuffle(std::span<int>(order), gen);
  return Ranking(std::move(order));
}

}  // namespace

HeuristicResult local_search(const PairwiseWeights& w, std::uint64_t seed, const std::optional<Ranking>& start) {
  const int n = w.size();
  auto gen = rng::stream(seed, 0);
  std::vector<int> order = start ? start->order() : random_permutation(n, gen).order();
  if (static_cast<int>(order.size()) != n) throw DimensionError("start ranking has wrong length");
  Score score = kemeny_score_from_weights(Ranking(order), w);

  std::vector<int> visit(n);
  std::iota(visit.begin(), visit.end(), 0);
  std::vector<Score> gain(n);
  int passes = 0;
  bool moved = true;
  while (moved) {
    moved = false;
    ++passes;
    rng::shuffle(std::span<int>(visit), gen);
    for (int from : visit) {
      const int c = order[from];
      // Cumulative deltas outward from `from`, O(n) for all targets.
      gain[from] = 0;
      for (int t = from + 1; t < n; ++t) gain[t] = gain[t - 1] + w(order[t], c) - w(c, order[t]);
      for (int t = from - 1; t >= 0; --t) gain[t] = gain[t + 1] + w(c, order[t]) - w(order[t], c);
      int best = from;
      Score best_delta = 0;
      for (int t = 0; t < n; ++t) {
        if (gain[t] < best_delta) {
          best_delta = gain[t];
          best = t;
        }
      }
      if (best == from) continue;
      if (best > from) {
        std::rotate(order.begin() + from, order.begin() + from + 1, order.begin() + best + 1);
      } else {
        std::rotate(order.begin() + best, order.begin() + from, order.begin() + from + 1);
      }
      score += best_delta;
      moved = true;
    }
  }
  return {Ranking(std::move(order)), score, passes};
}

HeuristicResult local_search(const Election& e, std::uint64_t seed, const std::optional<Ranking>& start) {
  return local_search(pairwise_weights(e), seed, start);
}

std::vector<HeuristicResult> local_search_multi(const Election& e, int runs, int k, std::uint64_t seed,
                                                int workers) {
  if (runs < 1) throw DomainError("local search needs at least one run");
  if (k < 1) throw DomainError("k must be positive");
  const auto w = pairwise_weights(e);
  std::vector<HeuristicResult> all(runs);
  auto body = [&](int r) { all[r] = local_search(w, rng::splitmix64(seed ^ rng::splitmix64(r))); };
  if (workers == 1) {
    for (int r = 0; r < runs; ++r) body(r);
  } else if (workers > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(workers)
    for (int r = 0; r < runs; ++r) body(r);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (int r = 0; r < runs; ++r) body(r);
  }
  std::sort(all.begin(), all.end(), [](const HeuristicResult& a, const HeuristicResult& b) {
    if (a.score != b.score) return a.score < b.score;
    if (a.ranking != b.ranking) return a.ranking < b.ranking;
    return a.passes < b.passes;
  });
  std::vector<HeuristicResult> out;
  for (auto& r : all) {
    if (!out.empty() && out.back().ranking == r.ranking) continue;
    out.push_back(std::move(r));
    if (static_cast<int>(out.size()) == k) break;
  }
  return out;
}

std::vector<Score> borda_losses(const PairwiseWeights& w) {
  std::vector<Score> losses(w.size(), 0);
  for (int i = 0; i < w.size(); ++i) {
    for (Score x : w.row(i)) losses[i] += x;
  }
  return losses;
}

HeuristicResult borda(const Election& e) {
  const auto w = pairwise_weights(e);
  const int n = w.size();
  const auto losses = borda_losses(w);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return losses[a] < losses[b]; });
  Ranking r(std::move(order));
  const Score s = kemeny_score_from_weights(r, w);
  return {std::move(r), s, 0};
}

namespace {

void quicksort(std::vector<int>& items, const PairwiseWeights& w, std::mt19937_64& gen) {
  if (items.size() < 2) return;
  const int pivot = items[rng::below(gen, items.size())];
  auto before = [&](int a, int b) { return w(a, b) < w(b, a) || (w(a, b) == w(b, a) && a < b); };
  std::vector<int> left, right;
  for (int c : items) {
    if (c == pivot) continue;
    (before(c, pivot) ? left : right).push_back(c);
  }
  quicksort(left, w, gen);
  quicksort(right, w, gen);
  items = std::move(left);
  items.push_back(pivot);
  items.insert(items.end(), right.begin(), right.end());
}

}  // namespace

HeuristicResult quicksort_rank(const Election& e, std::uint64_t seed) {
  const auto w = pairwise_weights(e);
  std::vector<int> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  auto gen = rng::stream(seed, 0);
  quicksort(order, w, gen);
  Ranking r(std::move(order));
  const Score s = kemeny_score_from_weights(r, w);
  return {std::move(r), s, 0};
}

}  // namespace kemeny
