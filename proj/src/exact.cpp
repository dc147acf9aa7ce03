#include "kemeny/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "kemeny/errors.hpp"

namespace kemeny {

namespace {

// lead_cost(c, S) = sum_{d in S} w(c, d): cost of c heading the set S.
// Split into two table lookups on the low and high halves of S.
class LeadCost {
 public:
  explicit LeadCost(const PairwiseWeights& w) : n_(w.size()), lo_bits_(n_ / 2), hi_bits_(n_ - n_ / 2) {
    lo_.assign(static_cast<std::size_t>(n_) << lo_bits_, 0);
    hi_.assign(static_cast<std::size_t>(n_) << hi_bits_, 0);
    for (int c = 0; c < n_; ++c) {
      fill(w, c, 0, lo_bits_, lo_.data() + (static_cast<std::size_t>(c) << lo_bits_));
      fill(w, c, lo_bits_, hi_bits_, hi_.data() + (static_cast<std::size_t>(c) << hi_bits_));
    }
  }

  Score operator()(int c, std::uint32_t set) const {
    const std::uint32_t lo_mask = (1u << lo_bits_) - 1;
    return lo_[(static_cast<std::size_t>(c) << lo_bits_) | (set & lo_mask)] +
           hi_[(static_cast<std::size_t>(c) << hi_bits_) | (set >> lo_bits_)];
  }

 private:
  static void fill(const PairwiseWeights& w, int c, int first, int bits, Score* table) {
    for (std::uint32_t s = 1; s < (1u << bits); ++s) {
      const int low = std::countr_zero(s);
      table[s] = table[s & (s - 1)] + w(c, first + low);
    }
  }

  int n_, lo_bits_, hi_bits_;
  std::vector<Score> lo_, hi_;
};

void check_capacity(int n) {
  if (n > kMaxExactCandidates) {
    throw CapacityError("exact solver supports at most " + std::to_string(kMaxExactCandidates) +
                        " candidates, got " + std::to_string(n));
  }
}

// best[R] = optimal cost of ordering the candidates in R among themselves.
Score relax(const LeadCost& lead, const std::vector<Score>& best, std::uint32_t set) {
  Score value = std::numeric_limits<Score>::max();
  for (std::uint32_t rest = set; rest; rest &= rest - 1) {
    const int c = std::countr_zero(rest);
    const std::uint32_t others = set & ~(1u << c);
    value = std::min(value, lead(c, others) + best[others]);
  }
  return value;
}

}  // namespace

ExactResult exact_kemeny(const PairwiseWeights& w) {
  const int n = w.size();
  check_capacity(n);
  if (n == 0) return {0, Ranking(), std::nullopt, false};
  const LeadCost lead(w);
  const std::size_t states = std::size_t{1} << n;
  std::vector<Score> best(states, 0);
  for (int layer = 2; layer <= n; ++layer) {
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(states); ++s) {
      const auto set = static_cast<std::uint32_t>(s);
      if (std::popcount(set) == layer) best[set] = relax(lead, best, set);
    }
  }

  const std::uint32_t full = static_cast<std::uint32_t>(states - 1);
  std::vector<int> order;
  std::uint32_t remaining = full;
  while (remaining) {
    for (int c = 0; c < n; ++c) {
      if (!(remaining >> c & 1u)) continue;
      const std::uint32_t others = remaining & ~(1u << c);
      if (lead(c, others) + best[others] == best[remaining]) {
        order.push_back(c);
        remaining = others;
        break;
      }
    }
  }
  return {best[full], Ranking(std::move(order)), std::nullopt, false};
}

ExactResult exact_kemeny(const Election& e) {
  check_capacity(e.num_candidates());
  return exact_kemeny(pairwise_weights(e));
}

namespace serial {

Score exact_kemeny_score(const PairwiseWeights& w) {
  const int n = w.size();
  check_capacity(n);
  const LeadCost lead(w);
  const std::size_t states = std::size_t{1} << n;
  std::vector<Score> best(states, 0);
  for (std::size_t s = 1; s < states; ++s) {
    const auto set = static_cast<std::uint32_t>(s);
    if (std::popcount(set) >= 2) best[s] = relax(lead, best, set);
  }
  return best[states - 1];
}

}  // namespace serial

ExactResult enumerate_optima(const Election& e, int limit) {
  const int n = e.num_candidates();
  if (n > kMaxEnumerationCandidates) {
    throw CapacityError("enumeration supports at most " + std::to_string(kMaxEnumerationCandidates) +
                        " candidates, got " + std::to_string(n));
  }
  if (limit < 1) throw DomainError("limit must be positive");
  const auto w = pairwise_weights(e);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Score best = std::numeric_limits<Score>::max();
  std::vector<Ranking> optima;
  bool truncated = false;
  do {
    Score s = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) s += w(order[a], order[b]);
    }
    if (s < best) {
      best = s;
      optima.clear();
      truncated = false;
    }
    if (s == best) {
      if (static_cast<int>(optima.size()) < limit) {
        optima.emplace_back(order);
      } else {
        truncated = true;
      }
    }
  } while (std::next_permutation(order.begin(), order.end()));
  ExactResult r{best, optima.front(), std::move(optima), truncated};
  return r;
}

}  // namespace kemeny
