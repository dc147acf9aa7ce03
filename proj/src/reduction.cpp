#include "kemeny/reduction.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "kemeny/errors.hpp"

namespace kemeny {

int Decomposition::num_subinstances() const {
  return static_cast<int>(std::count_if(blocks.begin(), blocks.end(), [](const Block& b) {
    return b.kind == BlockKind::SubInstance;
  }));
}

bool clean_pair(int a, int b, const PairwiseWeights& w, Fraction s) {
  if (a == b) throw DomainError("clean_pair needs two distinct candidates");
  if (a < 0 || b < 0 || a >= w.size() || b >= w.size()) throw DimensionError("candidate out of range");
  // Votes with a before b are exactly the votes that put a ahead of b.
  const Score a_first = w(b, a);
  return a_first * s.den >= s.num * static_cast<Score>(w.num_votes());
}

bool clean_pair(int a, int b, const Election& e, Fraction s) {
  if (a == b) throw DomainError("clean_pair needs two distinct candidates");
  Score a_first = 0;
  for (const auto& v : e.votes()) a_first += v.prefers(a, b) ? 1 : 0;
  return a_first * s.den >= s.num * static_cast<Score>(e.num_votes());
}

namespace {

std::vector<int> clean_candidates(const PairwiseWeights& w) {
  const int n = w.size();
  std::vector<int> clean;
  for (int c = 0; c < n; ++c) {
    bool ok = true;
    for (int o = 0; o < n && ok; ++o) {
      if (o != c) ok = clean_pair(c, o, w, kThreeQuarters) || clean_pair(o, c, w, kThreeQuarters);
    }
    if (ok) clean.push_back(c);
  }
  // Position of a clean candidate = number of clean candidates before it.
  std::vector<std::pair<int, int>> keyed;
  for (int c : clean) {
    int before = 0;
    for (int o : clean) before += (o != c && clean_pair(o, c, w, kThreeQuarters)) ? 1 : 0;
    keyed.emplace_back(before, c);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> ordered;
  for (const auto& [_, c] : keyed) ordered.push_back(c);
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    for (std::size_t j = i + 1; j < ordered.size(); ++j) {
      if (!clean_pair(ordered[i], ordered[j], w, kThreeQuarters)) {
        throw InternalError("clean candidates are not consistently ordered");
      }
    }
  }
  return ordered;
}

Block make_block(const Election& e, std::vector<int> members) {
  Block b;
  std::sort(members.begin(), members.end());
  b.candidates = members;
  if (members.size() == 1) {
    b.kind = BlockKind::FixedSingleton;
  } else {
    b.kind = BlockKind::SubInstance;
    b.election = induce_subelection(e, std::move(members)).election;
  }
  return b;
}

Decomposition finish(const Election& e, const PairwiseWeights& w, std::vector<Block> blocks,
                     ReductionRule rule) {
  Decomposition d;
  d.blocks = std::move(blocks);
  d.origin = e;
  d.rule = rule;
  d.interblock_cost = interblock_cost(d, w);
  return d;
}

}  // namespace

std::vector<int> clean_candidates(const Election& e) { return clean_candidates(pairwise_weights(e)); }

Decomposition majority_rule_split(const Election& e) {
  const auto w = pairwise_weights(e);
  const int n = e.num_candidates();
  const auto clean = clean_candidates(w);
  const int t = static_cast<int>(clean.size());
  std::vector<char> is_clean(n, 0);
  for (int c : clean) is_clean[c] = 1;

  // slot(c) = number of clean candidates ranked before c; c joins D_slot.
  std::vector<std::vector<int>> groups(t + 1);
  for (int c = 0; c < n; ++c) {
    if (is_clean[c]) continue;
    int slot = 0;
    while (slot < t && clean_pair(clean[slot], c, w, kThreeQuarters)) ++slot;
    for (int rest = slot; rest < t; ++rest) {
      if (!clean_pair(c, clean[rest], w, kThreeQuarters)) {
        throw InternalError("candidate " + std::to_string(c) + " contradicts clean-candidate order");
      }
    }
    groups[slot].push_back(c);
  }

  std::vector<Block> blocks;
  for (int i = 0; i <= t; ++i) {
    if (!groups[i].empty()) blocks.push_back(make_block(e, groups[i]));
    if (i < t) blocks.push_back(make_block(e, {clean[i]}));
  }
  return finish(e, w, std::move(blocks), ReductionRule::Majority34);
}

Digraph weak_majority_graph(const Election& e) {
  const auto w = pairwise_weights(e);
  const int n = e.num_candidates();
  const Score m = e.num_votes();
  Digraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && 2 * w(v, u) >= m) g.add_arc(u, v);
    }
  }
  return g;
}

namespace {

// Tarjan's algorithm; returns component id per vertex.
std::vector<int> strongly_connected_components(const Digraph& g, int& count) {
  const int n = g.size();
  std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack;
  std::vector<char> on_stack(n, 0);
  int next = 0;
  count = 0;
  std::function<void(int)> visit = [&](int u) {
    index[u] = low[u] = next++;
    stack.push_back(u);
    on_stack[u] = 1;
    for (int v = 0; v < n; ++v) {
      if (!g.has_arc(u, v)) continue;
      if (index[v] < 0) {
        visit(v);
        low[u] = std::min(low[u], low[v]);
      } else if (on_stack[v]) {
        low[u] = std::min(low[u], index[v]);
      }
    }
    if (low[u] == index[u]) {
      int v;
      do {
        v = stack.back();
        stack.pop_back();
        on_stack[v] = 0;
        comp[v] = count;
      } while (v != u);
      ++count;
    }
  };
  for (int u = 0; u < n; ++u) {
    if (index[u] < 0) visit(u);
  }
  return comp;
}

}  // namespace

Decomposition condorcet_split(const Election& e) {
  const auto w = pairwise_weights(e);
  const auto g = weak_majority_graph(e);
  const int n = e.num_candidates();
  int count = 0;
  const auto comp = strongly_connected_components(g, count);

  std::vector<std::vector<int>> members(count);
  for (int c = 0; c < n; ++c) members[comp[c]].push_back(c);

  // The condensation is a transitive tournament, so the number of
  // components a component points to fixes its rank.
  std::vector<std::set<int>> succ(count);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (comp[u] != comp[v] && g.has_arc(u, v)) succ[comp[u]].insert(comp[v]);
    }
  }
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return succ[a].size() > succ[b].size(); });
  for (int k = 0; k < count; ++k) {
    if (static_cast<int>(succ[order[k]].size()) != count - 1 - k) {
      throw InternalError("condensation of the weak majority graph is not a transitive tournament");
    }
  }

  std::vector<Block> blocks;
  for (int id : order) blocks.push_back(make_block(e, members[id]));
  return finish(e, w, std::move(blocks), ReductionRule::Condorcet);
}

Decomposition no_split(const Election& e) {
  std::vector<int> all(e.num_candidates());
  std::iota(all.begin(), all.end(), 0);
  return finish(e, pairwise_weights(e), {make_block(e, std::move(all))}, ReductionRule::None);
}

InducedElection induce_subelection(const Election& e, std::vector<int> subset) {
  if (subset.empty()) throw DomainError("cannot induce an election on an empty candidate set");
  std::sort(subset.begin(), subset.end());
  if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
    throw DomainError("candidate subset contains duplicates");
  }
  const int n = e.num_candidates();
  std::vector<int> local(n, -1);
  std::vector<Candidate> cands;
  for (int k = 0; k < static_cast<int>(subset.size()); ++k) {
    if (subset[k] < 0 || subset[k] >= n) throw DomainError("candidate out of range");
    local[subset[k]] = k;
    cands.push_back({k, e.label(subset[k])});
  }
  std::vector<Ranking> votes;
  votes.reserve(e.num_votes());
  for (const auto& v : e.votes()) {
    std::vector<int> order;
    order.reserve(subset.size());
    for (int c : v.order()) {
      if (local[c] >= 0) order.push_back(local[c]);
    }
    votes.emplace_back(std::move(order));
  }
  return {Election(std::move(cands), std::move(votes)), std::move(subset)};
}

Score interblock_cost(const Decomposition& d, const PairwiseWeights& w) {
  Score total = 0;
  for (std::size_t a = 0; a < d.blocks.size(); ++a) {
    for (std::size_t b = a + 1; b < d.blocks.size(); ++b) {
      for (int i : d.blocks[a].candidates) {
        for (int j : d.blocks[b].candidates) total += w(i, j);
      }
    }
  }
  return total;
}

std::vector<ScoredRanking> recombine(const Decomposition& d,
                                     const std::vector<std::vector<ScoredRanking>>& per_block_solutions,
                                     int k) {
  if (k <= 0) throw DomainError("recombine needs k >= 1");
  std::vector<const Block*> subs;
  for (const auto& b : d.blocks) {
    if (b.kind == BlockKind::SubInstance) subs.push_back(&b);
  }
  if (per_block_solutions.size() != subs.size()) {
    throw DomainError("expected " + std::to_string(subs.size()) + " solution lists, got " +
                      std::to_string(per_block_solutions.size()));
  }
  std::vector<std::vector<ScoredRanking>> lists;
  for (std::size_t b = 0; b < subs.size(); ++b) {
    auto list = per_block_solutions[b];
    if (list.empty()) throw DomainError("missing solutions for sub-instance block " + std::to_string(b));
    for (const auto& s : list) {
      if (s.ranking.size() != static_cast<int>(subs[b]->candidates.size())) {
        throw DimensionError("block solution has wrong length");
      }
    }
    std::sort(list.begin(), list.end(), score_then_lex);
    list.erase(std::unique(list.begin(), list.end(),
                           [](const auto& x, const auto& y) { return x.ranking == y.ranking; }),
               list.end());
    lists.push_back(std::move(list));
  }

  using Choice = std::vector<int>;
  auto total = [&](const Choice& c) {
    Score s = d.interblock_cost;
    for (std::size_t b = 0; b < c.size(); ++b) s += lists[b][c[b]].score;
    return s;
  };
  auto assemble = [&](const Choice& c) {
    std::vector<int> order;
    std::size_t sub = 0;
    for (const auto& blk : d.blocks) {
      if (blk.kind == BlockKind::FixedSingleton) {
        order.push_back(blk.candidates.front());
      } else {
        for (int local : lists[sub][c[sub]].ranking.order()) order.push_back(blk.candidates[local]);
        ++sub;
      }
    }
    return Ranking(std::move(order));
  };

  // Best-first over index tuples; successors bump one coordinate.
  using Item = std::pair<Score, Choice>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> frontier;
  std::set<Choice> seen;
  Choice start(lists.size(), 0);
  frontier.emplace(total(start), start);
  seen.insert(start);

  std::vector<ScoredRanking> out;
  while (!frontier.empty()) {
    auto [score, choice] = frontier.top();
    // Keep draining the tie group at the k-th score so the lexicographic
    // tie-break sees every contender.
    if (static_cast<int>(out.size()) >= k && score > out.back().score) break;
    frontier.pop();
    out.push_back({assemble(choice), score});
    for (std::size_t b = 0; b < choice.size(); ++b) {
      if (choice[b] + 1 < static_cast<int>(lists[b].size())) {
        Choice next = choice;
        ++next[b];
        if (seen.insert(next).second) frontier.emplace(total(next), std::move(next));
      }
    }
  }
  std::sort(out.begin(), out.end(), score_then_lex);
  if (static_cast<int>(out.size()) > k) out.resize(k);
  return out;
}

}  // namespace kemeny
