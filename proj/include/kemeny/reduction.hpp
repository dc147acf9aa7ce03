#pragma once

#include <cstdint>
#include <vector>

#include "kemeny/election.hpp"

namespace kemeny {

// Non-negative fraction num/den with den > 0.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

inline constexpr Fraction kThreeQuarters{3, 4};

// Election restricted to a candidate subset. origin[k] is the index in the
// source election of the induced candidate k.
struct InducedElection {
  Election election;
  std::vector<int> origin;
};

enum class BlockKind { SubInstance, FixedSingleton };

struct Block {
  BlockKind kind = BlockKind::FixedSingleton;
  // Origin indices, ascending. Exactly one for fixed singletons.
  std::vector<int> candidates;
  // Induced election; only meaningful for sub-instances.
  Election election;
};

enum class ReductionRule { None, Majority34, Condorcet };

struct Decomposition {
  std::vector<Block> blocks;  // in final ranking order
  Election origin;
  ReductionRule rule = ReductionRule::None;
  Score interblock_cost = 0;

  int num_subinstances() const;
};

// Directed graph on candidates as an n x n adjacency matrix.
class Digraph {
 public:
  explicit Digraph(int n) : n_(n), arcs_(static_cast<std::size_t>(n) * n, 0) {}
  int size() const { return n_; }
  bool has_arc(int u, int v) const { return arcs_[static_cast<std::size_t>(u) * n_ + v] != 0; }
  void add_arc(int u, int v) { arcs_[static_cast<std::size_t>(u) * n_ + v] = 1; }

 private:
  int n_;
  std::vector<unsigned char> arcs_;
};

// a is ranked better than b in at least s * |votes| votes.
bool clean_pair(int a, int b, const Election& e, Fraction s);
bool clean_pair(int a, int b, const PairwiseWeights& w, Fraction s);

// Candidates clean against all others under the 3/4 majority, sorted so
// that each one is clean-before the next.
std::vector<int> clean_candidates(const Election& e);

Decomposition majority_rule_split(const Election& e);

Digraph weak_majority_graph(const Election& e);

Decomposition condorcet_split(const Election& e);

// Trivial decomposition: one block holding the whole election.
Decomposition no_split(const Election& e);

InducedElection induce_subelection(const Election& e, std::vector<int> subset);

Score interblock_cost(const Decomposition& d, const PairwiseWeights& w);

// Lazily enumerates the cross product of per-block solutions in best-first
// order. per_block_solutions holds one list per sub-instance block, in
// block order, with block-local rankings. Returns at most k distinct
// global rankings, sorted by (score, lexicographic order).
std::vector<ScoredRanking> recombine(const Decomposition& d,
                                     const std::vector<std::vector<ScoredRanking>>& per_block_solutions,
                                     int k);

}  // namespace kemeny
