#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kemeny/qubo.hpp"

namespace kemeny {

struct BetaRange {
  double start = 0.0;  // hot
  double end = 0.0;    // cold
};

struct SamplerParams {
  int num_reads = 1;
  int max_answers = 1;
  std::uint64_t seed = 0;
  int sweeps = 1000;                      // simulated annealing only
  std::optional<BetaRange> beta_range;    // simulated annealing only
  int workers = 0;                        // 0: OpenMP default, 1: serial loop
  // Start states cycled over reads instead of uniform random ones.
  std::vector<Assignment> initial_states;
};

struct Sample {
  Assignment assignment;
  std::int64_t energy = 0;
  int occurrences = 0;
  bool valid = false;  // decodes to a ranking
};

struct SampleSet {
  std::vector<Sample> entries;  // ascending (energy, assignment), distinct
  int total_reads = 0;
  double sample_time_s = 0.0;
};

// Symmetric adjacency view of a model, shared by the samplers.
class FlipGraph {
 public:
  explicit FlipGraph(const QuboModel& m);

  int num_vars() const { return static_cast<int>(linear_.size()); }
  std::int64_t linear(int v) const { return linear_[v]; }
  std::int64_t offset() const { return offset_; }
  // Neighbours of v as [begin, end) into neighbor()/weight().
  std::pair<std::size_t, std::size_t> range(int v) const { return {start_[v], start_[v + 1]}; }
  int neighbor(std::size_t k) const { return nbr_[k]; }
  std::int64_t weight(std::size_t k) const { return wt_[k]; }

  // field(v) = linear(v) + sum of weights to neighbours that are set.
  std::vector<std::int64_t> local_fields(const Assignment& x) const;

 private:
  std::int64_t offset_ = 0;
  std::vector<std::int64_t> linear_;
  std::vector<std::size_t> start_;
  std::vector<int> nbr_;
  std::vector<std::int64_t> wt_;
};

// Geometric inverse-temperature ladder endpoints: ln 2 over the largest
// per-variable sum of |coefficients|, ln 100 over the smallest nonzero
// |coefficient|.
BetaRange default_beta_range(const QuboModel& m);

SampleSet simulated_annealing_sample(const QuboModel& m, const SamplerParams& p);

SampleSet steepest_descent_sample(const QuboModel& m, const SamplerParams& p);

struct DescentResult {
  Assignment assignment;
  std::int64_t energy = 0;
};

// One greedy descent from `start`: flip the bit with the largest strict
// energy decrease (lowest index on ties) until none decreases. When `trace`
// is given it receives the energy before every flip and the final energy.
DescentResult steepest_descent_run(const FlipGraph& g, Assignment start,
                                std::vector<std::int64_t>* trace = nullptr);

}  // namespace kemeny
