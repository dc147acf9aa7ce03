#include "kemeny/samplers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <map>

#include "kemeny/errors.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

FlipGraph::FlipGraph(const QuboModel& m) : offset_(m.offset()), linear_(m.num_vars(), 0) {
  const int vars = m.num_vars();
  std::vector<std::size_t> degree(vars, 0);
  for (const auto& e : m.entries()) {
    if (e.u == e.v) {
      linear_[e.u] += e.weight;
    } else {
      ++degree[e.u];
      ++degree[e.v];
    }
  }
  start_.assign(vars + 1, 0);
  for (int v = 0; v < vars; ++v) start_[v + 1] = start_[v] + degree[v];
  nbr_.resize(start_[vars]);
  wt_.resize(start_[vars]);
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (const auto& e : m.entries()) {
    if (e.u == e.v) continue;
    nbr_[fill[e.u]] = e.v;
    wt_[fill[e.u]++] = e.weight;
    nbr_[fill[e.v]] = e.u;
    wt_[fill[e.v]++] = e.weight;
  }
}

std::vector<std::int64_t> FlipGraph::local_fields(const Assignment& x) const {
  std::vector<std::int64_t> field(linear_);
  for (int v = 0; v < num_vars(); ++v) {
    if (!x[v]) continue;
    for (std::size_t k = start_[v]; k < start_[v + 1]; ++k) field[nbr_[k]] += wt_[k];
  }
  return field;
}

BetaRange default_beta_range(const QuboModel& m) {
  std::vector<std::int64_t> abs_sum(m.num_vars(), 0);
  std::int64_t smallest = std::numeric_limits<std::int64_t>::max();
  for (const auto& e : m.entries()) {
    const std::int64_t a = e.weight < 0 ? -e.weight : e.weight;
    if (a == 0) continue;
    abs_sum[e.u] += a;
    if (e.v != e.u) abs_sum[e.v] += a;
    smallest = std::min(smallest, a);
  }
  const std::int64_t largest = m.num_vars() ? *std::max_element(abs_sum.begin(), abs_sum.end()) : 0;
  if (largest == 0) throw DomainError("beta range undefined for an all-zero model");
  return {std::log(2.0) / static_cast<double>(largest), std::log(100.0) / static_cast<double>(smallest)};
}

namespace {

struct ReadResult {
  Assignment x;
  std::int64_t energy;
};

Assignment random_assignment(int vars, std::mt19937_64& gen) {
  Assignment x(vars);
  for (int v = 0; v < vars; ++v) x[v] = static_cast<std::uint8_t>(gen() >> 63);
  return x;
}

Assignment start_state(const SamplerParams& p, int read, int vars, std::mt19937_64& gen) {
  if (!p.initial_states.empty()) {
    return p.initial_states[static_cast<std::size_t>(read) % p.initial_states.size()];
  }
  return random_assignment(vars, gen);
}

std::int64_t energy_from_fields(const FlipGraph& g, const Assignment& x,
                                const std::vector<std::int64_t>& field) {
  // sum_v x_v (linear_v + field_v) counts every quadratic term twice.
  std::int64_t twice = 0;
  for (int v = 0; v < g.num_vars(); ++v) {
    if (x[v]) twice += g.linear(v) + field[v];
  }
  return g.offset() + twice / 2;
}

void flip(const FlipGraph& g, Assignment& x, std::vector<std::int64_t>& field, int v) {
  x[v] ^= 1;
  const std::int64_t sign = x[v] ? 1 : -1;
  const auto [b, e] = g.range(v);
  for (std::size_t k = b; k < e; ++k) field[g.neighbor(k)] += sign * g.weight(k);
}

ReadResult anneal_once(const FlipGraph& g, const SamplerParams& p, const std::vector<double>& betas,
                       int read) {
  auto gen = rng::stream(p.seed, static_cast<std::uint64_t>(read));
  Assignment x = start_state(p, read, g.num_vars(), gen);
  auto field = g.local_fields(x);
  std::int64_t e = energy_from_fields(g, x, field);
  const int vars = g.num_vars();
  for (double beta : betas) {
    for (int v = 0; v < vars; ++v) {
      const std::int64_t delta = x[v] ? -field[v] : field[v];
      bool accept = delta <= 0;
      if (!accept) {
        const double threshold = static_cast<double>(delta) * beta;
        // exp(-40) is below one part in 10^17.
        accept = threshold < 40.0 && rng::uniform01(gen) < std::exp(-threshold);
      }
      if (accept) {
        flip(g, x, field, v);
        e += delta;
      }
    }
  }
  return {std::move(x), e};
}

SampleSet aggregate(std::vector<ReadResult> reads, const QuboModel& m, int max_answers) {
  std::sort(reads.begin(), reads.end(), [](const ReadResult& a, const ReadResult& b) {
    if (a.energy != b.energy) return a.energy < b.energy;
    return a.x < b.x;
  });
  SampleSet out;
  out.total_reads = static_cast<int>(reads.size());
  for (auto& r : reads) {
    if (!out.entries.empty() && out.entries.back().assignment == r.x) {
      ++out.entries.back().occurrences;
      continue;
    }
    if (static_cast<int>(out.entries.size()) == max_answers) break;
    const bool valid = std::holds_alternative<Ranking>(decode(r.x, m.num_candidates()));
    out.entries.push_back({std::move(r.x), r.energy, 1, valid});
  }
  return out;
}

template <typename Body>
std::vector<ReadResult> run_reads(int num_reads, int workers, Body body) {
  std::vector<ReadResult> reads(num_reads);
  if (workers == 1) {
    for (int r = 0; r < num_reads; ++r) reads[r] = body(r);
  } else if (workers > 1) {
#pragma omp parallel for schedule(dynamic, 16) num_threads(workers)
    for (int r = 0; r < num_reads; ++r) reads[r] = body(r);
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (int r = 0; r < num_reads; ++r) reads[r] = body(r);
  }
  return reads;
}

// Runs before any parallel region so errors reach the caller.
void check_params(const QuboModel& m, const SamplerParams& p) {
  if (p.num_reads < 1) throw DomainError("num_reads must be positive");
  if (p.max_answers < 1) throw DomainError("max_answers must be positive");
  if (p.sweeps < 1) throw DomainError("sweeps must be positive");
  for (const auto& s : p.initial_states) {
    if (static_cast<int>(s.size()) != m.num_vars()) throw DimensionError("initial state has wrong length");
  }
}

}  // namespace

SampleSet simulated_annealing_sample(const QuboModel& m, const SamplerParams& p) {
  check_params(m, p);
  const FlipGraph g(m);
  const BetaRange range = p.beta_range ? *p.beta_range : default_beta_range(m);
  if (!(range.start > 0.0) || !(range.end > 0.0)) throw DomainError("beta range must be positive");
  std::vector<double> betas(p.sweeps);
  if (p.sweeps == 1) {
    betas[0] = range.end;
  } else {
    const double ratio = std::log(range.end / range.start) / (p.sweeps - 1);
    for (int s = 0; s < p.sweeps; ++s) betas[s] = range.start * std::exp(ratio * s);
  }

  const auto t0 = std::chrono::steady_clock::now();
  auto reads = run_reads(p.num_reads, p.workers, [&](int r) { return anneal_once(g, p, betas, r); });
  auto set = aggregate(std::move(reads), m, p.max_answers);
  set.sample_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return set;
}

DescentResult steepest_descent_run(const FlipGraph& g, Assignment x, std::vector<std::int64_t>* trace) {
  if (static_cast<int>(x.size()) != g.num_vars()) throw DimensionError("start state has wrong length");
  auto field = g.local_fields(x);
  std::int64_t e = energy_from_fields(g, x, field);
  const int vars = g.num_vars();
  while (true) {
    int best = -1;
    std::int64_t best_delta = 0;
    for (int v = 0; v < vars; ++v) {
      const std::int64_t delta = x[v] ? -field[v] : field[v];
      if (delta < best_delta) {
        best_delta = delta;
        best = v;
      }
    }
    if (trace) trace->push_back(e);
    if (best < 0) break;
    flip(g, x, field, best);
    e += best_delta;
  }
  return {std::move(x), e};
}

SampleSet steepest_descent_sample(const QuboModel& m, const SamplerParams& p) {
  check_params(m, p);
  const FlipGraph g(m);
  const auto t0 = std::chrono::steady_clock::now();
  auto reads = run_reads(p.num_reads, p.workers, [&](int r) {
    auto gen = rng::stream(p.seed, static_cast<std::uint64_t>(r));
    auto run = steepest_descent_run(g, start_state(p, r, g.num_vars(), gen));
    return ReadResult{std::move(run.assignment), run.energy};
  });
  auto set = aggregate(std::move(reads), m, p.max_answers);
  set.sample_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return set;
}

}  // namespace kemeny
