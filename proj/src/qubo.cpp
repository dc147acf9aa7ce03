#include "kemeny/qubo.hpp"

#include <ostream>
#include <string>

#include "kemeny/errors.hpp"

namespace kemeny {

QuboModel::QuboModel(int num_candidates, std::int64_t penalty, std::int64_t offset,
                     std::vector<QuboEntry> entries)
    : n_(num_candidates), penalty_(penalty), offset_(offset), entries_(std::move(entries)) {}

QuboModel build_qubo(const Election& e) {
  const int n = e.num_candidates();
  if (n < 1 || e.num_votes() < 1) throw DomainError("cannot build a QUBO for an empty election");
  const auto w = pairwise_weights(e);
  const std::int64_t p = static_cast<std::int64_t>(n) * n * e.num_votes();

  // P(1 - sum x)^2 = P - P sum x + 2P sum_{pairs} x x, for every row and
  // every column. Each variable sits in one row and one column.
  std::vector<QuboEntry> entries;
  const int vars = n * n;
  for (int u = 0; u < vars; ++u) {
    const int i = u / n, k = u % n;
    entries.push_back({u, u, -2 * p});
    for (int v = u + 1; v < vars; ++v) {
      const int j = v / n, l = v % n;
      std::int64_t weight;
      if (i == j || k == l) {
        weight = 2 * p;
      } else {
        // Candidate placed earlier pays w(earlier, later).
        weight = k < l ? w(i, j) : w(j, i);
      }
      if (weight != 0) entries.push_back({u, v, weight});
    }
  }
  return QuboModel(n, p, 2 * static_cast<std::int64_t>(n) * p, std::move(entries));
}

std::int64_t energy(const QuboModel& m, std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != m.num_vars()) {
    throw DimensionError("assignment has " + std::to_string(x.size()) + " bits, model has " +
                         std::to_string(m.num_vars()));
  }
  std::int64_t total = m.offset();
  for (const auto& e : m.entries()) {
    if (x[e.u] && x[e.v]) total += e.weight;
  }
  return total;
}

Assignment encode(const Ranking& r) {
  const int n = r.size();
  Assignment x(static_cast<std::size_t>(n) * n, 0);
  for (int k = 0; k < n; ++k) x[static_cast<std::size_t>(r.at(k)) * n + k] = 1;
  return x;
}

std::variant<Ranking, ConstraintViolation> decode(std::span<const std::uint8_t> x, int n) {
  if (static_cast<std::size_t>(n) * n != x.size()) throw DimensionError("assignment is not n*n bits");
  std::vector<int> order(n, -1);
  for (int i = 0; i < n; ++i) {
    int ones = 0, at = -1;
    for (int j = 0; j < n; ++j) {
      if (x[static_cast<std::size_t>(i) * n + j]) {
        ++ones;
        at = j;
      }
    }
    if (ones != 1) return ConstraintViolation{ConstraintViolation::Kind::Row, i};
    order[at] = -2 - i;  // provisional mark, resolved below
  }
  for (int j = 0; j < n; ++j) {
    int ones = 0;
    for (int i = 0; i < n; ++i) ones += x[static_cast<std::size_t>(i) * n + j] ? 1 : 0;
    if (ones != 1) return ConstraintViolation{ConstraintViolation::Kind::Column, j};
  }
  for (auto& c : order) c = -2 - c;
  return Ranking(std::move(order));
}

void write_qubo(std::ostream& out, const QuboModel& m) {
  out << "offset " << m.offset() << '\n';
  for (const auto& e : m.entries()) out << e.u << ' ' << e.v << ' ' << e.weight << '\n';
}

}  // namespace kemeny
