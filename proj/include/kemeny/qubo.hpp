#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <variant>
#include <vector>

#include "kemeny/election.hpp"

namespace kemeny {

using Assignment = std::vector<std::uint8_t>;

struct QuboEntry {
  int u = 0;  // u <= v; u == v holds a linear coefficient
  int v = 0;
  std::int64_t weight = 0;

  friend bool operator==(const QuboEntry&, const QuboEntry&) = default;
};

// Binary quadratic model over n*n variables, variable (candidate i,
// position j) at index i*n + j. Only nonzero upper-triangular entries are
// stored, sorted by (u, v). Energy = offset + sum weight * x_u * x_v.
class QuboModel {
 public:
  QuboModel() = default;
  QuboModel(int num_candidates, std::int64_t penalty, std::int64_t offset, std::vector<QuboEntry> entries);

  int num_candidates() const { return n_; }
  int num_vars() const { return n_ * n_; }
  int var_index(int candidate, int position) const { return candidate * n_ + position; }
  std::int64_t penalty() const { return penalty_; }
  std::int64_t offset() const { return offset_; }
  const std::vector<QuboEntry>& entries() const { return entries_; }
  std::size_t nonzero_count() const { return entries_.size(); }

 private:
  int n_ = 0;
  std::int64_t penalty_ = 0;
  std::int64_t offset_ = 0;
  std::vector<QuboEntry> entries_;
};

// Row, column and ranking penalties with P = n^2 * |votes|.
QuboModel build_qubo(const Election& e);

std::int64_t energy(const QuboModel& m, std::span<const std::uint8_t> x);

Assignment encode(const Ranking& r);

struct ConstraintViolation {
  enum class Kind { Row, Column };
  Kind kind = Kind::Row;
  int index = 0;  // candidate for Row, position for Column

  friend bool operator==(const ConstraintViolation&, const ConstraintViolation&) = default;
};

// Rows are checked before columns; the first violation is reported.
std::variant<Ranking, ConstraintViolation> decode(std::span<const std::uint8_t> x, int n);

// Text export: "offset <value>" then one "u v weight" line per entry.
void write_qubo(std::ostream& out, const QuboModel& m);

}  // namespace kemeny
