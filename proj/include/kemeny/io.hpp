#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "kemeny/election.hpp"

namespace kemeny {

struct CleaningReport {
  int votes_read = 0;
  int duplicate_votes_removed = 0;    // votes naming a candidate twice
  int partial_candidates_removed = 0; // labels missing from some vote
};

struct ParsedElection {
  Election election;
  CleaningReport report;
};

// `list` format: one vote per line, comma-separated labels, best first.
// Blank lines and lines starting with '#' are skipped. Votes with a
// repeated label are dropped, then every label absent from some remaining
// vote is removed everywhere. Indices follow the first clean vote.
ParsedElection parse_election(std::istream& in);
ParsedElection parse_election(const std::filesystem::path& path);

void write_election(std::ostream& out, const Election& e);
void write_election(const std::filesystem::path& path, const Election& e);

// Each vote an independent Fisher-Yates shuffle of the identity order.
Election generate_random(int n_candidates, int n_votes, std::uint64_t seed);

struct ExperimentRow {
  std::string instance_id;
  int n_candidates = 0;
  int n_votes = 0;
  std::string solver;
  std::string kernelization;
  int num_reads = 0;
  Score best_score = 0;
  std::optional<Score> optimal_score;
  std::optional<double> delta_percent;
  int num_distinct = 0;
  std::optional<Score> min_kt;
  std::optional<double> avg_kt;
  double sample_time_s = 0.0;
  double kernel_time_s = 0.0;
  int num_blocks = 0;

  friend bool operator==(const ExperimentRow&, const ExperimentRow&) = default;
};

std::string csv_header();
std::string to_csv_line(const ExperimentRow& row);
ExperimentRow parse_csv_line(const std::string& line);

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows);
// Expects the header line first.
std::vector<ExperimentRow> read_csv(std::istream& in);

}  // namespace kemeny
