#include "kemeny/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_map>

#include "kemeny/errors.hpp"
#include "kemeny/rng.hpp"

namespace kemeny {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

ParsedElection parse_election(std::istream& in) {
  CleaningReport report;
  std::vector<std::vector<std::string>> votes;
  std::string line;
  while (std::getline(in, line)) {
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    ++report.votes_read;
    std::vector<std::string> labels;
    for (const auto& f : split(t, ',')) {
      auto label = trim(f);
      if (label.empty()) throw InputError("empty candidate label in vote: " + t);
      labels.push_back(std::move(label));
    }
    std::set<std::string> distinct(labels.begin(), labels.end());
    if (distinct.size() != labels.size()) {
      ++report.duplicate_votes_removed;
      continue;
    }
    votes.push_back(std::move(labels));
  }
  if (votes.empty()) throw InputError("no clean votes in input");

  std::map<std::string, int> seen_in;
  for (const auto& v : votes) {
    for (const auto& l : v) ++seen_in[l];
  }
  std::set<std::string> keep;
  for (const auto& [label, count] : seen_in) {
    if (count == static_cast<int>(votes.size())) {
      keep.insert(label);
    } else {
      ++report.partial_candidates_removed;
    }
  }
  if (keep.empty()) throw InputError("no candidate appears in every vote");

  std::vector<Candidate> candidates;
  std::unordered_map<std::string, int> index;
  for (const auto& l : votes.front()) {
    if (keep.count(l)) {
      index.emplace(l, static_cast<int>(candidates.size()));
      candidates.push_back({static_cast<int>(candidates.size()), l});
    }
  }
  std::vector<Ranking> rankings;
  for (const auto& v : votes) {
    std::vector<int> order;
    for (const auto& l : v) {
      if (keep.count(l)) order.push_back(index.at(l));
    }
    rankings.emplace_back(std::move(order));
  }
  return {Election(std::move(candidates), std::move(rankings)), report};
}

ParsedElection parse_election(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return parse_election(in);
}

void write_election(std::ostream& out, const Election& e) {
  for (const auto& v : e.votes()) {
    for (int k = 0; k < v.size(); ++k) out << (k ? "," : "") << e.label(v.at(k));
    out << '\n';
  }
}

void write_election(const std::filesystem::path& path, const Election& e) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_election(out, e);
}

Election generate_random(int n_candidates, int n_votes, std::uint64_t seed) {
  if (n_candidates < 1 || n_votes < 1) throw DomainError("need at least one candidate and one vote");
  auto gen = rng::stream(seed, 0);
  std::vector<Ranking> votes;
  votes.reserve(n_votes);
  for (int v = 0; v < n_votes; ++v) {
    std::vector<int> order(n_candidates);
    std::iota(order.begin(), order.end(), 0);
    rng::shuffle(std::span<int>(order), gen);
    votes.emplace_back(std::move(order));
  }
  return Election::unlabeled(n_candidates, std::move(votes));
}

// --- CSV ---------------------------------------------------------------

namespace {

constexpr const char* kColumns[] = {"instance_id",   "n_candidates", "n_votes",       "solver",
                                    "kernelization", "num_reads",    "best_score",    "optimal_score",
                                    "delta_percent", "num_distinct", "min_kt",        "avg_kt",
                                    "sample_time_s", "kernel_time_s", "num_blocks"};

std::string fmt(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

template <typename T>
std::string fmt_opt(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>) {
    return fmt(*v);
  } else {
    return std::to_string(*v);
  }
}

template <typename T>
T parse_number(const std::string& s, const char* column) {
  T value{};
  auto res = std::from_chars(s.data(), s.data() + s.size(), value);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw InputError(std::string("bad value '") + s + "' in column " + column);
  }
  return value;
}

template <typename T>
std::optional<T> parse_opt(const std::string& s, const char* column) {
  if (s.empty()) return std::nullopt;
  return parse_number<T>(s, column);
}

void check_field(const std::string& s) {
  if (s.find_first_of(",\n\"") != std::string::npos) throw InputError("CSV field may not contain ',' or quotes: " + s);
}

}  // namespace

std::string csv_header() {
  std::string h;
  for (const char* c : kColumns) h += (h.empty() ? "" : ",") + std::string(c);
  return h;
}

std::string to_csv_line(const ExperimentRow& r) {
  check_field(r.instance_id);
  check_field(r.solver);
  check_field(r.kernelization);
  std::vector<std::string> f = {r.instance_id,
                                std::to_string(r.n_candidates),
                                std::to_string(r.n_votes),
                                r.solver,
                                r.kernelization,
                                std::to_string(r.num_reads),
                                std::to_string(r.best_score),
                                fmt_opt(r.optimal_score),
                                fmt_opt(r.delta_percent),
                                std::to_string(r.num_distinct),
                                fmt_opt(r.min_kt),
                                fmt_opt(r.avg_kt),
                                fmt(r.sample_time_s),
                                fmt(r.kernel_time_s),
                                std::to_string(r.num_blocks)};
  std::string line;
  for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "," : "") + f[i];
  return line;
}

ExperimentRow parse_csv_line(const std::string& line) {
  const auto f = split(trim(line), ',');
  if (f.size() != std::size(kColumns)) {
    throw InputError("expected " + std::to_string(std::size(kColumns)) + " CSV fields, got " +
                     std::to_string(f.size()));
  }
  ExperimentRow r;
  r.instance_id = f[0];
  r.n_candidates = parse_number<int>(f[1], kColumns[1]);
  r.n_votes = parse_number<int>(f[2], kColumns[2]);
  r.solver = f[3];
  r.kernelization = f[4];
  r.num_reads = parse_number<int>(f[5], kColumns[5]);
  r.best_score = parse_number<Score>(f[6], kColumns[6]);
  r.optimal_score = parse_opt<Score>(f[7], kColumns[7]);
  r.delta_percent = parse_opt<double>(f[8], kColumns[8]);
  r.num_distinct = parse_number<int>(f[9], kColumns[9]);
  r.min_kt = parse_opt<Score>(f[10], kColumns[10]);
  r.avg_kt = parse_opt<double>(f[11], kColumns[11]);
  r.sample_time_s = parse_number<double>(f[12], kColumns[12]);
  r.kernel_time_s = parse_number<double>(f[13], kColumns[13]);
  r.num_blocks = parse_number<int>(f[14], kColumns[14]);
  return r;
}

void write_csv(std::ostream& out, const std::vector<ExperimentRow>& rows) {
  out << csv_header() << '\n';
  for (const auto& r : rows) out << to_csv_line(r) << '\n';
}

std::vector<ExperimentRow> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != csv_header()) throw InputError("missing or unexpected CSV header");
  std::vector<ExperimentRow> rows;
  while (std::getline(in, line)) {
    if (!trim(line).empty()) rows.push_back(parse_csv_line(line));
  }
  return rows;
}

}  // namespace kemeny
