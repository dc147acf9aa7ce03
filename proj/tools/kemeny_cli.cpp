#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "kemeny/errors.hpp"
#include "kemeny/experiments.hpp"
#include "kemeny/io.hpp"
#include "kemeny/pipeline.hpp"
#include "kemeny/qubo.hpp"

namespace {

constexpr int kExitInput = 2;
constexpr int kExitCapacity = 3;

void write_rows(const std::string& path, const std::vector<kemeny::ExperimentRow>& rows) {
  if (path.empty() || path == "-") {
    kemeny::write_csv(std::cout, rows);
    return;
  }
  std::ofstream out(path);
  if (!out) throw kemeny::InputError("cannot write " + path);
  kemeny::write_csv(out, rows);
}

void print_quality(const std::vector<kemeny::ExperimentRow>& rows) {
  for (const auto& q : kemeny::summarize_quality(rows)) {
    std::cerr << std::left << std::setw(22) << q.solver << " reads=" << std::setw(6) << q.num_reads
              << " factor=" << std::fixed << std::setprecision(4) << q.mean_factor
              << " time=" << std::setprecision(4) << q.mean_sample_time_s << "s\n";
  }
}

kemeny::ProgressFn progress_printer(bool verbose) {
  if (!verbose) return {};
  return [](const kemeny::ExperimentRow& r) {
    std::cerr << r.instance_id << ' ' << r.solver << ' ' << r.kernelization << " reads=" << r.num_reads
              << " best=" << r.best_score << " t=" << r.sample_time_s << "s\n";
  };
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kemeny rank aggregation via QUBO samplers, heuristics and kernelization"};
  app.require_subcommand(1);

  std::string input, format = "list", solver = "simulated-annealing", kernel = "none", out;
  int num_reads = 1, max_answers = 1, sweeps = 1000, workers = 0;
  std::uint64_t seed = 0;
  bool verbose = false;

  auto* solve_cmd = app.add_subcommand("solve", "Solve one election file");
  solve_cmd->add_option("--input", input, "Vote file")->required();
  solve_cmd->add_option("--format", format, "Input format")->check(CLI::IsMember({"list"}));
  solve_cmd->add_option("--solver", solver, "Solver")
      ->check(CLI::IsMember({"simulated-annealing", "steepest-descent", "local-search", "borda", "quicksort", "exact"}));
  solve_cmd->add_option("--kernelization", kernel, "Preprocessing")
      ->check(CLI::IsMember({"none", "candidates", "condorcet"}));
  solve_cmd->add_option("--num-reads", num_reads, "Sampler reads / local search runs")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--max-answers", max_answers, "Solutions to return")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", seed, "Random seed");
  solve_cmd->add_option("--sweeps", sweeps, "Annealing sweeps")->check(CLI::PositiveNumber);
  solve_cmd->add_option("--workers", workers, "Worker threads (0 = default)");
  solve_cmd->add_option("--out", out, "CSV output (default stdout)");

  int gen_candidates = 0, gen_votes = 0;
  std::string gen_out;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random election");
  gen_cmd->add_option("--candidates", gen_candidates, "Number of candidates")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--votes", gen_votes, "Number of votes (default: as many as candidates)");
  gen_cmd->add_option("--seed", seed, "Random seed");
  gen_cmd->add_option("--out", gen_out, "Output file")->required();

  kemeny::Experiment1Config e1;
  std::string e1_solvers;
  auto* exp1 = app.add_subcommand("exp1", "Sample time versus instance size");
  exp1->add_option("--sizes", e1.sizes, "Candidate counts");
  exp1->add_option("--instances", e1.instances_per_size, "Instances per size");
  exp1->add_option("--solvers", e1_solvers, "Comma-separated solver names");
  exp1->add_option("--seed", e1.seed, "Random seed");
  exp1->add_option("--sweeps", e1.sweeps, "Annealing sweeps");
  exp1->add_option("--workers", e1.workers, "Worker threads");
  exp1->add_option("--out", out, "CSV output");
  exp1->add_flag("-v,--verbose", verbose, "Print progress");

  kemeny::Experiment2Config e2;
  auto* exp2 = app.add_subcommand("exp2", "Solution quality versus num_reads");
  exp2->add_option("--candidates", e2.n, "Candidates per instance");
  exp2->add_option("--instances", e2.instances, "Number of instances");
  exp2->add_option("--reads", e2.reads_ladder, "num_reads ladder");
  exp2->add_option("--seed", e2.seed, "Random seed");
  exp2->add_option("--sweeps", e2.sweeps, "Annealing sweeps");
  exp2->add_option("--workers", e2.workers, "Worker threads");
  exp2->add_option("--out", out, "CSV output");
  exp2->add_flag("-v,--verbose", verbose, "Print progress");

  kemeny::Experiment3Config e3;
  std::string dataset;
  auto* exp3 = app.add_subcommand("exp3", "Diversity with and without preprocessing");
  exp3->add_option("--dataset", dataset, "Directory of list-format files")->required();
  exp3->add_option("--num-reads", e3.annealing_reads, "Annealing reads");
  exp3->add_option("--runs", e3.local_search_runs, "Local search runs");
  exp3->add_option("--max-answers", e3.k, "Solutions per set");
  exp3->add_option("--seed", e3.seed, "Random seed");
  exp3->add_option("--sweeps", e3.sweeps, "Annealing sweeps");
  exp3->add_option("--workers", e3.workers, "Worker threads");
  exp3->add_option("--out", out, "CSV output");
  exp3->add_flag("-v,--verbose", verbose, "Print progress");

  std::string qubo_out;
  auto* qubo_cmd = app.add_subcommand("qubo", "Export the QUBO model of an election");
  qubo_cmd->add_option("--input", input, "Vote file")->required();
  qubo_cmd->add_option("--out", qubo_out, "Model file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve_cmd) {
      const auto parsed = kemeny::parse_election(input);
      const auto& rep = parsed.report;
      if (rep.duplicate_votes_removed || rep.partial_candidates_removed) {
        std::cerr << "cleaning: dropped " << rep.duplicate_votes_removed << " votes with duplicates, removed "
                  << rep.partial_candidates_removed << " partial candidates\n";
      }
      kemeny::SolveConfig cfg;
      cfg.solver = kemeny::parse_solver(solver);
      cfg.kernelization = kemeny::parse_kernelization(kernel);
      cfg.num_reads = num_reads;
      cfg.max_answers = max_answers;
      cfg.seed = seed;
      cfg.sweeps = sweeps;
      cfg.workers = workers;
      cfg.instance_id = std::filesystem::path(input).stem().string();
      const auto outcome = kemeny::solve(parsed.election, cfg);
      for (const auto& w : outcome.warnings) std::cerr << "warning: " << w << '\n';
      for (const auto& s : outcome.solutions.solutions) {
        std::cerr << s.score << ':';
        for (int c : s.ranking.order()) std::cerr << ' ' << parsed.election.label(c);
        std::cerr << '\n';
      }
      write_rows(out, {outcome.row});
    } else if (*gen_cmd) {
      const auto e = kemeny::generate_random(gen_candidates, gen_votes > 0 ? gen_votes : gen_candidates, seed);
      kemeny::write_election(gen_out, e);
    } else if (*exp1) {
      if (!e1_solvers.empty()) {
        e1.solvers.clear();
        std::stringstream ss(e1_solvers);
        for (std::string name; std::getline(ss, name, ',');) e1.solvers.push_back(kemeny::parse_solver(name));
      }
      write_rows(out, kemeny::run_experiment_1(e1, progress_printer(verbose)));
    } else if (*exp2) {
      const auto rows = kemeny::run_experiment_2(e2, progress_printer(verbose));
      print_quality(rows);
      write_rows(out, rows);
    } else if (*exp3) {
      e3.dataset_dir = dataset;
      write_rows(out, kemeny::run_experiment_3(e3, progress_printer(verbose)));
    } else if (*qubo_cmd) {
      const auto model = kemeny::build_qubo(kemeny::parse_election(input).election);
      if (qubo_out.empty()) {
        kemeny::write_qubo(std::cout, model);
      } else {
        std::ofstream f(qubo_out);
        if (!f) throw kemeny::InputError("cannot write " + qubo_out);
        kemeny::write_qubo(f, model);
      }
    }
  } catch (const kemeny::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const kemeny::DomainError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const kemeny::DimensionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const kemeny::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
