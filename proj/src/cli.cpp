#include "pssp/cli.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "pssp/generator.hpp"
#include "pssp/io.hpp"
#include "pssp/lns.hpp"
#include "pssp/search.hpp"
#include "pssp/solution.hpp"

namespace pssp {
namespace {

namespace fs = std::filesystem;

struct RunSpec {
  std::string input;
  std::vector<std::string> inputs;
  std::string format = "auto";
  std::string model = "dp-cp";
  std::vector<std::string> models;
  int width = 5;
  double time_limit = 0.0;
  bool lns = false;
  double keep_fraction = 0.70;
  int restart_limit = 100;
  std::uint64_t max_restarts = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string trace;
  std::string lns_trace;
  bool timing = false;

  std::string solution;  // verify

  GeneratorOptions gen;  // gen
};

int exit_code_for(Status status) {
  switch (status) {
    case Status::Optimal:
    case Status::Feasible:
      return kExitOk;
    case Status::Infeasible:
      return kExitInfeasible;
    case Status::Unknown:
      return kExitUnknown;
  }
  return kExitUnknown;
}

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-")
    out << content;
  else
    write_file(path, content);
}

// ACS, then LNS from its first schedule when asked.
struct SolveOutcome {
  Solution solution;
  std::vector<LnsTraceRow> lns_rows;
};

SolveOutcome solve_instance(const Instance& inst, const RunSpec& spec, Model model) {
  SearchConfig config;
  config.model = model;
  config.width = spec.width;
  config.time_limit_s = spec.time_limit;
  config.seed = spec.seed;
  if (!spec.lns) return {acs(inst, config), {}};

  config.stop_at_first_solution = true;
  const auto start = std::chrono::steady_clock::now();
  Solution first = acs(inst, config);
  if (!first.has_schedule() || first.status == Status::Optimal) return {std::move(first), {}};

  LnsConfig lns;
  lns.keep_fraction = spec.keep_fraction;
  lns.restart_limit = spec.restart_limit;
  lns.seed = spec.seed;
  lns.max_restarts = spec.max_restarts;
  if (spec.time_limit > 0) {
    const double used = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    lns.time_limit_s = std::max(spec.time_limit - used, 1e-3);
  }
  SearchConfig sub = config;
  sub.stop_at_first_solution = false;
  sub.time_limit_s = 0;
  auto result = lns_run(inst, first, lns, sub);
  result.best.stats.nodes += first.stats.nodes;
  result.best.stats.fixpoint_calls += first.stats.fixpoint_calls;
  return {std::move(result.best), std::move(result.restarts)};
}

int solve_command(const RunSpec& spec, std::ostream& out) {
  const Instance inst = load_instance(spec.input, parse_format_name(spec.format));
  const auto outcome = solve_instance(inst, spec, parse_model(spec.model));
  const SerializeOptions opts{spec.timing};
  emit(spec.out, write_solution_json(outcome.solution, opts), out);
  if (!spec.trace.empty()) write_file(spec.trace, write_trace_csv(outcome.solution.stats.trace, opts));
  if (!spec.lns_trace.empty()) write_file(spec.lns_trace, write_lns_trace_csv(outcome.lns_rows));
  return exit_code_for(outcome.solution.status);
}

double median(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  return n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
}

std::vector<fs::path> collect_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    const fs::path p(in);
    if (fs::is_directory(p)) {
      for (const auto& entry : fs::directory_iterator(p))
        if (entry.is_regular_file()) files.push_back(entry.path());
    } else {
      files.push_back(p);
    }
  }
  std::sort(files.begin(), files.end());
  return files;
}

int bench_command(const RunSpec& spec, std::ostream& out, std::ostream& err) {
  std::vector<Model> models;
  for (const auto& name : spec.models.empty() ? std::vector<std::string>{spec.model} : spec.models)
    models.push_back(parse_model(name));

  std::string csv = "instance,model,nodes,fixpoint_calls,lb,ub,status,time_ms\n";
  // nodes per model, per instance solved to optimality by every model
  std::map<std::string, std::map<Model, std::uint64_t>> optimal_nodes;
  for (const auto& path : collect_inputs(spec.inputs)) {
    const std::string name = path.filename().string();
    std::optional<Instance> inst;
    try {
      inst = load_instance(path, parse_format_name(spec.format));
    } catch (const std::exception& e) {
      err << fmt::format("{}: {}\n", path.string(), e.what());
      for (Model m : models) csv += fmt::format("{},{},,,,,error,\n", name, to_string(m));
      continue;
    }
    for (Model m : models) {
      const auto sol = solve_instance(*inst, spec, m).solution;
      const auto& st = sol.stats;
      const std::string ub = sol.has_schedule() ? std::to_string(st.upper_bound) : "";
      csv += fmt::format("{},{},{},{},{},{},{},{}\n", name, to_string(m), st.nodes, st.fixpoint_calls, st.lower_bound,
                         ub, to_string(sol.status), spec.timing ? st.elapsed_ms : 0);
      if (sol.status == Status::Optimal) optimal_nodes[name][m] = st.nodes;
    }
  }

  // Median over instances of nodes(model) / nodes(first model).
  for (std::size_t k = 1; k < models.size(); ++k) {
    std::vector<double> ratios;
    for (const auto& [name, per_model] : optimal_nodes) {
      if (per_model.size() != models.size()) continue;
      ratios.push_back(static_cast<double>(per_model.at(models[k])) /
                       static_cast<double>(std::max<std::uint64_t>(per_model.at(models[0]), 1)));
    }
    if (ratios.empty()) continue;
    csv += fmt::format("median_node_ratio_vs_{},{},{:.4f},,,,,\n", to_string(models[0]), to_string(models[k]),
                       median(ratios));
  }
  emit(spec.out, csv, out);
  return kExitOk;
}

int verify_command(const RunSpec& spec, std::ostream& out) {
  const Instance inst = load_instance(spec.input, parse_format_name(spec.format));
  const Solution sol = parse_solution_json(read_file(spec.solution));
  const auto report = verify_solution(inst, sol);
  out << (report.valid ? "valid" : "invalid") << " makespan " << report.makespan << '\n';
  for (const auto& v : report.violations) out << "  " << v.message << '\n';
  return report.valid ? kExitOk : kExitInfeasible;
}

int gen_command(const RunSpec& spec, std::ostream& out) {
  emit(spec.out, write_pssp_json(generate_instance(spec.gen)), out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partial shop scheduling solver"};
  app.require_subcommand(1);
  RunSpec spec;

  const std::vector<std::string> model_names{"dp-jps", "dp-cp-jps", "dp-cp"};
  const std::vector<std::string> format_names{"auto", "jsp", "osp-taillard", "osp-gp", "pssp-json"};

  auto add_search_flags = [&](CLI::App* cmd) {
    cmd->add_option("--format", spec.format, "Instance format")->check(CLI::IsMember(format_names));
    cmd->add_option("--width", spec.width, "States expanded per layer and sweep")->check(CLI::PositiveNumber);
    cmd->add_option("--time-limit", spec.time_limit, "Seconds; 0 means none")->check(CLI::NonNegativeNumber);
    cmd->add_flag("--lns", spec.lns, "Improve the first schedule with LNS");
    cmd->add_option("--keep-fraction", spec.keep_fraction, "Initial share of incumbent precedences kept")
        ->check(CLI::Range(0.0, 1.0));
    cmd->add_option("--restart-limit", spec.restart_limit, "Non-improving restarts before keeping fewer")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-restarts", spec.max_restarts, "Stop LNS after this many restarts; 0 means none");
    cmd->add_option("--seed", spec.seed, "Random seed");
    cmd->add_option("--out", spec.out, "Output file (default stdout)");
    cmd->add_flag("--timing", spec.timing, "Write wall-clock times instead of 0");
  };

  auto* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("input", spec.input, "Instance file")->required();
  solve->add_option("--model", spec.model, "Search model")->check(CLI::IsMember(model_names));
  add_search_flags(solve);
  solve->add_option("--trace", spec.trace, "lb/ub trace CSV");
  solve->add_option("--lns-trace", spec.lns_trace, "Per-restart LNS CSV");

  auto* bench = app.add_subcommand("bench", "Solve every instance in the given directories or files");
  bench->add_option("inputs", spec.inputs, "Directories or files")->required();
  bench->add_option("--model", spec.model, "Search model")->check(CLI::IsMember(model_names));
  bench->add_option("--models", spec.models, "Several models, compared by node counts")
      ->delimiter(',')
      ->check(CLI::IsMember(model_names));
  add_search_flags(bench);

  auto* verify = app.add_subcommand("verify", "Check a solution against an instance");
  verify->add_option("input", spec.input, "Instance file")->required();
  verify->add_option("solution", spec.solution, "Solution JSON")->required();
  verify->add_option("--format", spec.format, "Instance format")->check(CLI::IsMember(format_names));

  auto* gen = app.add_subcommand("gen", "Write a random instance as PSSP JSON");
  gen->add_option("--partitions,-n", spec.gen.partitions, "Partitions (jobs)")->check(CLI::PositiveNumber);
  gen->add_option("--machines,-m", spec.gen.machines, "Machines")->check(CLI::PositiveNumber);
  gen->add_option("--min-duration", spec.gen.min_duration)->check(CLI::PositiveNumber);
  gen->add_option("--max-duration", spec.gen.max_duration)->check(CLI::PositiveNumber);
  gen->add_option("--density", spec.gen.density, "Probability of each extra edge")->check(CLI::Range(0.0, 1.0));
  gen->add_flag("--job-shop", spec.gen.job_shop, "Chain each partition");
  gen->add_option("--seed", spec.gen.seed);
  gen->add_option("--out", spec.out, "Output file (default stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*solve) return solve_command(spec, out);
    if (*bench) return bench_command(spec, out, err);
    if (*verify) return verify_command(spec, out);
    if (*gen) {
      if (spec.gen.min_duration > spec.gen.max_duration) throw std::invalid_argument("min duration above max");
      return gen_command(spec, out);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitInputError;
}

}  // namespace pssp
