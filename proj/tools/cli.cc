// Copyright 2026 The greennet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <optional>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "greennet/branch_and_bound.h"
#include "greennet/errors.h"
#include "greennet/generators.h"
#include "greennet/instance_io.h"
#include "greennet/lp_format.h"
#include "greennet/model_builder.h"
#include "greennet/network.h"
#include "greennet/validator.h"

namespace greennet::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr double kCompareTolerance = 1e-6;

// Input files that cannot be used as given (bad JSON, bad schema, malformed
// instance, mismatched solution). Reported with the usage exit code.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::shared_ptr<spdlog::logger> MakeLogger(std::ostream& err) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err);
  sink->set_pattern("[%l] %v");
  auto logger = std::make_shared<spdlog::logger>("greennet", sink);
  logger->set_level(spdlog::level::warn);
  if (const char* env = std::getenv("GREENNET_LOG"); env && *env) {
    const auto level = spdlog::level::from_str(env);
    // from_str maps unknown names to off; only accept real names.
    if (level != spdlog::level::off || std::string_view(env) == "off") {
      logger->set_level(level);
    } else {
      logger->warn("ignoring unknown GREENNET_LOG level '{}'", env);
    }
  }
  return logger;
}

std::string DefaultSolutionPath(std::string path) {
  for (const std::string_view suffix : {kInstanceExtension, std::string_view(".json")}) {
    if (path.size() > suffix.size() && path.ends_with(suffix)) {
      path.resize(path.size() - suffix.size());
      break;
    }
  }
  return path + std::string(kSolutionExtension);
}

NetworkInstance LoadInstance(const std::string& path) {
  std::string text;
  try {
    text = ReadTextFile(path);
  } catch (const Error& e) {
    throw InputError(e.what());
  }
  ParsedInstance parsed;
  try {
    parsed = ParseInstance(text);
  } catch (const ParseError& e) {
    throw InputError(fmt::format("{}: {}", path, e.what()));
  }
  if (!parsed.report.ok()) {
    throw InputError(fmt::format("{}: malformed instance:\n{}", path,
                                 parsed.report.ToString()));
  }
  return std::move(parsed.instance);
}

Json ObjectiveJson(double objective) {
  return std::isfinite(objective) ? Json(objective) : Json(nullptr);
}

std::string ObjectiveText(double objective) {
  return std::isfinite(objective) ? fmt::format("{}", objective) : "-";
}

std::string RouterPath(const Topology& topo, const std::vector<int>& links) {
  if (links.empty()) return "(empty)";
  std::string text = fmt::format("R{}", topo.LinkTail(links.front()));
  for (const int e : links) {
    text += fmt::format(" -e{}-> R{}", e, topo.LinkHead(e));
  }
  return text;
}

struct SolveOptions {
  std::string model = "corrected";
  double time_limit = 3600.0;
  std::int64_t node_limit = 1'000'000;
  int threads = 1;
  std::string format = "human";
};

void AddSolveOptions(CLI::App& cmd, SolveOptions& opts) {
  cmd.add_option("--time-limit", opts.time_limit, "Seconds before giving up")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--node-limit", opts.node_limit, "Branch-and-bound node cap")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--threads", opts.threads, "Worker threads for node LPs")
      ->check(CLI::PositiveNumber);
}

void AddFormat(CLI::App& cmd, std::string& format) {
  cmd.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json"}));
}

void AddModel(CLI::App& cmd, std::string& model) {
  cmd.add_option("--model", model, "Formulation to build")
      ->check(CLI::IsMember({"corrected", "legacy"}));
}

SolveConfig ConfigFrom(const SolveOptions& opts) {
  SolveConfig config;
  config.time_limit_seconds = opts.time_limit;
  config.node_limit = opts.node_limit;
  config.threads = opts.threads;
  return config;
}

struct SolveOutcome {
  BuiltModel built;
  MilpSolution result;
};

SolveOutcome SolveInstance(const NetworkInstance& inst, ModelKind kind,
                           const SolveConfig& config, spdlog::logger& log) {
  SolveOutcome outcome{BuildModel(inst, kind), {}};
  log.info("{} model: {} variables, {} rows", ToString(kind),
           outcome.built.model.num_variables(),
           outcome.built.model.num_constraints());
  outcome.result = BranchAndBound(outcome.built.model, config);
  log.info("{} model: {} after {} nodes", ToString(kind),
           ToString(outcome.result.status), outcome.result.nodes_explored);
  return outcome;
}

// ---- gen -------------------------------------------------------------------

struct GenOptions {
  std::string shape = "line";
  int routers = 2;
  std::vector<std::string> demands;
  std::vector<std::string> states;
  std::optional<double> card_power;
  std::optional<double> router_power;
  int random_demands = 0;
  int min_volume = 1;
  int max_volume = 4;
  std::optional<std::uint64_t> seed;
  int max_cards = 2;
  int extra_edges = 0;
  int one_way_links = 0;
  bool randomize_costs = false;
  std::string output;
  std::string format = "human";
};

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    parts.push_back(text.substr(start, at - start));
    if (at == std::string::npos) break;
    start = at + 1;
  }
  return parts;
}

double ParseNumber(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw CLI::ValidationError(what, fmt::format("'{}' is not a number", text));
}

int RunGen(const GenOptions& opts, std::ostream& out, spdlog::logger& log) {
  GenSpec spec;
  spec.shape = ParseShape(opts.shape);
  spec.num_routers = opts.routers;
  if (!opts.states.empty()) {
    spec.costs.state_power.clear();
    spec.costs.state_capacity.clear();
    for (const std::string& s : opts.states) {
      const auto parts = Split(s, ':');
      if (parts.size() != 2) {
        throw CLI::ValidationError("--state",
                                   fmt::format("expected POWER:CAPACITY, got '{}'", s));
      }
      spec.costs.state_power.push_back(ParseNumber(parts[0], "--state"));
      spec.costs.state_capacity.push_back(ParseNumber(parts[1], "--state"));
    }
  }
  if (opts.card_power) spec.costs.card_power = *opts.card_power;
  if (opts.router_power) spec.costs.router_power = *opts.router_power;
  for (const std::string& d : opts.demands) {
    const auto parts = Split(d, ':');
    if (parts.size() != 3) {
      throw CLI::ValidationError(
          "--demand", fmt::format("expected SOURCE:TARGET:VOLUME, got '{}'", d));
    }
    spec.demands.push_back(
        Demand{static_cast<int>(ParseNumber(parts[0], "--demand")),
               static_cast<int>(ParseNumber(parts[1], "--demand")),
               ParseNumber(parts[2], "--demand")});
  }
  spec.random_demands = opts.random_demands;
  spec.min_volume = opts.min_volume;
  spec.max_volume = opts.max_volume;
  spec.max_cards_per_router = opts.max_cards;
  spec.extra_edges = opts.extra_edges;
  spec.one_way_links = opts.one_way_links;
  spec.randomize_costs = opts.randomize_costs;
  const bool random = spec.shape == Shape::kRandom || spec.random_demands > 0;
  if (random && !opts.seed) {
    throw CLI::ValidationError(
        "--seed", "random shapes and random demands need an explicit --seed");
  }
  spec.seed = opts.seed.value_or(0);

  const NetworkInstance inst = Generate(spec);
  const InstanceReport report = ValidateInstance(inst);
  if (!report.ok()) {
    throw InputError("generated instance is malformed:\n" + report.ToString());
  }
  const std::string text = SerializeInstance(inst);
  if (opts.output.empty() || opts.output == "-") {
    out << text;
    return kExitOk;
  }
  WriteTextFile(opts.output, text);
  log.info("wrote {}", opts.output);
  if (opts.format == "json") {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "gen";
    doc["output"] = opts.output;
    doc["routers"] = inst.num_routers;
    doc["links"] = inst.num_links;
    doc["demands"] = inst.num_demands();
    out << doc.dump(2) << '\n';
  } else {
    out << fmt::format("wrote {} ({} routers, {} links, {} demands)\n",
                       opts.output, inst.num_routers, inst.num_links,
                       inst.num_demands());
  }
  return kExitOk;
}

// ---- solve -----------------------------------------------------------------

int RunSolve(const std::string& instance_path, std::string output,
             const SolveOptions& opts, std::ostream& out,
             spdlog::logger& log) {
  const NetworkInstance inst = LoadInstance(instance_path);
  const ModelKind kind = ParseModelKind(opts.model);
  const SolveOutcome outcome = SolveInstance(inst, kind, ConfigFrom(opts), log);
  const MilpSolution& result = outcome.result;
  const Topology topo = DeriveTopology(inst);

  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "solve";
  doc["model"] = ToString(kind);
  doc["status"] = ToString(result.status);
  doc["objective"] = ObjectiveJson(result.objective);
  doc["bound"] = ObjectiveJson(result.bound);
  doc["nodes_explored"] = result.nodes_explored;
  std::string human = fmt::format(
      "model: {}\nstatus: {}\nobjective: {}\nbound: {}\nnodes: {}\n",
      ToString(kind), ToString(result.status), ObjectiveText(result.objective),
      ObjectiveText(result.bound), result.nodes_explored);

  Json paths = Json::array();
  if (result.has_incumbent()) {
    const Solution sol = ToSolution(inst, outcome.built.index, result.assignment);
    for (int d = 0; d < inst.num_demands(); ++d) {
      const Demand& demand = inst.demands[d];
      Json entry;
      entry["demand"] = d;
      try {
        const DemandRoute route = ExtractPaths(inst, sol, d);
        entry["links"] = route.path;
        entry["cycles"] = route.cycles;
        human += fmt::format("demand {} (R{} -> R{}, volume {}): {}\n", d,
                             demand.source, demand.target, demand.volume,
                             RouterPath(topo, route.path));
        for (const auto& cycle : route.cycles) {
          human += fmt::format("  cycle: {}\n", RouterPath(topo, cycle));
        }
      } catch (const Error& e) {
        entry["links"] = nullptr;
        entry["error"] = e.what();
        human += fmt::format("demand {}: no path ({})\n", d, e.what());
      }
      paths.push_back(std::move(entry));
    }
    if (output.empty()) output = DefaultSolutionPath(instance_path);
    WriteTextFile(output, SerializeSolution({kind, result.status, sol}));
    doc["solution"] = output;
    human += fmt::format("solution written to {}\n", output);
  }
  doc["paths"] = std::move(paths);
  out << (opts.format == "json" ? doc.dump(2) + "\n" : human);
  return result.has_incumbent() ? kExitOk : kExitMismatch;
}

// ---- validate --------------------------------------------------------------

int RunValidate(const std::string& instance_path,
                const std::string& solution_path,
                const std::string& model_flag, const std::string& format,
                std::ostream& out) {
  const NetworkInstance inst = LoadInstance(instance_path);
  SolutionDocument doc;
  try {
    doc = ParseSolution(ReadTextFile(solution_path), inst);
  } catch (const Error& e) {
    throw InputError(fmt::format("{}: {}", solution_path, e.what()));
  }
  const ModelKind kind =
      model_flag.empty() ? doc.kind : ParseModelKind(model_flag);
  const ValidationReport report = Check(inst, doc.solution, kind);
  out << (format == "json" ? ReportToJson(report)
                           : FormatReport(report));
  return report.is_feasible ? kExitOk : kExitMismatch;
}

// ---- export-lp -------------------------------------------------------------

int RunExportLp(const std::string& instance_path, const std::string& output,
                const std::string& model, const std::string& format,
                std::ostream& out) {
  const NetworkInstance inst = LoadInstance(instance_path);
  const ModelKind kind = ParseModelKind(model);
  const BuiltModel built = BuildModel(inst, kind);
  WriteTextFile(output, ExportLp(built.model));
  if (format == "json") {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "export-lp";
    doc["model"] = ToString(kind);
    doc["output"] = output;
    doc["variables"] = built.model.num_variables();
    doc["rows"] = built.model.num_constraints();
    out << doc.dump(2) << '\n';
  } else {
    out << fmt::format("wrote {} model to {} ({} variables, {} rows)\n",
                       ToString(kind), output, built.model.num_variables(),
                       built.model.num_constraints());
  }
  return kExitOk;
}

// ---- compare ---------------------------------------------------------------

// Whether the y-rows of both links of a pair agree in the given solution.
std::optional<bool> RowsMatch(const SolveOutcome& outcome,
                              const NetworkInstance& inst,
                              const EdgePair& pair) {
  if (!outcome.result.has_incumbent()) return std::nullopt;
  for (int k = 0; k < inst.num_states; ++k) {
    const double a =
        outcome.result.assignment[outcome.built.index.state(pair.forward, k).index];
    const double b =
        outcome.result.assignment[outcome.built.index.state(pair.backward, k).index];
    if (std::lround(a) != std::lround(b)) return false;
  }
  return true;
}

std::string MatchText(std::optional<bool> match) {
  if (!match) return "-";
  return *match ? "yes" : "no";
}

int RunCompare(const std::string& instance_path, const SolveOptions& opts,
               std::ostream& out, spdlog::logger& log) {
  const NetworkInstance inst = LoadInstance(instance_path);
  const SolveConfig config = ConfigFrom(opts);
  const SolveOutcome corrected =
      SolveInstance(inst, ModelKind::kCorrected, config, log);
  const SolveOutcome legacy = SolveInstance(inst, ModelKind::kLegacy, config, log);
  const MilpSolution& a = corrected.result;
  const MilpSolution& b = legacy.result;

  bool diverge = a.status != b.status;
  if (a.has_incumbent() && b.has_incumbent() &&
      std::abs(a.objective - b.objective) > kCompareTolerance) {
    diverge = true;
  }
  const EdgePairing pairing = DeriveEdgePairs(inst);

  if (opts.format == "json") {
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "compare";
    Json models;
    for (const auto& [name, outcome] :
         {std::pair{"corrected", &corrected}, std::pair{"legacy", &legacy}}) {
      models[name] = {{"status", ToString(outcome->result.status)},
                      {"objective", ObjectiveJson(outcome->result.objective)},
                      {"nodes_explored", outcome->result.nodes_explored}};
    }
    doc["models"] = std::move(models);
    Json pairs = Json::array();
    for (const EdgePair& pair : pairing.pairs) {
      const auto to_json = [](std::optional<bool> m) {
        return m ? Json(*m) : Json(nullptr);
      };
      pairs.push_back({{"forward", pair.forward},
                       {"backward", pair.backward},
                       {"port_a", pair.port_a},
                       {"port_b", pair.port_b},
                       {"corrected_rows_match", to_json(RowsMatch(corrected, inst, pair))},
                       {"legacy_rows_match", to_json(RowsMatch(legacy, inst, pair))}});
    }
    doc["edge_pairs"] = std::move(pairs);
    doc["unpaired_links"] = pairing.unpaired;
    doc["diverge"] = diverge;
    out << doc.dump(2) << '\n';
  } else {
    out << fmt::format("{:<24}{:<14}{:<14}\n", "", "corrected", "legacy");
    out << fmt::format("{:<24}{:<14}{:<14}\n", "status", ToString(a.status),
                       ToString(b.status));
    out << fmt::format("{:<24}{:<14}{:<14}\n", "objective",
                       ObjectiveText(a.objective), ObjectiveText(b.objective));
    out << fmt::format("{:<24}{:<14}{:<14}\n", "nodes", a.nodes_explored,
                       b.nodes_explored);
    if (!pairing.pairs.empty()) out << "y rows match per edge pair:\n";
    for (const EdgePair& pair : pairing.pairs) {
      out << fmt::format(
          "{:<24}{:<14}{:<14}\n",
          fmt::format("  e{}/e{} (p{}-p{})", pair.forward, pair.backward,
                      pair.port_a, pair.port_b),
          MatchText(RowsMatch(corrected, inst, pair)),
          MatchText(RowsMatch(legacy, inst, pair)));
    }
    if (!pairing.unpaired.empty()) {
      out << fmt::format("unpaired links: {}\n", fmt::join(pairing.unpaired, ", "));
    }
    out << (diverge ? "verdict: models diverge\n" : "verdict: models agree\n");
  }
  return diverge ? kExitMismatch : kExitOk;
}

}  // namespace

int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err) {
  const auto log = MakeLogger(err);

  CLI::App app{"Build, solve, validate and compare energy-aware backbone "
               "network models",
               "greennet"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "greennet 0.1.0");

  GenOptions gen;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("--shape", gen.shape, "line, ring or random")
      ->check(CLI::IsMember({"line", "ring", "random"}));
  gen_cmd->add_option("--routers", gen.routers, "Number of routers");
  gen_cmd->add_option("--demand", gen.demands,
                      "SOURCE:TARGET:VOLUME, repeatable");
  gen_cmd->add_option("--state", gen.states,
                      "POWER:CAPACITY per link state, repeatable");
  gen_cmd->add_option("--card-power", gen.card_power, "Watts per active card");
  gen_cmd->add_option("--router-power", gen.router_power,
                      "Watts per active router");
  gen_cmd->add_option("--random-demands", gen.random_demands,
                      "Extra demands between random router pairs");
  gen_cmd->add_option("--min-volume", gen.min_volume,
                      "Smallest random demand volume");
  gen_cmd->add_option("--max-volume", gen.max_volume,
                      "Largest random demand volume");
  gen_cmd->add_option("--seed", gen.seed, "Seed for every random choice");
  gen_cmd->add_option("--max-cards", gen.max_cards,
                      "Random shape: cards per router drawn from 1..N");
  gen_cmd->add_option("--extra-edges", gen.extra_edges,
                      "Random shape: edges beyond the spanning tree");
  gen_cmd->add_option("--one-way-links", gen.one_way_links,
                      "Random shape: directed links without a partner");
  gen_cmd->add_flag("--randomize-costs", gen.randomize_costs,
                    "Random shape: draw per-link state tables");
  gen_cmd->add_option("-o,--output", gen.output, "Output path (default stdout)");
  AddFormat(*gen_cmd, gen.format);

  SolveOptions solve;
  std::string solve_instance;
  std::string solve_output;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve an instance");
  solve_cmd->add_option("instance", solve_instance, "Instance file (.gni.json)")
      ->required();
  AddModel(*solve_cmd, solve.model);
  AddSolveOptions(*solve_cmd, solve);
  AddFormat(*solve_cmd, solve.format);
  solve_cmd->add_option("-o,--output", solve_output,
                        "Solution path (default <instance>.sol.json)");

  std::string validate_instance;
  std::string validate_solution;
  std::string validate_model;
  std::string validate_format = "human";
  CLI::App* validate_cmd =
      app.add_subcommand("validate", "Check a solution against a model");
  validate_cmd->add_option("instance", validate_instance, "Instance file (.gni.json)")
      ->required();
  validate_cmd->add_option("solution", validate_solution, "Solution file (.sol.json)")
      ->required();
  AddModel(*validate_cmd, validate_model);
  AddFormat(*validate_cmd, validate_format);

  std::string export_instance;
  std::string export_output;
  std::string export_model = "corrected";
  std::string export_format = "human";
  CLI::App* export_cmd =
      app.add_subcommand("export-lp", "Write a model in LP format");
  export_cmd->add_option("instance", export_instance, "Instance file (.gni.json)")
      ->required();
  export_cmd->add_option("output", export_output, "LP file to write (.lp)")
      ->required();
  AddModel(*export_cmd, export_model);
  AddFormat(*export_cmd, export_format);

  SolveOptions compare;
  std::string compare_instance;
  CLI::App* compare_cmd = app.add_subcommand(
      "compare", "Solve the corrected and legacy models side by side");
  compare_cmd->add_option("instance", compare_instance, "Instance file (.gni.json)")
      ->required();
  AddSolveOptions(*compare_cmd, compare);
  AddFormat(*compare_cmd, compare.format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen_cmd) return RunGen(gen, out, *log);
    if (*solve_cmd) return RunSolve(solve_instance, solve_output, solve, out, *log);
    if (*validate_cmd) {
      return RunValidate(validate_instance, validate_solution, validate_model,
                         validate_format, out);
    }
    if (*export_cmd) {
      return RunExportLp(export_instance, export_output, export_model,
                         export_format, out);
    }
    if (*compare_cmd) return RunCompare(compare_instance, compare, out, *log);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvalidArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return kExitUsage;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  return RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace greennet::cli
