// Copyright 2026 The revtest Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "revtest/bench.hpp"
#include "revtest/catalog.hpp"
#include "revtest/circuit_io.hpp"
#include "revtest/cover.hpp"
#include "revtest/decompose.hpp"
#include "revtest/faults.hpp"
#include "revtest/generate.hpp"
#include "revtest/random.hpp"

using nlohmann::json;
using namespace revtest;

namespace {

constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;
constexpr int kExitFileError = 3;

struct FileError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError{"cannot open '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Circuit load_circuit(const std::string& path) {
  return parse_circuit(read_file(path));
}

FaultModel parse_model(const std::string& token) {
  if (token == "sa") return FaultModel::stuck_at_level;
  if (token == "sa-pin") return FaultModel::stuck_at_pin;
  if (token == "cell") return FaultModel::cell;
  throw Error("unknown fault model '" + token + "'; use sa, sa-pin or cell");
}

TestSet parse_vectors(const std::string& csv, unsigned width) {
  TestSet tests;
  std::stringstream stream(csv);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    const BitVector v = BitVector::parse(item);
    if (v.width() != width)
      throw Error("vector '" + item + "' does not match circuit width " +
                  std::to_string(width));
    tests.push_back(v);
  }
  if (tests.empty()) throw Error("no test vectors given");
  return tests;
}

json vectors_json(const TestSet& tests) {
  json a = json::array();
  for (const BitVector& v : tests) a.push_back(v.to_string());
  return a;
}

struct Output {
  std::string path;  // empty = stdout
  bool pretty = false;

  void emit_json(const json& payload) const {
    emit_text(payload.dump(pretty ? 2 : -1) + "\n");
  }

  void emit_text(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FileError{"cannot write '" + path + "'"};
    out << text;
  }
};

json bound_json(const BoundReport& b) {
  json j{{"model", to_string(b.model)},
         {"wires", b.params.wires},
         {"depth", b.params.depth},
         {"gates", b.params.gate_count},
         {"bound_a", b.bound_a},
         {"bound_b", b.bound_b},
         {"bound_c", b.bound_c}};
  if (b.model == FaultModel::cell) {
    j["iterated_bound"] = b.iterated_bound;
    j["expected_bound"] = b.expected_bound;
  }
  return j;
}

json solution_json(const TestSet& tests, const Solution& s) {
  return json{{"size", tests.size()},
              {"vectors", vectors_json(tests)},
              {"optimal", s.optimal},
              {"nodes", s.nodes}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversible-circuit test set toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // --pretty/--out may follow the verb

  Output out;
  app.add_option("--out", out.path, "write the report to a file")
      ->configurable(false);
  app.add_flag("--pretty", out.pretty, "indent JSON output");

  std::string circuit_path, model_token = "sa", tests_csv, strategy_token;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  SolveLimits limits;

  // parse
  auto* cmd_parse = app.add_subcommand("parse", "validate a circuit file");
  cmd_parse->add_option("circuit", circuit_path)->required();
  bool canonical = false;
  cmd_parse->add_flag("--canonical", canonical,
                      "print the canonical file form instead of a summary");

  // simulate
  auto* cmd_sim = app.add_subcommand("simulate", "propagate a vector");
  std::string vector_text;
  unsigned from_level = 0;
  std::optional<unsigned> to_level;
  bool inverse = false;
  cmd_sim->add_option("circuit", circuit_path)->required();
  cmd_sim->add_option("vector", vector_text)->required();
  cmd_sim->add_option("--from", from_level, "start level (default 0)");
  cmd_sim->add_option("--to", to_level, "end level (default depth)");
  cmd_sim->add_flag("--inverse", inverse, "apply the inverse sub-circuit");

  // faults
  auto* cmd_faults = app.add_subcommand("faults", "list the fault universe");
  cmd_faults->add_option("circuit", circuit_path)->required();
  cmd_faults->add_option("--model", model_token, "sa | sa-pin | cell");

  // check
  auto* cmd_check = app.add_subcommand("check", "test-set completeness");
  cmd_check->add_option("circuit", circuit_path)->required();
  cmd_check->add_option("--model", model_token, "sa | cell");
  cmd_check->add_option("--tests", tests_csv, "comma-separated vectors")
      ->required();

  // gen
  auto* cmd_gen = app.add_subcommand("gen", "constructive generation");
  cmd_gen->add_option("circuit", circuit_path)->required();
  cmd_gen->add_option("--strategy", strategy_token,
                      "enum | invcomp | greedy | linear | cellback")
      ->required();
  cmd_gen->add_option("--model", model_token, "sa | cell (greedy only)");
  cmd_gen->add_option("--seed", seed, "randomized-greedy seed");
  std::string greedy_mode = "auto";
  cmd_gen->add_option("--mode", greedy_mode, "greedy mode: auto | exact | randomized");

  // solve
  auto* cmd_solve = app.add_subcommand("solve", "exact minimal test set");
  cmd_solve->add_option("circuit", circuit_path)->required();
  cmd_solve->add_option("--model", model_token, "sa | cell");
  cmd_solve->add_option("--max-nodes", limits.max_nodes, "node budget");
  cmd_solve->add_option("--max-seconds", limits.max_seconds, "time budget");

  // compact
  auto* cmd_compact = app.add_subcommand("compact", "smallest complete subset");
  cmd_compact->add_option("circuit", circuit_path)->required();
  cmd_compact->add_option("--model", model_token, "sa | cell");
  cmd_compact->add_option("--tests", tests_csv, "comma-separated vectors")
      ->required();
  cmd_compact->add_option("--max-nodes", limits.max_nodes, "node budget");

  // decomp
  auto* cmd_decomp = app.add_subcommand("decomp", "decomposition generation");
  unsigned max_wires = 8;
  bool verbose = false;
  cmd_decomp->add_option("circuit", circuit_path)->required();
  cmd_decomp->add_option("--max-wires", max_wires, "sub-circuit wire limit");
  cmd_decomp->add_option("--model", model_token, "sa | cell");
  cmd_decomp->add_flag("--verbose", verbose,
                       "dump per-step partial-vector tables to stderr");
  cmd_decomp->add_option("--max-nodes", limits.max_nodes,
                         "per-step node budget");

  // bound
  auto* cmd_bound = app.add_subcommand("bound", "test-set size bounds");
  unsigned p_wires = 0, p_depth = 0, p_gate_size = 3;
  std::uint64_t p_gates = 0;
  cmd_bound->add_option("circuit", circuit_path,
                        "circuit file (or use --wires/--gates)");
  cmd_bound->add_option("--model", model_token, "sa | cell");
  cmd_bound->add_option("--wires", p_wires, "parameter form: wire count");
  cmd_bound->add_option("--gates", p_gates, "parameter form: gate count");
  cmd_bound->add_option("--gate-size", p_gate_size,
                        "parameter form: uniform gate size (1..3)");
  cmd_bound->add_option("--depth", p_depth,
                        "parameter form: depth (default: gate count)");

  // random
  auto* cmd_random = app.add_subcommand("random", "emit a random circuit");
  unsigned r_wires = 0, r_length = 0;
  std::string library_token = "nct";
  cmd_random->add_option("--wires", r_wires)->required();
  cmd_random->add_option("--length", r_length)->required();
  cmd_random->add_option("--seed", seed)->required();
  cmd_random->add_option("--library", library_token, "nct | cnot");

  // enum3
  auto* cmd_enum3 = app.add_subcommand(
      "enum3", "enumerate optimal 3-wire circuits and their test sizes");
  std::string catalog_path;
  cmd_enum3->add_option("--catalog", catalog_path,
                        "also write the full catalog as JSON to this file");

  // bench
  auto* cmd_bench = app.add_subcommand("bench", "random-circuit benchmark CSV");
  BenchConfig bench_config;
  std::vector<unsigned> wires_list, lengths_list;
  cmd_bench->add_option("--wires", wires_list, "wire counts")
      ->delimiter(',');
  cmd_bench->add_option("--lengths", lengths_list, "circuit lengths")
      ->delimiter(',');
  cmd_bench->add_option("--count", bench_config.circuits_per_point,
                        "circuits per point");
  cmd_bench->add_option("--max-wires", bench_config.max_wires,
                        "decomposition wire limit");
  cmd_bench->add_option("--model", model_token, "sa | cell");
  cmd_bench->add_option("--strategy", strategy_token,
                        "decomp | invcomp | greedy | enum | linear | cellback");
  cmd_bench->add_option("--seed", bench_config.seed)->required();
  cmd_bench->add_option("--threads", threads, "worker threads");
  cmd_bench->add_option("--max-nodes", limits.max_nodes,
                        "per-solve node budget");
  cmd_bench->add_option("--library", library_token, "nct | cnot");
  bool no_compact = false;
  cmd_bench->add_flag("--no-compact", no_compact, "skip test compaction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsageError;
  }

  try {
    if (*cmd_parse) {
      const Circuit c = load_circuit(circuit_path);
      if (canonical) {
        out.emit_text(emit_circuit(c));
      } else {
        json gates_of_size;
        const CircuitParams params = CircuitParams::of(c);
        out.emit_json(json{{"wires", json(c.wire_names())},
                           {"gates", c.gate_count()},
                           {"depth", c.depth()},
                           {"gates_of_size",
                            json{{"1", params.gates_of_size[1]},
                                 {"2", params.gates_of_size[2]},
                                 {"3", params.gates_of_size[3]}}}});
      }
    } else if (*cmd_sim) {
      const Circuit c = load_circuit(circuit_path);
      const BitVector v = BitVector::parse(vector_text);
      const unsigned to = to_level.value_or(c.depth());
      const BitVector result = inverse
                                   ? simulate_inverse(c, v, from_level, to)
                                   : simulate(c, v, from_level, to);
      out.emit_text(result.to_string() + "\n");
    } else if (*cmd_faults) {
      const Circuit c = load_circuit(circuit_path);
      const FaultUniverse u = enumerate_faults(c, parse_model(model_token));
      std::string report;
      for (const Fault& f : u.faults) {
        if (const auto* sa = std::get_if<StuckAtFault>(&f)) {
          report += to_string(*sa);
        } else {
          const auto& req = std::get<CellFaultRequirement>(f);
          report += to_string(req, c.gate(req.gate).size());
        }
        report += '\n';
      }
      out.emit_text(report);
    } else if (*cmd_check) {
      const Circuit c = load_circuit(circuit_path);
      const FaultModel model = parse_model(model_token);
      const TestSet tests = parse_vectors(tests_csv, c.width());
      json uncovered = json::array();
      bool complete;
      if (model == FaultModel::cell) {
        const CellReport r = is_complete_cell(c, tests);
        complete = r.complete;
        for (const CellUncovered& u : r.uncovered) {
          std::string bits(c.gate(u.gate).size(), '0');
          for (unsigned i = 0; i < bits.size(); ++i)
            if ((u.pattern >> (bits.size() - 1 - i)) & 1u) bits[i] = '1';
          uncovered.push_back(json{{"gate", u.gate}, {"pattern", bits}});
        }
      } else {
        const StuckAtReport r = is_complete_stuck_at(c, tests);
        complete = r.complete;
        for (const StuckAtUncovered& u : r.uncovered)
          uncovered.push_back(json{{"level", u.level},
                                   {"wire", u.wire},
                                   {"value", u.value ? 1 : 0}});
      }
      out.emit_json(json{{"complete", complete},
                         {"model", to_string(model)},
                         {"uncovered", uncovered}});
      return complete ? 0 : kExitDomainError;
    } else if (*cmd_gen) {
      const Circuit c = load_circuit(circuit_path);
      const FaultModel model = parse_model(model_token);
      TestSet tests;
      if (strategy_token == "enum") {
        tests = gen_enumerative(c);
      } else if (strategy_token == "invcomp") {
        tests = gen_inverse_complement(c);
      } else if (strategy_token == "greedy") {
        GreedyMode mode = GreedyMode::automatic;
        if (greedy_mode == "exact") mode = GreedyMode::exact;
        else if (greedy_mode == "randomized") mode = GreedyMode::randomized;
        else if (greedy_mode != "auto")
          throw Error("unknown greedy mode '" + greedy_mode + "'");
        if (mode == GreedyMode::exact && c.width() > 16)
          std::cerr << "warning: width " << c.width()
                    << " exceeds the exact-mode guard; falling back to the "
                       "randomized pool\n";
        tests = gen_greedy(c, model, mode, seed);
      } else if (strategy_token == "linear") {
        tests = gen_linear(c);
      } else if (strategy_token == "cellback") {
        tests = gen_cell_backsolve(c);
      } else {
        throw Error("unknown strategy '" + strategy_token + "'");
      }
      const bool complete = is_complete(c, tests, model);
      out.emit_json(json{{"strategy", strategy_token},
                         {"model", to_string(model)},
                         {"size", tests.size()},
                         {"vectors", vectors_json(tests)},
                         {"complete", complete}});
    } else if (*cmd_solve) {
      const Circuit c = load_circuit(circuit_path);
      const FaultModel model = parse_model(model_token);
      const CoverageMatrix m = build_matrix_full(c, model);
      const Solution s = solve_exact(cover_problem_from_matrix(m), limits);
      TestSet tests;
      for (std::uint32_t col : s.selected) tests.push_back(m.candidates[col]);
      out.emit_json(solution_json(tests, s));
    } else if (*cmd_compact) {
      const Circuit c = load_circuit(circuit_path);
      const FaultModel model = parse_model(model_token);
      const TestSet tests = parse_vectors(tests_csv, c.width());
      const CoverageMatrix m = build_matrix(c, model, tests);
      // Completeness pre-check with a readable report.
      if (!is_complete(c, tests, model))
        throw Error("the given test set is not complete for model " +
                    to_string(model));
      const Solution s = solve_exact(cover_problem_from_matrix(m), limits);
      TestSet subset;
      for (std::uint32_t col : s.selected) subset.push_back(m.candidates[col]);
      json j = solution_json(subset, s);
      j["input_size"] = tests.size();
      out.emit_json(j);
    } else if (*cmd_decomp) {
      const Circuit c = load_circuit(circuit_path);
      const FaultModel model = parse_model(model_token);
      const DecompositionResult r =
          run_decomposition(c, max_wires, model, limits);
      if (verbose) {
        for (const DecompositionStep& step : r.steps) {
          std::cerr << "sub-circuit " << step.sub_index << " wires";
          for (unsigned w : step.support) std::cerr << ' ' << c.wire_name(w);
          std::cerr << "\n  in:\n";
          for (const std::string& row : step.before)
            std::cerr << "    " << row << '\n';
          std::cerr << "  out (+" << step.new_vectors << " new):\n";
          for (const std::string& row : step.after)
            std::cerr << "    " << row << '\n';
        }
      }
      json steps = json::array();
      for (const DecompositionStep& step : r.steps)
        steps.push_back(json{{"sub", step.sub_index},
                             {"support", step.support},
                             {"new_vectors", step.new_vectors}});
      out.emit_json(json{{"model", to_string(model)},
                         {"max_wires", max_wires},
                         {"size", r.tests.size()},
                         {"vectors", vectors_json(r.tests)},
                         {"steps", steps}});
    } else if (*cmd_bound) {
      const FaultModel model = parse_model(model_token);
      BoundReport report;
      if (!circuit_path.empty()) {
        report = bounds(load_circuit(circuit_path), model);
      } else {
        if (p_wires == 0 || p_gate_size < 1 || p_gate_size > 3)
          throw Error("parameter form needs --wires and a gate size in 1..3");
        CircuitParams params;
        params.wires = p_wires;
        params.gate_count = p_gates;
        params.gates_of_size[p_gate_size] = p_gates;
        params.depth = cmd_bound->count("--depth")
                           ? p_depth
                           : static_cast<unsigned>(
                                 std::min<std::uint64_t>(p_gates, 1u << 30));
        report = bounds(params, model);
      }
      out.emit_json(bound_json(report));
    } else if (*cmd_random) {
      Rng rng(seed);
      const GateLibrary library = library_token == "cnot"
                                      ? GateLibrary::cnot_only
                                      : GateLibrary::nct;
      out.emit_text(emit_circuit(random_circuit(r_wires, r_length, rng, library)));
    } else if (*cmd_enum3) {
      const OptimalCatalog catalog = enumerate_optimal_3wire();
      const TestSizeDistribution dist = test_size_distribution(catalog);
      json matrix = json::array();
      for (unsigned size = 0; size <= 8; ++size) {
        bool any = false;
        for (unsigned l = 0; l <= 8; ++l) any = any || dist.count[size][l] > 0;
        if (!any) continue;
        json row{{"test_size", size}, {"by_length", dist.count[size]}};
        matrix.push_back(row);
      }
      out.emit_json(json{{"functions", OptimalCatalog::kFunctions},
                         {"length_histogram", catalog.length_histogram()},
                         {"max_optimal_length", catalog.max_length()},
                         {"max_test_size", dist.max_test_size},
                         {"distribution", matrix}});
      if (!catalog_path.empty()) {
        json entries = json::array();
        for (std::uint32_t rank = 0; rank < OptimalCatalog::kFunctions;
             ++rank) {
          const Circuit c = catalog.circuit_for(rank);
          entries.push_back(json{{"rank", rank},
                                 {"length", catalog.entry(rank).length},
                                 {"circuit", emit_circuit(c)}});
        }
        std::ofstream file(catalog_path, std::ios::binary);
        if (!file) throw FileError{"cannot write '" + catalog_path + "'"};
        file << json(entries).dump() << '\n';
      }
    } else if (*cmd_bench) {
      if (!wires_list.empty()) bench_config.wires = wires_list;
      if (!lengths_list.empty()) bench_config.lengths = lengths_list;
      bench_config.model = parse_model(model_token);
      bench_config.threads = threads;
      bench_config.per_solve = limits;
      bench_config.compact_results = !no_compact;
      bench_config.library = library_token == "cnot" ? GateLibrary::cnot_only
                                                     : GateLibrary::nct;
      if (!strategy_token.empty()) {
        if (strategy_token == "decomp")
          bench_config.strategy = GenStrategy::decomposition;
        else if (strategy_token == "invcomp")
          bench_config.strategy = GenStrategy::inverse_complement;
        else if (strategy_token == "greedy")
          bench_config.strategy = GenStrategy::greedy;
        else if (strategy_token == "enum")
          bench_config.strategy = GenStrategy::enumerative;
        else if (strategy_token == "linear")
          bench_config.strategy = GenStrategy::linear;
        else if (strategy_token == "cellback")
          bench_config.strategy = GenStrategy::cell_backsolve;
        else
          throw Error("unknown strategy '" + strategy_token + "'");
      }
      const auto records = run_bench(bench_config);
      std::ostringstream csv;
      write_csv(csv, records);
      out.emit_text(csv.str());
    }
  } catch (const FileError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kExitFileError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return 0;
}
