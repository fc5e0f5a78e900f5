#include "gainflow/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <functional>
#include <json.hpp>
#include <optional>

#include "gainflow/dot.hpp"
#include "gainflow/embedding.hpp"
#include "gainflow/generators.hpp"
#include "gainflow/io.hpp"
#include "gainflow/max_flow.hpp"
#include "gainflow/oracles.hpp"
#include "gainflow/reductions.hpp"
#include "gainflow/shortest_path.hpp"
#include "gainflow/threshold.hpp"
#include "gainflow/verify.hpp"

namespace gainflow {
namespace {

// One output line: ordered key/value pairs.
using Record = std::vector<std::pair<std::string, std::string>>;

struct Output {
  std::vector<Record> records;
  std::optional<std::string> text;  // instance text or DOT, printed verbatim
  int code = kExitOk;
};

class Negative : public std::runtime_error {
 public:
  Negative(Record record) : std::runtime_error("negative"), record(std::move(record)) {}
  Record record;
};

std::string join_ids(const std::vector<EdgeId>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + to_string(ids[i]);
  return out.empty() ? "-" : out;
}

std::string flow_list(const GeneralFlow& flow) {
  std::string out;
  for (const auto& [id, value] : flow.assignment()) out += (out.empty() ? "" : ",") + to_string(id) + ":" + value.str();
  return out.empty() ? "-" : out;
}

std::string bits(const Assignment& a) {
  std::string out;
  for (bool b : a) out += b ? '1' : '0';
  return out.empty() ? "-" : out;
}

const char* boolean(bool b) { return b ? "true" : "false"; }

void print(std::ostream& out, const Output& output, bool json) {
  if (json) {
    nlohmann::ordered_json doc;
    auto to_object = [](const Record& record) {
      nlohmann::ordered_json object = nlohmann::ordered_json::object();
      for (const auto& [k, v] : record) {
        if (v == "true" || v == "false")
          object[k] = v == "true";
        else
          object[k] = v;
      }
      return object;
    };
    if (output.text) {
      doc["text"] = *output.text;
    } else if (output.records.size() == 1) {
      doc = to_object(output.records[0]);
    } else {
      doc = nlohmann::ordered_json::array();
      for (const auto& r : output.records) doc.push_back(to_object(r));
    }
    out << doc.dump() << "\n";
    return;
  }
  if (output.text) out << *output.text;
  for (const auto& record : output.records) {
    for (std::size_t i = 0; i < record.size(); ++i) out << (i ? " " : "") << record[i].first << "=" << record[i].second;
    out << "\n";
  }
}

Rational parse_rational_option(const std::string& text, const std::string& name) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(name, "malformed rational '" + text + "'");
  }
}

MaxFlowOptions budget_from_environment() {
  MaxFlowOptions options;
  if (const char* env = std::getenv("GAINFLOW_BUDGET")) {
    char* end = nullptr;
    const unsigned long value = std::strtoul(env, &end, 10);
    if (end == env || *end != '\0') throw CLI::ValidationError("GAINFLOW_BUDGET", "expected a non-negative integer");
    options.candidate_budget = value;
  }
  return options;
}

Record cycle_record(const PositiveGainCycleError& e) {
  return {{"error", "positive-gain-cycle"}, {"cycle", join_ids(e.cycle)}};
}

struct Inputs {
  std::string network;
  std::string paft;
  std::string cnf;
  std::string flow;
  std::string source;
  std::string sink;
  std::string seed;
  std::string objective = "in";
  std::string kind;
  std::string B = "4";
  bool allow_cycles = false;
  bool reduced = false;
  int width = 3;
  int height = 3;
  double density = 0.3;
  int variables = 4;
  int clauses = 4;
  int vertices = 6;
  int edges = 10;
  int gain_low = -3;
  int gain_high = 3;
  std::uint64_t rng_seed = 1;
};

Output threshold_command(const Inputs& in) {
  const auto network = parse_network(read_file(in.network));
  Output output;
  try {
    const auto table = threshold_table(network, in.sink);
    if (!in.source.empty()) {
      if (!network.has_vertex(in.source)) throw NetworkError("unknown vertex '" + in.source + "'");
      const auto value = table.at(in.source);
      if (!value) throw Negative(Record{{"T", "unreachable"}});
      output.records.push_back({{"T", value->str()}});
      return output;
    }
    for (const auto& [v, value] : table.values)
      output.records.push_back({{"vertex", v}, {"T", value ? value->str() : "unreachable"}});
  } catch (const PositiveGainCycleError& e) {
    throw Negative(cycle_record(e));
  }
  return output;
}

Output shortest_path_command(const Inputs& in) {
  const auto network = parse_network(read_file(in.network));
  auto solved = [](const ShortestPathResult& r) {
    return Record{{"status", "solved"}, {"cost", r.cost.str()}, {"seed", r.seed.str()}, {"path", join_ids(r.path.edges)}};
  };
  Output output;
  if (!in.seed.empty()) {
    const auto r = shortest_path(network, in.source, in.sink, parse_rational_option(in.seed, "--seed"));
    if (!r) throw Negative(Record{{"status", "no-feasible-path"}, {"seed", in.seed}});
    output.records.push_back(solved(*r));
    return output;
  }
  try {
    const auto r = shortest_path_from_threshold(network, in.source, in.sink);
    switch (r.status) {
      case ThresholdSeededPath::Status::Solved: {
        auto record = solved(*r.result);
        record.emplace_back("T", r.threshold->str());
        output.records.push_back(record);
        return output;
      }
      case ThresholdSeededPath::Status::Unreachable:
        throw Negative(Record{{"status", "unreachable"}});
      case ThresholdSeededPath::Status::NoFeasiblePath:
        throw Negative(Record{{"status", "no-feasible-path"}, {"seed", "1"}, {"T", r.threshold->str()}});
      case ThresholdSeededPath::Status::ThresholdTooHigh:
        throw Negative(Record{{"status", "threshold-too-high"}, {"T", r.threshold->str()}});
    }
  } catch (const PositiveGainCycleError& e) {
    throw Negative(cycle_record(e));
  }
  return output;
}

Output maxflow_command(const Inputs& in) {
  const auto network = parse_network(read_file(in.network));
  if (in.objective != "in" && in.objective != "out")
    throw CLI::ValidationError("--objective", "expected 'in' or 'out'");
  if (!in.allow_cycles)
    if (auto cycle = find_positive_gain_cycle(network, std::nullopt))
      throw Negative(Record{{"error", "positive-gain-cycle"}, {"cycle", join_ids(*cycle)}});
  const auto objective = in.objective == "in" ? FlowObjective::InFlow : FlowObjective::OutFlow;
  const auto r = max_flow(network, objective, budget_from_environment());
  Record record{{"value", r.value.str()},
                {"attained", boolean(r.attained)},
                {"objective", in.objective},
                {"candidates", std::to_string(r.diagnostics.candidates)},
                {"labelings", std::to_string(r.diagnostics.labelings_solved)},
                {"lp_calls", std::to_string(r.diagnostics.lp_calls)}};
  if (r.diagnostics.unattained_supremum) record.emplace_back("supremum", r.diagnostics.unattained_supremum->str());
  record.emplace_back("flow", flow_list(r.flow));
  return {{record}, std::nullopt, kExitOk};
}

Output reduce_command(const std::string& what, const Inputs& in) {
  Output output;
  if (what == "degree") {
    output.text = serialize_paft(degree_reduce(parse_paft(read_file(in.paft))));
  } else if (what == "paft") {
    const auto r = paft_to_network(parse_paft(read_file(in.paft)), {parse_rational_option(in.B, "--B")});
    std::string text;
    for (const auto& note : r.origins.notes) text += "# " + note + "\n";
    output.text = text + serialize_network(r.network);
  } else {
    output.text = serialize_network(sat_to_network(parse_cnf(read_file(in.cnf))).network);
  }
  return output;
}

Output oracle_command(const std::string& what, const Inputs& in) {
  if (what == "paft") {
    const auto path = paft_oracle(parse_paft(read_file(in.paft)));
    if (!path) throw Negative(Record{{"valid", "false"}});
    return {{{{"valid", "true"}, {"path", join_ids(*path)}}}, std::nullopt, kExitOk};
  }
  const auto assignment = sat_oracle(parse_cnf(read_file(in.cnf)));
  if (!assignment) throw Negative(Record{{"satisfiable", "false"}});
  return {{{{"satisfiable", "true"}, {"assignment", bits(*assignment)}}}, std::nullopt, kExitOk};
}

Output verify_command(const std::string& what, const Inputs& in) {
  Output output;
  if (what == "reduction") {
    Record record;
    bool equivalent = false;
    if (in.kind == "paft") {
      const auto r = verify_reduction(parse_paft(read_file(in.paft)), {parse_rational_option(in.B, "--B")});
      equivalent = r.equivalent;
      record = {{"equivalent", boolean(r.equivalent)},
                {"oracle", boolean(r.oracle_positive)},
                {"reduction", boolean(r.reduction_positive)},
                {"cost", r.network_path ? r.network_path->cost.str() : "none"},
                {"valid_path", r.valid_path ? join_ids(*r.valid_path) : "-"},
                {"degree_reduced", boolean(r.degree_reduced)},
                {"digest", r.digest}};
    } else if (in.kind == "sat") {
      const auto r = verify_reduction(parse_cnf(read_file(in.cnf)), budget_from_environment());
      equivalent = r.equivalent;
      record = {{"equivalent", boolean(r.equivalent)},
                {"value", r.max_flow->value.str()},
                {"target", r.target.str()},
                {"attained", boolean(r.max_flow->attained)},
                {"oracle", boolean(r.oracle_positive)},
                {"assignment", r.assignment ? bits(*r.assignment) : "-"},
                {"digest", r.digest}};
      if (r.counterexample) record.emplace_back("counterexample", flow_list(*r.counterexample));
    } else {
      throw CLI::ValidationError("--kind", "expected 'paft' or 'sat'");
    }
    if (!equivalent) throw Negative(record);
    output.records.push_back(record);
  } else if (what == "embedding") {
    EmbeddingReport report;
    if (!in.paft.empty()) {
      const auto p = parse_paft(read_file(in.paft));
      if (!p.rotation()) throw NetworkError("instance has no rotation");
      report = verify_rotation(p.graph(), *p.rotation());
    } else {
      const auto n = parse_network(read_file(in.network));
      if (!n.rotation()) throw NetworkError("network has no rotation");
      report = verify_rotation(underlying_graph(n), *n.rotation());
    }
    Record record{{"vertices", std::to_string(report.vertices)}, {"edges", std::to_string(report.edges)},
                  {"faces", std::to_string(report.faces)},       {"genus", std::to_string(report.genus)},
                  {"planar", boolean(report.planar)}};
    if (!report.planar) throw Negative(record);
    output.records.push_back(record);
  } else if (what == "flow") {
    const auto n = parse_network(read_file(in.network));
    const auto flow = parse_flow(read_file(in.flow));
    const auto report = validate_flow(n, flow);
    Record record{{"valid", boolean(report.feasible())},
                  {"in_flow", flow_value(n, flow, FlowObjective::InFlow).str()},
                  {"out_flow", flow_value(n, flow, FlowObjective::OutFlow).str()}};
    if (!report.capacity_violations.empty()) record.emplace_back("capacity", join_ids(report.capacity_violations));
    std::string conservation;
    for (const auto& v : report.conservation_violations)
      conservation += (conservation.empty() ? "" : ",") + v.vertex + ":" + v.delivered_in.str() + "/" + v.sent_out.str();
    if (!conservation.empty()) record.emplace_back("conservation", conservation);
    if (!report.feasible()) throw Negative(record);
    output.records.push_back(record);
  } else {
    const auto report = verify_crossing_gadget({parse_rational_option(in.B, "--B")});
    std::string free;
    for (const auto& t : report.transits)
      if (t.outcome == CrossingTransit::Outcome::Free && t.entering == report.B + 1)
        free += (free.empty() ? "" : ",") + std::to_string(t.from) + ">" + std::to_string(t.to);
    Record record{{"pass", boolean(report.pass)}, {"B", report.B.str()}, {"free", free}};
    if (!report.pass) throw Negative(record);
    output.records.push_back(record);
  }
  return output;
}

Output gen_command(const std::string& what, const Inputs& in) {
  Output output;
  try {
    if (what == "paft-grid")
      output.text = serialize_paft(generate_paft_grid({in.width, in.height, in.density}, in.rng_seed));
    else if (what == "cnf")
      output.text = serialize_cnf(generate_cnf({in.variables, in.clauses}, in.rng_seed));
    else
      output.text = serialize_network(
          generate_network({in.vertices, in.edges, in.gain_low, in.gain_high, 5, 3}, in.rng_seed));
  } catch (const std::invalid_argument& e) {
    throw CLI::ValidationError("gen", e.what());
  }
  return output;
}

Output export_dot_command(const Inputs& in) {
  Output output;
  if (!in.paft.empty()) {
    const auto p = parse_paft(read_file(in.paft));
    if (in.reduced) {
      const auto r = paft_to_network(p, {parse_rational_option(in.B, "--B")});
      output.text = export_dot(r.network, &r.origins);
    } else {
      output.text = export_dot(p);
    }
  } else {
    output.text = export_dot(parse_network(read_file(in.network)));
  }
  return output;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact solvers and reductions for additive flow networks", "gainflow"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "Emit the report as JSON");
  Inputs in;
  std::function<Output()> action;

  auto network_option = [&](CLI::App* cmd, bool required = true) {
    auto* o = cmd->add_option("--network", in.network, "Network file");
    if (required) o->required();
    return o;
  };

  auto* threshold = app.add_subcommand("threshold", "Reachability thresholds towards a sink");
  network_option(threshold);
  threshold->add_option("--sink", in.sink, "Target vertex")->required();
  threshold->add_option("--source", in.source, "Report only this vertex");
  threshold->callback([&] { action = [&] { return threshold_command(in); }; });

  auto* shortest = app.add_subcommand("shortest-path", "Cheapest feasible path flow");
  network_option(shortest);
  shortest->add_option("--source", in.source, "Start vertex")->required();
  shortest->add_option("--sink", in.sink, "Target vertex")->required();
  shortest->add_option("--seed", in.seed, "Seed flow (default: 1 when the threshold is below 1)");
  shortest->callback([&] { action = [&] { return shortest_path_command(in); }; });

  auto* maxflow = app.add_subcommand("maxflow", "Exact maximum in-flow or out-flow");
  network_option(maxflow);
  maxflow->add_option("--objective", in.objective, "in or out")->check(CLI::IsMember({"in", "out"}));
  maxflow->add_flag("--allow-cycles", in.allow_cycles, "Do not refuse networks with positive-gain cycles");
  maxflow->callback([&] { action = [&] { return maxflow_command(in); }; });

  auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
  reduce->require_subcommand(1);
  auto* reduce_degree = reduce->add_subcommand("degree", "Remove non-terminal vertices of degree at most 2");
  reduce_degree->add_option("--paft", in.paft, "PAFT file")->required();
  reduce_degree->callback([&] { action = [&] { return reduce_command("degree", in); }; });
  auto* reduce_paft = reduce->add_subcommand("paft", "PAFT instance to additive network");
  reduce_paft->add_option("--paft", in.paft, "PAFT file")->required();
  reduce_paft->add_option("--B", in.B, "Gadget parameter (at least 3)");
  reduce_paft->callback([&] { action = [&] { return reduce_command("paft", in); }; });
  auto* reduce_sat = reduce->add_subcommand("sat", "3CNF formula to additive network");
  reduce_sat->add_option("--cnf", in.cnf, "CNF file")->required();
  reduce_sat->callback([&] { action = [&] { return reduce_command("sat", in); }; });

  auto* oracle = app.add_subcommand("oracle", "Brute-force decision oracles");
  oracle->require_subcommand(1);
  auto* oracle_paft = oracle->add_subcommand("paft", "Search for a valid path");
  oracle_paft->add_option("--paft", in.paft, "PAFT file")->required();
  oracle_paft->callback([&] { action = [&] { return oracle_command("paft", in); }; });
  auto* oracle_sat = oracle->add_subcommand("sat", "Search for a 1-in-3 assignment");
  oracle_sat->add_option("--cnf", in.cnf, "CNF file")->required();
  oracle_sat->callback([&] { action = [&] { return oracle_command("sat", in); }; });

  auto* verify = app.add_subcommand("verify", "Checks and equivalence tests");
  verify->require_subcommand(1);
  auto* verify_reduction_cmd = verify->add_subcommand("reduction", "Compare oracle and reduction verdicts");
  verify_reduction_cmd->add_option("--kind", in.kind, "paft or sat")->required()->check(CLI::IsMember({"paft", "sat"}));
  verify_reduction_cmd->add_option("--paft", in.paft, "PAFT file");
  verify_reduction_cmd->add_option("--cnf", in.cnf, "CNF file");
  verify_reduction_cmd->add_option("--B", in.B, "Gadget parameter (at least 3)");
  verify_reduction_cmd->callback([&] { action = [&] { return verify_command("reduction", in); }; });
  auto* verify_embedding = verify->add_subcommand("embedding", "Face-trace the rotation system");
  auto* emb_paft = verify_embedding->add_option("--paft", in.paft, "PAFT file");
  auto* emb_net = network_option(verify_embedding, false);
  emb_paft->excludes(emb_net);
  verify_embedding->require_option(1);
  verify_embedding->callback([&] { action = [&] { return verify_command("embedding", in); }; });
  auto* verify_flow = verify->add_subcommand("flow", "Validate a flow against a network");
  network_option(verify_flow);
  verify_flow->add_option("--flow", in.flow, "Flow file")->required();
  verify_flow->callback([&] { action = [&] { return verify_command("flow", in); }; });
  auto* verify_gadget = verify->add_subcommand("gadget", "Check the crossing gadget");
  verify_gadget->add_option("--B", in.B, "Gadget parameter (at least 3)");
  verify_gadget->callback([&] { action = [&] { return verify_command("gadget", in); }; });

  auto* gen = app.add_subcommand("gen", "Generate instances");
  gen->require_subcommand(1);
  auto* gen_grid = gen->add_subcommand("paft-grid", "Grid PAFT instance");
  gen_grid->add_option("--width", in.width);
  gen_grid->add_option("--height", in.height);
  gen_grid->add_option("--density", in.density, "Probability of forbidding a transition");
  gen_grid->add_option("--seed", in.rng_seed);
  gen_grid->callback([&] { action = [&] { return gen_command("paft-grid", in); }; });
  auto* gen_cnf = gen->add_subcommand("cnf", "Random 3CNF");
  gen_cnf->add_option("--vars", in.variables);
  gen_cnf->add_option("--clauses", in.clauses);
  gen_cnf->add_option("--seed", in.rng_seed);
  gen_cnf->callback([&] { action = [&] { return gen_command("cnf", in); }; });
  auto* gen_network = gen->add_subcommand("network", "Random network without positive-gain cycles");
  gen_network->add_option("--vertices", in.vertices);
  gen_network->add_option("--edges", in.edges);
  gen_network->add_option("--gain-low", in.gain_low);
  gen_network->add_option("--gain-high", in.gain_high);
  gen_network->add_option("--seed", in.rng_seed);
  gen_network->callback([&] { action = [&] { return gen_command("network", in); }; });

  auto* dot = app.add_subcommand("export-dot", "Graphviz export");
  auto* dot_paft = dot->add_option("--paft", in.paft, "PAFT file");
  auto* dot_net = network_option(dot, false);
  dot_paft->excludes(dot_net);
  dot->require_option(1, 3);
  dot->add_flag("--reduced", in.reduced, "Export the reduced network of a PAFT instance, clustered by gadget");
  dot->add_option("--B", in.B, "Gadget parameter for --reduced");
  dot->callback([&] { action = [&] { return export_dot_command(in); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    const Output output = action();
    print(out, output, json);
    return output.code;
  } catch (const Negative& e) {
    print(out, Output{{e.record}, std::nullopt, kExitNegative}, json);
    return kExitNegative;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gainflow
