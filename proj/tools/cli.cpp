#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "boolnet/classification.hpp"
#include "boolnet/decomposition.hpp"
#include "boolnet/dynamics.hpp"
#include "boolnet/errors.hpp"
#include "boolnet/interaction_graph.hpp"
#include "boolnet/literal.hpp"
#include "boolnet/network.hpp"
#include "boolnet/signed_paths.hpp"

namespace boolnet::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

std::vector<int> parse_index_list(const std::string& text)
{
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      out.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid variable index '" + item + "'");
    }
  }
  if (out.empty())
    throw std::invalid_argument("empty variable list");
  return out;
}

std::string yes_no(bool value)
{
  return value ? "yes" : "no";
}

// Fixed-point decimal with 4 places, integer arithmetic only.
std::string average_string(std::uint64_t sum, std::uint64_t count)
{
  const std::uint64_t scaled = (sum * 10000 + count / 2) / count;
  std::string frac = std::to_string(scaled % 10000);
  return std::to_string(scaled / 10000) + "." + std::string(4 - frac.size(), '0') + frac;
}

struct Options {
  std::string function_literal;
  std::string fix;
  int variable = 0;
  std::string network_path;
  std::string graph_format;
  std::string classify_format;
  std::string census_format;
  std::string cycles_format;
  std::string report;
  int arity = 0;
  std::string class_name;
  bool paired = false;
  int max_len = 0;
  int from = 0;
  int to = 0;
  std::string sign;
  std::string output_path;
  bool quiet = false;
};

void run_decompose(const Options& opt, std::ostream& out)
{
  const auto f = parse_function_literal(opt.function_literal);
  const auto table = decompose(f, parse_index_list(opt.fix));
  for (std::uint32_t rank = 0; rank < table.entries.size(); ++rank)
    out << table.assignment_string(rank) << " " << table.entries[rank].to_string() << "\n";
}

void run_influence(const Options& opt, std::ostream& out)
{
  const auto f = parse_function_literal(opt.function_literal);
  if (opt.variable != 0) {
    out << "x" << opt.variable << " " << to_string(influence(f, opt.variable)) << "\n";
    return;
  }
  const auto signs = influences(f);
  for (int i = 1; i <= f.arity(); ++i)
    out << "x" << i << " " << to_string(signs[i - 1]) << "\n";
}

void run_graph(const Options& opt, std::ostream& out)
{
  const auto graph = build_graph(load_network(opt.network_path));
  if (opt.graph_format == "dot") {
    out << to_dot(graph);
  } else if (opt.graph_format == "matrix") {
    const auto m = matrices(graph);
    auto emit = [&](const std::vector<std::vector<int>>& rows) {
      for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j)
          out << (j ? " " : "") << row[j];
        out << "\n";
      }
    };
    emit(m.positive);
    out << "\n";
    emit(m.negative);
  } else {
    ordered_json doc;
    doc["n"] = graph.vertex_count();
    doc["arcs"] = ordered_json::array();
    for (const auto& arc : graph.arcs())
      doc["arcs"].push_back({{"from", arc.from},
                             {"to", arc.to},
                             {"sign", std::string(1, sign_char(arc.sign))}});
    out << doc.dump() << "\n";
  }
}

void emit_classify_text(const ClassificationReport& report, std::ostream& out)
{
  out << "arity " << report.arity << "\n";
  out << "decimal " << report.decimal << "\n";
  out << "bitstring " << report.bitstring << "\n";
  for (int i = 1; i <= report.arity; ++i)
    out << "influence x" << i << " " << to_string(report.influence[i - 1]) << "\n";
  out << "essential";
  for (int variable : report.essential)
    out << " " << variable;
  out << "\n";
  out << "only-positive " << yes_no(report.only_positive) << "\n";
  out << "only-negative " << yes_no(report.only_negative) << "\n";
  out << "complete-positive " << yes_no(report.complete_positive) << "\n";
  out << "complete-negative " << yes_no(report.complete_negative) << "\n";
  out << "ncf " << yes_no(report.nested_canalizing) << "\n";
  if (report.witness) {
    auto emit_row = [&](const char* key, auto get) {
      out << key;
      for (std::size_t k = 0; k < report.witness->order.size(); ++k)
        out << " " << get(k);
      out << "\n";
    };
    emit_row("ncf-order", [&](std::size_t k) { return report.witness->order[k]; });
    emit_row("ncf-inputs", [&](std::size_t k) { return int(report.witness->inputs[k]); });
    emit_row("ncf-outputs", [&](std::size_t k) { return int(report.witness->outputs[k]); });
  }
}

void run_classify(const Options& opt, std::ostream& out)
{
  const auto report = classify(parse_function_literal(opt.function_literal));
  if (opt.classify_format == "text") {
    emit_classify_text(report, out);
    return;
  }
  ordered_json doc;
  doc["arity"] = report.arity;
  doc["decimal"] = report.decimal;
  doc["bitstring"] = report.bitstring;
  doc["influence"] = ordered_json::array();
  for (auto sign : report.influence)
    doc["influence"].push_back(std::string(to_string(sign)));
  doc["essential"] = report.essential;
  doc["only_positive"] = report.only_positive;
  doc["only_negative"] = report.only_negative;
  doc["complete_positive"] = report.complete_positive;
  doc["complete_negative"] = report.complete_negative;
  doc["nested_canalizing"] = report.nested_canalizing;
  if (report.witness) {
    doc["ncf_order"] = report.witness->order;
    doc["ncf_inputs"] = ordered_json::array();
    doc["ncf_outputs"] = ordered_json::array();
    for (std::size_t k = 0; k < report.witness->order.size(); ++k) {
      doc["ncf_inputs"].push_back(int(report.witness->inputs[k]));
      doc["ncf_outputs"].push_back(int(report.witness->outputs[k]));
    }
  }
  out << doc.dump() << "\n";
}

void run_census(const Options& opt, std::ostream& out, std::ostream& err)
{
  const auto cls = class_from_name(opt.class_name);
  if (!cls)
    throw std::invalid_argument("unknown class '" + opt.class_name + "'");
  if (!opt.quiet && opt.arity >= 4)
    err << "scanning " << (std::uint64_t(1) << (1 << opt.arity)) << " candidates\n";
  const auto values = enumerate_class(opt.arity, *cls);
  if (opt.census_format == "count") {
    out << values.size() << "\n";
    return;
  }
  if (opt.census_format == "list") {
    for (auto value : values)
      out << value << "\n";
    return;
  }
  const std::uint64_t all_ones = (std::uint64_t(1) << (1 << opt.arity)) - 1;
  if (opt.paired) {
    out << "decimal,bitstring,paired_decimal,paired_bitstring\n";
    for (auto value : values) {
      const auto f = BooleanFunction::from_decimal(opt.arity, value);
      const std::uint64_t paired = all_ones - value;
      out << value << "," << f.bitstring() << "," << paired << ","
          << BooleanFunction::from_decimal(opt.arity, paired).bitstring() << "\n";
    }
    return;
  }
  out << "decimal,bitstring\n";
  for (auto value : values)
    out << value << "," << BooleanFunction::from_decimal(opt.arity, value).bitstring() << "\n";
}

void run_dynamics(const Options& opt, std::ostream& out)
{
  const auto network = load_network(opt.network_path);
  if (opt.report == "fixed-points") {
    for (const auto& state : fixed_points(network))
      out << state_string(state_index(state), network.size()) << "\n";
    return;
  }
  const auto sts = state_graph(network);
  if (opt.report == "attractors") {
    for (const auto& cycle : sts.attractors) {
      for (std::size_t k = 0; k < cycle.size(); ++k)
        out << (k ? " " : "") << state_string(cycle[k], sts.node_count);
      out << "\n";
    }
    return;
  }
  ordered_json doc;
  doc["n"] = sts.node_count;
  doc["states"] = ordered_json::array();
  std::uint64_t height_sum = 0;
  for (std::uint32_t s = 0; s < sts.successor.size(); ++s) {
    doc["states"].push_back({{"state", state_string(s, sts.node_count)},
                             {"successor", state_string(sts.successor[s], sts.node_count)},
                             {"attractor", sts.attractor_id[s]},
                             {"height", sts.height[s]}});
    height_sum += sts.height[s];
  }
  doc["attractors"] = ordered_json::array();
  for (const auto& cycle : sts.attractors) {
    ordered_json states = ordered_json::array();
    for (auto s : cycle)
      states.push_back(state_string(s, sts.node_count));
    doc["attractors"].push_back(states);
  }
  doc["fixed_points"] = ordered_json::array();
  for (auto s : sts.fixed_points)
    doc["fixed_points"].push_back(state_string(s, sts.node_count));
  doc["height_sum"] = height_sum;
  doc["average_height"] = average_string(height_sum, sts.successor.size());
  out << doc.dump() << "\n";
}

void run_cycles(const Options& opt, std::ostream& out)
{
  const auto network = load_network(opt.network_path);
  const auto graph = build_graph(network);
  const int max_len = opt.max_len > 0 ? opt.max_len : network.size();
  const auto cycles = enumerate_cycles(graph, max_len);
  if (opt.cycles_format == "count") {
    out << cycles.size() << "\n";
    return;
  }
  for (const auto& cycle : cycles) {
    for (int v : cycle.vertices)
      out << v << " -> ";
    out << cycle.vertices.front() << " [";
    for (auto sign : cycle.signs)
      out << sign_char(sign);
    out << "] " << (cycle.negative() ? "negative" : "positive") << "\n";
  }
}

void run_path(const Options& opt, std::ostream& out)
{
  const auto graph = build_graph(load_network(opt.network_path));
  const ArcSign sign = opt.sign == "neg" ? ArcSign::negative : ArcSign::positive;
  const auto length = shortest_signed_path(graph, opt.from, opt.to, sign);
  if (length)
    out << *length << "\n";
  else
    out << "absent\n";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  Options opt;
  CLI::App app{"Boolean network analysis via truth-table decomposition"};
  app.name("boolnet");
  app.require_subcommand(1);
  app.add_option("--output", opt.output_path, "Write output to a file instead of stdout");
  app.add_flag("--quiet", opt.quiet, "Suppress progress notes on stderr");

  auto* decompose_cmd =
      app.add_subcommand("decompose", "Print the fragments for a fixed variable set");
  decompose_cmd->add_option("function", opt.function_literal, "Function literal (d:/b:/e:)")
      ->required();
  decompose_cmd->add_option("--fix", opt.fix, "Comma-separated fixed variables, e.g. 2,3")
      ->required();

  auto* influence_cmd =
      app.add_subcommand("influence", "Print each variable's influence sign");
  influence_cmd->add_option("function", opt.function_literal, "Function literal (d:/b:/e:)")
      ->required();
  influence_cmd->add_option("--var", opt.variable, "Restrict to one variable");

  auto* graph_cmd = app.add_subcommand("graph", "Build the signed interaction graph");
  graph_cmd->add_option("--network", opt.network_path, "Network file")->required();
  graph_cmd->add_option("--format", opt.graph_format, "dot|matrix|json")
      ->default_val("dot")
      ->check(CLI::IsMember({"dot", "matrix", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "Classify a single function");
  classify_cmd->add_option("function", opt.function_literal, "Function literal (d:/b:/e:)")
      ->required();
  classify_cmd->add_option("--format", opt.classify_format, "text|json")
      ->default_val("text")
      ->check(CLI::IsMember({"text", "json"}));

  auto* census_cmd = app.add_subcommand("census", "Enumerate a function class exhaustively");
  census_cmd->add_option("--arity", opt.arity, "Arity, 1..4")->required();
  census_cmd
      ->add_option("--class", opt.class_name,
                   "only-positive|only-negative|complete-positive|complete-negative|ncf")
      ->required();
  census_cmd->add_option("--format", opt.census_format, "list|csv|count")
      ->default_val("list")
      ->check(CLI::IsMember({"list", "csv", "count"}));
  census_cmd->add_flag("--paired", opt.paired,
                       "csv rows carry the complement-paired function too");

  auto* dynamics_cmd = app.add_subcommand("dynamics", "Synchronous state-space analysis");
  dynamics_cmd->add_option("--network", opt.network_path, "Network file")->required();
  dynamics_cmd->add_option("--report", opt.report, "fixed-points|attractors|full")
      ->default_val("full")
      ->check(CLI::IsMember({"fixed-points", "attractors", "full"}));

  auto* cycles_cmd = app.add_subcommand("cycles", "Enumerate simple signed cycles");
  cycles_cmd->add_option("--network", opt.network_path, "Network file")->required();
  cycles_cmd->add_option("--max-len", opt.max_len, "Longest cycle length (default n)");
  cycles_cmd->add_option("--format", opt.cycles_format, "list|count")
      ->default_val("list")
      ->check(CLI::IsMember({"list", "count"}));

  auto* path_cmd = app.add_subcommand("path", "Shortest signed path between two nodes");
  path_cmd->add_option("--network", opt.network_path, "Network file")->required();
  path_cmd->add_option("--from", opt.from, "Source vertex")->required();
  path_cmd->add_option("--to", opt.to, "Target vertex")->required();
  path_cmd->add_option("--sign", opt.sign, "pos|neg")
      ->required()
      ->check(CLI::IsMember({"pos", "neg"}));

  std::vector<const char*> argv;
  argv.push_back("boolnet");
  for (const auto& arg : args)
    argv.push_back(arg.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  std::ostringstream buffer;
  try {
    if (decompose_cmd->parsed())
      run_decompose(opt, buffer);
    else if (influence_cmd->parsed())
      run_influence(opt, buffer);
    else if (graph_cmd->parsed())
      run_graph(opt, buffer);
    else if (classify_cmd->parsed())
      run_classify(opt, buffer);
    else if (census_cmd->parsed())
      run_census(opt, buffer, err);
    else if (dynamics_cmd->parsed())
      run_dynamics(opt, buffer);
    else if (cycles_cmd->parsed())
      run_cycles(opt, buffer);
    else if (path_cmd->parsed())
      run_path(opt, buffer);
  } catch (const cap_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  if (!opt.output_path.empty()) {
    std::ofstream file(opt.output_path);
    if (!file) {
      err << "error: cannot open output file '" << opt.output_path << "'\n";
      return 1;
    }
    file << buffer.str();
    return 0;
  }
  out << buffer.str();
  return 0;
}

} // namespace boolnet::cli
