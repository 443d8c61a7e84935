#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <sstream>

#include "kpair/codes.hpp"
#include "kpair/json_io.hpp"
#include "kpair/locc.hpp"
#include "kpair/netroute.hpp"
#include "kpair/pairability.hpp"
#include "kpair/search.hpp"
#include "kpair/stabsim.hpp"

namespace kpair::cli {

namespace {

using json_io::json;

// Bad flags or input files; reported with exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Globals {
  std::uint64_t seed = 0;
  std::size_t threads = 1;
  std::string json_path;
};

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path);
  if (!in) throw UsageError(flag + ": cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, sep)) out.push_back(tok);
  return out;
}

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw UsageError(what + ": '" + std::string(s) + "' is not an integer");
  }
  return v;
}

struct LoadedCode {
  codes::LinearCode code;
  int m = 0;
};

/// "rm:r,m" or a generator-matrix file whose length is a power of two.
LoadedCode load_code(const std::string& text) {
  if (text.rfind("rm:", 0) == 0) {
    const auto parts = split(text.substr(3), ',');
    if (parts.size() != 2) throw UsageError("--code: expected rm:r,m, got '" + text + "'");
    const int r = parse_int(parts[0], "--code r");
    const int m = parse_int(parts[1], "--code m");
    if (m < 1 || m > 16 || r < 0 || r > m) throw UsageError("--code: need 0 <= r <= m <= 16 in '" + text + "'");
    return {codes::rm_code(r, m), m};
  }
  f2::BitMatrix g;
  try {
    g = f2::BitMatrix::parse(read_file(text, "--code"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--code: ") + e.what());
  }
  const std::size_t n = g.ncols();
  if (n < 2 || (n & (n - 1)) != 0) throw UsageError("--code: length " + std::to_string(n) + " is not a power of two");
  int m = 0;
  while ((std::size_t{1} << m) < n) ++m;
  return {codes::LinearCode(std::move(g)), m};
}

PairList pairs_from_tokens(const std::vector<std::string>& tokens, const std::function<Qubit(const std::string&)>& conv) {
  if (tokens.empty() || tokens.size() % 2 != 0) {
    throw UsageError("--pairs: expected an even, nonzero number of comma-separated entries");
  }
  PairList pairs;
  for (std::size_t i = 0; i < tokens.size(); i += 2) pairs.push_back({conv(tokens[i]), conv(tokens[i + 1])});
  try {
    validate_pairs(pairs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--pairs: ") + e.what());
  }
  return pairs;
}

/// m-bit labels such as "000,111".
PairList parse_label_pairs(const std::string& text, int m) {
  return pairs_from_tokens(split(text, ','), [m](const std::string& tok) {
    if (tok.size() != static_cast<std::size_t>(m) || tok.find_first_not_of("01") != std::string::npos) {
      throw UsageError("--pairs: '" + tok + "' is not a " + std::to_string(m) + "-bit label");
    }
    return codes::label_from_string(tok);
  });
}

/// Vertex indices such as "0,3,1,2".
PairList parse_vertex_pairs(const std::string& text, std::size_t n) {
  return pairs_from_tokens(split(text, ','), [n](const std::string& tok) {
    const int v = parse_int(tok, "--pairs");
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw UsageError("--pairs: vertex " + tok + " out of range");
    return static_cast<Qubit>(v);
  });
}

netroute::GraphNetwork load_graph(const std::string& path) {
  try {
    return netroute::GraphNetwork::parse(read_file(path, "--graph"));
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--graph: ") + e.what());
  }
}

void emit(const json& doc, const Globals& g, std::ostream& out, const std::string& summary) {
  if (g.json_path.empty()) {
    out << doc.dump(2) << '\n';
    return;
  }
  std::ofstream file(g.json_path);
  if (!file) throw UsageError("--json: cannot write '" + g.json_path + "'");
  file << doc.dump(2) << '\n';
  out << summary << '\n';
}

json labels_json(const std::vector<codes::Label>& labels, int m) {
  json out = json::array();
  for (auto l : labels) out.push_back(codes::label_to_string(l, m));
  return out;
}

// ---------------------------------------------------------------------------

int run_codes_rm(int r, int m, bool distance, bool generators, const Globals& g, std::ostream& out) {
  if (m < 1 || m > 16 || r < 0 || r > m) throw UsageError("--r/--m: need 0 <= r <= m <= 16");
  const auto code = codes::rm_code(r, m);
  json doc = {{"r", r}, {"m", m}, {"n", code.length()}, {"dim", code.dimension()}};
  if (distance) doc["distance"] = codes::min_distance(code);
  if (generators) {
    json rows = json::array();
    for (const auto& row : code.generators().rows()) rows.push_back(row.to_string());
    doc["generators"] = rows;
  }
  emit(doc, g, out, "RM(" + std::to_string(r) + "," + std::to_string(m) + "): n=" + std::to_string(code.length()) +
                        " dim=" + std::to_string(code.dimension()));
  return kPositive;
}

int run_pairability(const std::string& code_spec, const std::string& pairs_text, const Globals& g,
                    std::ostream& out) {
  const auto loaded = load_code(code_spec);
  const auto pairs = parse_label_pairs(pairs_text, loaded.m);
  json doc = {{"pairs", json_io::to_json(pairs)}};
  pairability::PairingPlan plan;
  try {
    plan = pairability::plan_rm_pairing(loaded.code, pairs, loaded.m);
  } catch (const pairability::SearchExhausted& e) {
    doc["verdict"] = false;
    doc["error"] = e.what();
    emit(doc, g, out, "no certificate");
    return kNegative;
  } catch (const pairability::PatternError& e) {
    doc["verdict"] = false;
    doc["error"] = e.what();
    emit(doc, g, out, "no certificate");
    return kNegative;
  }
  doc["c"] = labels_json(plan.c.c, loaded.m);
  doc["pattern"] = json_io::to_json(plan.pattern);
  doc["certificate"] = plan.certificate ? json_io::to_json(*plan.certificate) : json(nullptr);
  doc["verdict"] = plan.certificate.has_value();
  emit(doc, g, out, plan.certificate ? "certificate found" : "no certificate");
  return plan.certificate ? kPositive : kNegative;
}

int run_locc(const std::string& code_spec, const std::string& pairs_text, bool all_branches, const Globals& g,
             std::ostream& out) {
  const auto loaded = load_code(code_spec);
  const auto pairs = parse_label_pairs(pairs_text, loaded.m);
  pairability::PairingPlan plan;
  try {
    plan = pairability::plan_rm_pairing(loaded.code, pairs, loaded.m);
  } catch (const pairability::SearchExhausted&) {
  } catch (const pairability::PatternError&) {
  }
  if (!plan.certificate) {
    emit(json{{"pairs", json_io::to_json(pairs)}, {"verdict", false}, {"error", "no CSS certificate"}}, g, out,
         "no certificate");
    return kNegative;
  }
  const auto transcript = locc::run_protocol(loaded.code, plan.pattern, pairs, *plan.certificate, g.seed);
  json doc = json_io::to_json(transcript);
  doc["pairs"] = json_io::to_json(pairs);
  bool ok = transcript.success();
  if (all_branches) {
    const auto s = locc::run_protocol_all_branches(loaded.code, plan.pattern, pairs, *plan.certificate);
    doc["branches"] = {{"random_outcomes", s.random_outcomes},
                       {"count", s.branches},
                       {"successes", s.successes},
                       {"all_succeeded", s.all_succeeded()}};
    ok = ok && s.all_succeeded();
  }
  emit(doc, g, out, ok ? "all pairs EPR" : "pairing failed");
  return ok ? kPositive : kNegative;
}

int run_route(const std::string& graph_path, const std::string& pairs_text, bool simulate, const Globals& g,
              std::ostream& out) {
  const auto graph = load_graph(graph_path);
  const auto pairs = parse_vertex_pairs(pairs_text, graph.num_vertices());
  const auto plan = netroute::find_paths(graph, pairs, graph.multiplicity());
  json doc = {{"pairs", json_io::to_json(pairs)}, {"p", graph.multiplicity()}};
  doc["plan"] = plan ? json_io::to_json(*plan) : json(nullptr);
  bool ok = plan.has_value();
  if (plan && simulate) {
    const auto run = netroute::pair_over_network(graph, pairs, g.seed);
    doc["transcript"] = json_io::to_json(run.transcript);
    doc["copies_used"] = run.copies_used;
    ok = run.transcript.success();
  }
  doc["verdict"] = ok;
  emit(doc, g, out, ok ? "routed" : "not routable");
  return ok ? kPositive : kNegative;
}

int run_search_wheel(const std::string& bases_text, bool full, const Globals& g, std::ostream& out) {
  std::vector<Basis> bases;
  try {
    bases = search::parse_bases(bases_text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--bases: ") + e.what());
  }
  const auto state = search::graph_state_of(search::wheel_graph());
  json doc = json_io::to_json(search::verify_2_pairable(state, bases, !full, g.threads));
  doc["symmetry"] = search::verify_wheel_symmetry();
  doc["bases"] = bases_text;
  const bool ok = doc["all_succeeded"].get<bool>();
  emit(doc, g, out,
       std::to_string(doc["successes"].get<std::size_t>()) + "/" + std::to_string(doc["checked"].get<std::size_t>()) +
           " tuples pass");
  return ok ? kPositive : kNegative;
}

int run_search_graphs(const std::string& list_path, const std::string& bases_text, const Globals& g,
                      std::ostream& out) {
  std::vector<netroute::GraphNetwork> graphs;
  std::vector<Basis> bases;
  try {
    graphs = search::parse_graph_list(read_file(list_path, "--list"));
    bases = search::parse_bases(bases_text);
  } catch (const UsageError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--list/--bases: ") + e.what());
  }
  json results = json::array();
  std::size_t pairable = 0;
  for (const auto& graph : graphs) {
    const auto report = search::verify_2_pairable(search::graph_state_of(graph), bases, false, g.threads);
    json entry = {{"n", graph.num_vertices()},
                  {"edges", graph.edges()},
                  {"checked", report.tuples.size()},
                  {"successes", report.successes},
                  {"two_pairable", report.all_succeeded()}};
    if (const auto* f = report.first_failure()) entry["first_failure"] = json_io::to_json(f->pairs);
    results.push_back(entry);
    pairable += report.all_succeeded() ? 1 : 0;
  }
  json doc = {{"graphs", results}, {"two_pairable", pairable}, {"checked", graphs.size()}};
  emit(doc, g, out, std::to_string(pairable) + "/" + std::to_string(graphs.size()) + " graphs 2-pairable");
  return pairable == graphs.size() ? kPositive : kNegative;
}

int run_simulate(const std::string& code_spec, const std::string& graph_path, const std::string& measure,
                 bool dump, const Globals& g, std::ostream& out) {
  if (code_spec.empty() == graph_path.empty()) throw UsageError("simulate: give exactly one of --code or --graph");
  auto state = code_spec.empty() ? search::graph_state_of(load_graph(graph_path))
                                 : stabsim::css_state(load_code(code_spec).code);
  auto source = stabsim::OutcomeSource::seeded(g.seed);
  json outcomes = json::array();
  if (!measure.empty()) {
    for (const auto& tok : split(measure, ',')) {
      const auto colon = tok.find(':');
      const auto basis = colon == std::string::npos || colon + 2 != tok.size()
                             ? std::nullopt
                             : basis_from_char(tok[colon + 1]);
      if (!basis) throw UsageError("--measure: '" + tok + "' is not of the form qubit:X|Y|Z");
      const int q = parse_int(std::string_view(tok).substr(0, colon), "--measure");
      if (q < 0 || static_cast<std::size_t>(q) >= state.num_qubits()) {
        throw UsageError("--measure: qubit " + std::to_string(q) + " out of range");
      }
      const auto r = state.measure(static_cast<Qubit>(q), *basis, source);
      outcomes.push_back({{"qubit", q}, {"basis", std::string(1, to_char(*basis))}, {"outcome", r.outcome},
                          {"random", r.random}});
    }
  }
  if (dump && g.json_path.empty()) {
    out << state.dump();
    return kPositive;
  }
  json gens = json::array();
  for (const auto& s : state.stabilizers()) gens.push_back(s.to_string());
  emit(json{{"n", state.num_qubits()}, {"measurements", outcomes}, {"stabilizers", gens}}, g, out,
       std::to_string(state.num_qubits()) + "-qubit state");
  return kPositive;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-pairable stabilizer states: codes, certificates, LOCC protocols, routing and search", "kpair"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "seed for every random measurement outcome")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads for tuple sweeps")->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--json", g.json_path, "write the JSON document to this file and print a summary");

  auto* codes_cmd = app.add_subcommand("codes", "Reed-Muller code parameters");
  codes_cmd->require_subcommand(1);
  auto* rm_cmd = codes_cmd->add_subcommand("rm", "RM(r, m)");
  int r = 0;
  int m = 0;
  bool distance = false;
  bool generators = false;
  rm_cmd->add_option("--r", r, "degree")->required();
  rm_cmd->add_option("--m", m, "number of variables")->required();
  rm_cmd->add_flag("--distance", distance, "compute the minimum distance");
  rm_cmd->add_flag("--generators", generators, "list generator rows");

  std::string code_spec;
  std::string pairs_text;
  auto* pair_cmd = app.add_subcommand("pairability", "CSS certificates");
  pair_cmd->require_subcommand(1);
  auto* verify_cmd = pair_cmd->add_subcommand("verify", "find a pattern and certificate for target pairs");
  verify_cmd->add_option("--code", code_spec, "rm:r,m or a generator-matrix file")->required();
  verify_cmd->add_option("--pairs", pairs_text, "comma-separated m-bit labels a1,b1,a2,b2,...")->required();

  auto* locc_cmd = app.add_subcommand("locc", "LOCC protocol simulation");
  locc_cmd->require_subcommand(1);
  auto* run_cmd = locc_cmd->add_subcommand("run", "run the measure-and-correct protocol");
  bool all_branches = false;
  run_cmd->add_option("--code", code_spec, "rm:r,m or a generator-matrix file")->required();
  run_cmd->add_option("--pairs", pairs_text, "comma-separated m-bit labels")->required();
  run_cmd->add_flag("--all-branches", all_branches, "also check every measurement outcome branch");

  auto* route_cmd = app.add_subcommand("route", "edge-disjoint routing and entanglement swapping");
  std::string graph_path;
  bool simulate = false;
  route_cmd->add_option("--graph", graph_path, "graph file: \"n p\" then one \"i j\" edge per line")->required();
  route_cmd->add_option("--pairs", pairs_text, "comma-separated vertices a1,b1,...")->required();
  route_cmd->add_flag("--simulate", simulate, "run the swapping protocol on the routed paths");

  auto* search_cmd = app.add_subcommand("search", "Pauli-pattern search on graph states");
  search_cmd->require_subcommand(1);
  auto* wheel_cmd = search_cmd->add_subcommand("wheel", "2-pairability of the 10-vertex wheel graph");
  std::string bases_text = "XYZ";
  bool full = false;
  wheel_cmd->add_option("--bases", bases_text, "allowed single-qubit bases")->capture_default_str();
  wheel_cmd->add_flag("--full", full, "sweep all 630 tuples instead of the symmetry-reduced 84");
  auto* graphs_cmd = search_cmd->add_subcommand("graphs", "2-pairability of each graph in a list");
  std::string list_path;
  graphs_cmd->add_option("--list", list_path, "one graph per line: n i-j i-j ...")->required();
  graphs_cmd->add_option("--bases", bases_text, "allowed single-qubit bases")->capture_default_str();

  auto* sim_cmd = app.add_subcommand("simulate", "prepare a state, optionally measure, and print it");
  std::string measure;
  bool dump = false;
  sim_cmd->add_option("--code", code_spec, "CSS state of rm:r,m or a generator-matrix file");
  sim_cmd->add_option("--graph", graph_path, "graph state of a graph file");
  sim_cmd->add_option("--measure", measure, "comma-separated qubit:basis, e.g. 0:X,3:Z");
  sim_cmd->add_flag("--dump", dump, "print one stabilizer generator per line");

  for (auto* sub : {codes_cmd, rm_cmd, pair_cmd, verify_cmd, locc_cmd, run_cmd, route_cmd, search_cmd, wheel_cmd,
                    graphs_cmd, sim_cmd}) {
    sub->fallthrough();
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPositive;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  try {
    if (*rm_cmd) return run_codes_rm(r, m, distance, generators, g, out);
    if (*verify_cmd) return run_pairability(code_spec, pairs_text, g, out);
    if (*run_cmd) return run_locc(code_spec, pairs_text, all_branches, g, out);
    if (*route_cmd) return run_route(graph_path, pairs_text, simulate, g, out);
    if (*wheel_cmd) return run_search_wheel(bases_text, full, g, out);
    if (*graphs_cmd) return run_search_graphs(list_path, bases_text, g, out);
    if (*sim_cmd) return run_simulate(code_spec, graph_path, measure, dump, g, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  err << "error: no command\n";
  return kUsage;
}

}  // namespace kpair::cli
