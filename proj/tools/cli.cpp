#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <iostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "alphastab/certificates.hpp"
#include "alphastab/generators.hpp"
#include "report.hpp"

namespace alphastab::cli {

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string part;
  std::istringstream in(text);
  while (std::getline(in, part, sep)) {
    if (!part.empty()) parts.push_back(part);
  }
  return parts;
}

int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const int value = std::stoi(text, &used);
    if (used == text.size()) return value;
  } catch (const std::exception&) {
  }
  throw InputError("bad " + what + " '" + text + "'");
}

ParsedGraph load(const std::string& path, std::istream& in) {
  if (path != "-") return read_graph_file(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

// c<k> even cycle, p<k> path, k<p>x<q> complete bipartite, otherwise a file.
Graph graph_token(const std::string& token) {
  if (token.size() >= 2 && (token[0] == 'c' || token[0] == 'p') &&
      std::all_of(token.begin() + 1, token.end(), ::isdigit)) {
    const int k = parse_int(token.substr(1), "size in '" + token + "'");
    return token[0] == 'c' ? even_cycle(k) : path(k);
  }
  if (token.size() >= 4 && token[0] == 'k') {
    const auto x = token.find('x');
    if (x != std::string::npos) {
      return complete_bipartite(parse_int(token.substr(1, x - 1), "class size"),
                                parse_int(token.substr(x + 1), "class size"));
    }
  }
  return read_graph_file(token).graph;
}

EdgeList parse_bridges(const std::string& text) {
  EdgeList bridges;
  for (const std::string& item : split(text, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) throw InputError("bridge '" + item + "' is not u-v");
    bridges.emplace_back(parse_int(item.substr(0, dash), "bridge endpoint"),
                         parse_int(item.substr(dash + 1), "bridge endpoint"));
  }
  return bridges;
}

std::vector<std::string> resolve_claims(const std::string& text) {
  std::vector<std::string> names;
  const std::vector<std::string> all = claim_names(true);
  const std::vector<std::string> visible = claim_names(false);
  for (const std::string& token : split(text, ',')) {
    if (std::find(all.begin(), all.end(), token) != all.end()) {
      names.push_back(token);
      continue;
    }
    bool matched = false;
    for (const std::string& name : visible) {
      if (name.rfind(token, 0) == 0) {
        names.push_back(name);
        matched = true;
      }
    }
    if (!matched) throw InputError("no claim matches '" + token + "'");
  }
  std::vector<std::string> unique;
  for (const std::string& n : names) {
    if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(n);
  }
  return unique;
}

std::vector<std::pair<std::string, std::string>> verdict_metadata(const StabilityReport& r) {
  auto yn = [](bool b) { return std::string(b ? "yes" : "no"); };
  return {{"alpha", std::to_string(r.alpha)},
          {"mu", std::to_string(r.mu)},
          {"alpha_minus", yn(r.alpha_minus.stable)},
          {"alpha_plus", yn(r.alpha_plus.stable)},
          {"alpha_stable", yn(r.alpha_stable)},
          {"bistable", yn(r.bistable.bistable)}};
}

struct AnalyzeArgs {
  std::string path;
  bool json = false;
};

int cmd_analyze(const AnalyzeArgs& a, std::istream& in, std::ostream& out) {
  const ParsedGraph parsed = load(a.path, in);
  const auto start = std::chrono::steady_clock::now();
  const StabilityReport report = is_alpha_stable(parsed.graph);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (auto problem = check_report(parsed.graph, report)) {
    throw std::logic_error("certificate failed re-verification: " + *problem);
  }
  if (a.json) {
    out << report_to_json(report, a.path, seconds).dump(2) << "\n";
  } else {
    out << format_report(report, a.path);
  }
  return kExitOk;
}

struct DecomposeArgs {
  std::string path;
  bool ears = false;
  bool json = false;
};

int cmd_decompose(const DecomposeArgs& a, std::istream& in, std::ostream& out) {
  const Graph g = load(a.path, in).graph;
  if (a.ears) {
    const EarDecomposition dec = ear_decomposition(g);
    if (auto problem = check_ear_decomposition(g, dec)) {
      throw std::logic_error("ear decomposition failed re-verification: " + *problem);
    }
    if (a.json) {
      json j = ears_to_json(dec);
      j["input"] = a.path;
      out << j.dump(2) << "\n";
    } else {
      out << "ears of " << a.path << "\n" << format_ears(dec);
    }
    return kExitOk;
  }
  const BistableDecomposition dec = bistable_decomposition(g);
  if (auto problem = check_decomposition(g, dec)) {
    throw std::logic_error("decomposition failed re-verification: " + *problem);
  }
  if (a.json) {
    json j = decomposition_to_json(dec);
    j["input"] = a.path;
    json graphs = json::array();
    for (const VertexSet& piece : dec.pieces) {
      graphs.push_back(write_graph(induced_subgraph(g, piece).graph));
    }
    j["piece_graphs"] = graphs;
    out << j.dump(2) << "\n";
  } else {
    out << format_decomposition(dec);
  }
  return kExitOk;
}

struct GenerateArgs {
  std::string family;
  std::vector<int> params;
  std::uint64_t seed = 1;
  std::string templ = "c4";
  std::string pieces;
  std::string bridges;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out) {
  auto need = [&](std::size_t count) {
    if (a.params.size() != count) {
      throw InputError(a.family + " takes " + std::to_string(count) + " numeric parameter(s)");
    }
  };
  std::vector<std::pair<std::string, std::string>> meta{{"family", a.family}};
  std::string params;
  for (int p : a.params) params += (params.empty() ? "" : ",") + std::to_string(p);
  Graph g;
  std::optional<StabilityReport> report;
  if (a.family == "cycle") {
    need(1);
    g = even_cycle(a.params[0]);
  } else if (a.family == "complete-bipartite") {
    need(2);
    g = complete_bipartite(a.params[0], a.params[1]);
  } else if (a.family == "path") {
    need(1);
    g = path(a.params[0]);
  } else if (a.family == "tree") {
    need(1);
    g = random_tree(a.params[0], a.seed);
  } else if (a.family == "ear-growth") {
    need(1);
    const EarGrowth grown = ear_growth(a.seed, a.params[0]);
    g = grown.graph;
    meta.emplace_back("ears", std::to_string(grown.decomposition.ears.size()));
  } else if (a.family == "substitute") {
    need(0);
    std::vector<Graph> pieces;
    for (const std::string& token : split(a.pieces, ',')) pieces.push_back(graph_token(token));
    const Construction c = substitute(graph_token(a.templ), pieces);
    g = c.graph;
    report = c.report;
    params = "template=" + a.templ + ";pieces=" + a.pieces;
  } else if (a.family == "union") {
    need(0);
    std::vector<Graph> pieces;
    for (const std::string& token : split(a.pieces, ',')) pieces.push_back(graph_token(token));
    const Construction c = union_connect(pieces, parse_bridges(a.bridges));
    g = c.graph;
    report = c.report;
    params = "pieces=" + a.pieces + ";bridges=" + a.bridges;
  } else {
    throw InputError("unknown family '" + a.family +
                     "' (cycle, complete-bipartite, path, tree, ear-growth, substitute, union)");
  }
  if (!report) report = is_alpha_stable(g);
  meta.emplace_back("params", params);
  meta.emplace_back("seed", std::to_string(a.seed));
  for (auto& kv : verdict_metadata(*report)) meta.push_back(std::move(kv));
  out << write_graph(g, meta);
  return kExitOk;
}

struct VerifyArgs {
  int max_n = 6;
  std::string claims;
  std::uint64_t seed = 1;
  int sample = 0;
  int threads = 0;
  bool json = false;
  bool list = false;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  if (a.list) {
    for (const Claim& c : registered_claims()) {
      if (!c.hidden) out << c.name << "  " << c.summary << "\n";
    }
    return kExitOk;
  }
  HarnessOptions options;
  options.max_n = a.max_n;
  options.seed = a.seed;
  options.sample = a.sample;
  options.threads = a.threads > 0 ? a.threads
                                  : std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
  if (!a.claims.empty()) options.claims = resolve_claims(a.claims);
  const HarnessReport report = theorem_harness(options);
  if (a.json) {
    out << harness_to_json(report).dump(2) << "\n";
  } else {
    out << format_harness(report);
  }
  return report.passed() ? kExitOk : kExitClaimFailed;
}

bool precondition_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::unsupported_class:
    case ErrorCode::not_bipartite:
    case ErrorCode::not_alpha_plus:
    case ErrorCode::not_bistable:
    case ErrorCode::no_perfect_matching:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Stability-number robustness of graphs under edge deletion and addition"};
  app.name("alphastab");
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Decide alpha-minus/plus/stable and bistability");
  analyze_cmd->add_option("path", analyze.path, "Edge-list file, or - for standard input")->required();
  analyze_cmd->add_flag("--json", analyze.json, "Emit a JSON report");

  DecomposeArgs decompose;
  auto* decompose_cmd =
      app.add_subcommand("decompose", "Bistable decomposition, or an ear decomposition with --ears");
  decompose_cmd->add_option("path", decompose.path, "Edge-list file, or - for standard input")->required();
  decompose_cmd->add_flag("--ears", decompose.ears, "Ear decomposition of a bistable graph");
  decompose_cmd->add_flag("--json", decompose.json, "Emit JSON");

  GenerateArgs generate;
  auto* generate_cmd = app.add_subcommand("generate", "Write a generated graph as an edge list");
  generate_cmd->add_option("family", generate.family,
                           "cycle, complete-bipartite, path, tree, ear-growth, substitute, union")
      ->required();
  generate_cmd->add_option("params", generate.params, "Numeric parameters of the family");
  generate_cmd->add_option("--seed", generate.seed, "Random seed");
  generate_cmd->add_option("--template", generate.templ, "Substitution template (c<k>, p<k>, k<p>x<q> or file)");
  generate_cmd->add_option("--pieces", generate.pieces, "Comma-separated piece graphs");
  generate_cmd->add_option("--bridges", generate.bridges, "Comma-separated u-v bridges in global ids");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Check every registered claim on small graphs");
  verify_cmd->add_option("--max-n", verify.max_n, "Largest order (exhaustive up to 8, sampled up to 14)");
  verify_cmd->add_option("--claims", verify.claims, "Comma-separated claim names or prefixes");
  verify_cmd->add_option("--seed", verify.seed, "Sampling seed");
  verify_cmd->add_option("--sample", verify.sample, "Samples per sampled claim")->check(CLI::NonNegativeNumber);
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (default: all cores)");
  verify_cmd->add_flag("--json", verify.json, "Emit a JSON report");
  verify_cmd->add_flag("--list", verify.list, "List claim names and exit");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front();
    out << (sub ? sub->help() : app.help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << "run with --help for usage\n";
    return kExitInputError;
  }

  const bool decomposing = decompose_cmd->parsed();
  try {
    if (analyze_cmd->parsed()) return cmd_analyze(analyze, in, out);
    if (decomposing) return cmd_decompose(decompose, in, out);
    if (generate_cmd->parsed()) return cmd_generate(generate, out);
    return cmd_verify(verify, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    if (precondition_error(e.code()) && (decomposing || e.code() == ErrorCode::unsupported_class)) {
      err << "precondition failed: " << e.what() << "\n";
      return kExitUnsupported;
    }
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

}  // namespace alphastab::cli
