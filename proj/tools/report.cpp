#include "report.hpp"

#include <sstream>

namespace alphastab {

NLOHMANN_JSON_SERIALIZE_ENUM(GraphClass, {{GraphClass::bipartite, "bipartite"},
                                          {GraphClass::chordal, "chordal"},
                                          {GraphClass::other, "other"}})

NLOHMANN_JSON_SERIALIZE_ENUM(Method, {{Method::matching, "matching"},
                                      {Method::chordal, "chordal"},
                                      {Method::oracle, "oracle"}})

NLOHMANN_JSON_SERIALIZE_ENUM(BistableFailure,
                             {{BistableFailure::none, "none"},
                              {BistableFailure::empty_graph, "empty_graph"},
                              {BistableFailure::not_bipartite, "not_bipartite"},
                              {BistableFailure::no_perfect_matching, "no_perfect_matching"},
                              {BistableFailure::disconnected, "disconnected"},
                              {BistableFailure::forbidden_edge, "forbidden_edge"}})

void to_json(nlohmann::json& j, const Edge& e) { j = nlohmann::json::array({e.u, e.v}); }
void from_json(const nlohmann::json& j, Edge& e) {
  e = Edge(j.at(0).get<Vertex>(), j.at(1).get<Vertex>());
}

void to_json(nlohmann::json& j, const Ear& ear) {
  j = {{"first", ear.first}, {"internal", ear.internal}, {"last", ear.last}};
}
void from_json(const nlohmann::json& j, Ear& ear) {
  j.at("first").get_to(ear.first);
  j.at("internal").get_to(ear.internal);
  j.at("last").get_to(ear.last);
}

void to_json(nlohmann::json& j, const ComponentReport& c) {
  j = {{"vertices", c.vertices},         {"alpha", c.alpha},
       {"mu", c.mu},                     {"alpha_minus", c.alpha_minus},
       {"alpha_plus", c.alpha_plus},     {"alpha_stable", c.alpha_stable},
       {"bistable", c.bistable}};
}
void from_json(const nlohmann::json& j, ComponentReport& c) {
  j.at("vertices").get_to(c.vertices);
  j.at("alpha").get_to(c.alpha);
  j.at("mu").get_to(c.mu);
  j.at("alpha_minus").get_to(c.alpha_minus);
  j.at("alpha_plus").get_to(c.alpha_plus);
  j.at("alpha_stable").get_to(c.alpha_stable);
  j.at("bistable").get_to(c.bistable);
}

}  // namespace alphastab

namespace alphastab::cli {

namespace {

template <typename T>
json optional_to_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from_json(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

json optional_matching(const std::optional<Matching>& m) {
  return m ? matching_to_json(*m) : json(nullptr);
}

std::optional<Matching> optional_matching_from(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return matching_from_json(j.at(key));
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string edges_text(const EdgeList& edges) {
  std::string out;
  for (const Edge& e : edges) out += (out.empty() ? "" : " ") + format_edge(e);
  return out.empty() ? "none" : out;
}

std::string cycle_text(const std::vector<Vertex>& cycle) {
  std::string out;
  for (Vertex v : cycle) out += (out.empty() ? "" : "-") + std::to_string(v);
  return out;
}

}  // namespace

json matching_to_json(const Matching& m) { return {{"order", m.order()}, {"edges", m.edges()}}; }

Matching matching_from_json(const json& j) {
  const auto edges = j.at("edges").get<EdgeList>();
  return Matching(j.at("order").get<int>(), edges);
}

json report_to_json(const StabilityReport& r, const std::string& input, double seconds) {
  json verdicts = {{"alpha_minus", r.alpha_minus.stable},
                   {"alpha_plus", r.alpha_plus.stable},
                   {"alpha_stable", r.alpha_stable},
                   {"bistable", r.bistable.bistable}};
  json alpha_minus = {{"method", r.alpha_minus.method},
                      {"witness_edge", optional_to_json(r.alpha_minus.witness_edge)},
                      {"stability_system", r.alpha_minus.stability_system},
                      {"under_dominated", optional_to_json(r.alpha_minus.under_dominated)}};
  json alpha_plus = {{"method", r.alpha_plus.method},
                     {"matching", optional_matching(r.alpha_plus.matching)},
                     {"core_pair", optional_to_json(r.alpha_plus.core_pair)},
                     {"failing_component", optional_to_json(r.alpha_plus.failing_component)}};
  json ears = nullptr;
  if (r.bistable.ears) ears = ears_to_json(*r.bistable.ears);
  json bistable = {{"degenerate_k2", r.bistable.degenerate_k2},
                   {"failure", r.bistable.failure},
                   {"perfect_matching", optional_matching(r.bistable.perfect_matching)},
                   {"ears", ears},
                   {"other_system", optional_to_json(r.bistable.other_system)},
                   {"forbidden_edge", optional_to_json(r.bistable.forbidden_edge)},
                   {"odd_cycle", r.bistable.odd_cycle}};
  return {{"input", input},
          {"class", r.graph_class},
          {"order", r.order},
          {"size", r.size},
          {"alpha", r.alpha},
          {"mu", r.mu},
          {"konig", r.konig_holds()},
          {"verdicts", verdicts},
          {"certificates",
           {{"alpha_minus", alpha_minus},
            {"alpha_plus", alpha_plus},
            {"bistable", bistable},
            {"reference_matching", optional_matching(r.reference_matching)},
            {"alternating_cycles", r.alternating_cycles},
            {"components", r.per_component}}},
          {"timing", {{"seconds", seconds}}}};
}

StabilityReport report_from_json(const json& j) {
  StabilityReport r;
  j.at("class").get_to(r.graph_class);
  j.at("order").get_to(r.order);
  j.at("size").get_to(r.size);
  j.at("alpha").get_to(r.alpha);
  j.at("mu").get_to(r.mu);
  const json& verdicts = j.at("verdicts");
  const json& certs = j.at("certificates");
  r.alpha_minus.stable = verdicts.at("alpha_minus").get<bool>();
  r.alpha_plus.stable = verdicts.at("alpha_plus").get<bool>();
  r.alpha_stable = verdicts.at("alpha_stable").get<bool>();
  r.bistable.bistable = verdicts.at("bistable").get<bool>();

  const json& minus = certs.at("alpha_minus");
  minus.at("method").get_to(r.alpha_minus.method);
  r.alpha_minus.witness_edge = optional_from_json<Edge>(minus, "witness_edge");
  minus.at("stability_system").get_to(r.alpha_minus.stability_system);
  r.alpha_minus.under_dominated = optional_from_json<Vertex>(minus, "under_dominated");

  const json& plus = certs.at("alpha_plus");
  plus.at("method").get_to(r.alpha_plus.method);
  r.alpha_plus.matching = optional_matching_from(plus, "matching");
  r.alpha_plus.core_pair = optional_from_json<VertexPair>(plus, "core_pair");
  r.alpha_plus.failing_component = optional_from_json<int>(plus, "failing_component");

  const json& bi = certs.at("bistable");
  bi.at("degenerate_k2").get_to(r.bistable.degenerate_k2);
  bi.at("failure").get_to(r.bistable.failure);
  r.bistable.perfect_matching = optional_matching_from(bi, "perfect_matching");
  if (!bi.at("ears").is_null()) r.bistable.ears = ears_from_json(bi.at("ears"));
  r.bistable.other_system = optional_from_json<VertexSet>(bi, "other_system");
  r.bistable.forbidden_edge = optional_from_json<Edge>(bi, "forbidden_edge");
  bi.at("odd_cycle").get_to(r.bistable.odd_cycle);

  r.reference_matching = optional_matching_from(certs, "reference_matching");
  certs.at("alternating_cycles").get_to(r.alternating_cycles);
  certs.at("components").get_to(r.per_component);
  return r;
}

json ears_to_json(const EarDecomposition& dec) { return {{"base", dec.base}, {"ears", dec.ears}}; }

EarDecomposition ears_from_json(const json& j) {
  EarDecomposition dec;
  j.at("base").get_to(dec.base);
  j.at("ears").get_to(dec.ears);
  return dec;
}

json decomposition_to_json(const BistableDecomposition& dec) {
  return {{"pieces", dec.pieces}, {"k2", dec.k2_pieces}, {"singletons", dec.singletons}};
}

BistableDecomposition decomposition_from_json(const json& j) {
  BistableDecomposition dec;
  j.at("pieces").get_to(dec.pieces);
  j.at("k2").get_to(dec.k2_pieces);
  j.at("singletons").get_to(dec.singletons);
  return dec;
}

json harness_to_json(const HarnessReport& r) {
  json claims = json::array();
  for (const ClaimResult& c : r.claims) {
    json entry = {{"name", c.name}, {"instances", c.instances}, {"passed", c.passed}};
    if (c.counterexample) {
      entry["counterexample"] = {{"detail", c.counterexample->detail},
                                 {"graph", c.counterexample->graph}};
    }
    claims.push_back(std::move(entry));
  }
  return {{"claims", claims}, {"seed", r.seed}, {"max_n", r.max_n}, {"sample", r.sample},
          {"passed", r.passed()}};
}

HarnessReport harness_from_json(const json& j) {
  HarnessReport r;
  for (const json& entry : j.at("claims")) {
    ClaimResult c;
    entry.at("name").get_to(c.name);
    entry.at("instances").get_to(c.instances);
    entry.at("passed").get_to(c.passed);
    if (entry.contains("counterexample")) {
      const json& ce = entry.at("counterexample");
      c.counterexample = Counterexample{ce.at("detail").get<std::string>(),
                                        ce.at("graph").get<std::string>()};
    }
    r.claims.push_back(std::move(c));
  }
  j.at("seed").get_to(r.seed);
  j.at("max_n").get_to(r.max_n);
  r.sample = j.value("sample", 0);
  return r;
}

std::string format_report(const StabilityReport& r, const std::string& input) {
  std::ostringstream out;
  out << "input: " << input << "\n"
      << "class: " << to_string(r.graph_class) << "\n"
      << "n=" << r.order << " m=" << r.size << " alpha=" << r.alpha << " mu=" << r.mu
      << " konig: "
      << (r.graph_class != GraphClass::bipartite ? "n/a" : r.konig_holds() ? "holds" : "fails")
      << "\n"
      << "alpha-minus: " << yes_no(r.alpha_minus.stable) << " (" << to_string(r.alpha_minus.method);
  if (r.alpha_minus.witness_edge) {
    out << (r.alpha_minus.method == Method::matching ? ", mandatory edge " : ", critical edge ")
        << format_edge(*r.alpha_minus.witness_edge);
  }
  if (r.alpha_minus.under_dominated) {
    out << ", vertex " << *r.alpha_minus.under_dominated << " under-dominated";
  }
  out << ")\n";
  out << "alpha-plus: " << yes_no(r.alpha_plus.stable) << " (" << to_string(r.alpha_plus.method);
  if (r.alpha_plus.core_pair) {
    out << ", core pair " << r.alpha_plus.core_pair->first << "," << r.alpha_plus.core_pair->second;
  }
  out << ")\n";
  out << "alpha-stable: " << yes_no(r.alpha_stable) << "\n";
  out << "bistable: " << yes_no(r.bistable.bistable);
  if (r.bistable.degenerate_k2) out << " (K2)";
  if (!r.bistable.bistable) out << " (" << to_string(r.bistable.failure) << ")";
  out << "\n";
  out << "certificates:\n";
  if (r.alpha_minus.method == Method::chordal && !r.alpha_minus.stability_system.empty()) {
    out << "  greedy stability system: " << format_vertices(r.alpha_minus.stability_system) << "\n";
  }
  if (r.alpha_plus.matching) {
    out << "  alpha-plus matching: " << edges_text(r.alpha_plus.matching->edges()) << "\n";
  }
  if (r.reference_matching) {
    out << "  reference matching: " << edges_text(r.reference_matching->edges()) << "\n";
  }
  for (std::size_t v = 0; v < r.alternating_cycles.size(); ++v) {
    if (!r.alternating_cycles[v].empty()) {
      out << "  alternating cycle through " << v << ": " << cycle_text(r.alternating_cycles[v]) << "\n";
    }
  }
  if (r.bistable.ears) out << format_ears(*r.bistable.ears);
  if (r.bistable.other_system) {
    out << "  other stability system: " << format_vertices(*r.bistable.other_system) << "\n";
  }
  if (r.bistable.forbidden_edge) {
    out << "  forbidden edge: " << format_edge(*r.bistable.forbidden_edge) << "\n";
  }
  if (!r.bistable.odd_cycle.empty()) out << "  odd cycle: " << cycle_text(r.bistable.odd_cycle) << "\n";
  if (r.per_component.size() > 1) {
    for (const ComponentReport& c : r.per_component) {
      out << "  component " << format_vertices(c.vertices) << ": alpha=" << c.alpha
          << " mu=" << c.mu << " alpha-minus=" << yes_no(c.alpha_minus)
          << " alpha-plus=" << yes_no(c.alpha_plus) << " alpha-stable=" << yes_no(c.alpha_stable)
          << "\n";
    }
  }
  return out.str();
}

std::string format_ears(const EarDecomposition& dec) {
  std::ostringstream out;
  out << "  base " << format_edge(dec.base) << "\n";
  for (const Ear& ear : dec.ears) {
    out << "  ear (" << ear.first << ",[";
    for (std::size_t i = 0; i < ear.internal.size(); ++i) out << (i ? "," : "") << ear.internal[i];
    out << "]," << ear.last << ")\n";
  }
  return out.str();
}

std::string format_decomposition(const BistableDecomposition& dec) {
  std::ostringstream out;
  out << "pieces:";
  if (dec.pieces.empty()) out << " none";
  for (const VertexSet& p : dec.pieces) out << " " << format_vertices(p);
  out << "\nk2:";
  if (dec.k2_pieces.empty()) out << " none";
  for (const Edge& e : dec.k2_pieces) out << " (" << e.u << "," << e.v << ")";
  out << "\n";
  if (!dec.singletons.empty()) out << "singletons: " << format_vertices(dec.singletons) << "\n";
  return out.str();
}

std::string format_harness(const HarnessReport& r) {
  std::ostringstream out;
  for (const ClaimResult& c : r.claims) {
    out << (c.passed ? "PASS " : "FAIL ") << c.name << " (" << c.instances << " instances)\n";
    if (c.counterexample) {
      out << "  " << c.counterexample->detail << "\n";
      std::istringstream lines(c.counterexample->graph);
      for (std::string line; std::getline(lines, line);) out << "  | " << line << "\n";
    }
  }
  out << "seed=" << r.seed << " max_n=" << r.max_n << " sample=" << r.sample << " "
      << (r.passed() ? "all claims pass" : "claims failed") << "\n";
  return out.str();
}

}  // namespace alphastab::cli
