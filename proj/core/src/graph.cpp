#include "alphastab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace alphastab {

namespace {

void check_vertex(int n, Vertex v) {
  if (v < 0 || v >= n) {
    throw Error(ErrorCode::vertex_out_of_range,
                "vertex " + std::to_string(v) + " not in 0.." + std::to_string(n - 1));
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses exactly two non-negative decimal integers separated by whitespace.
bool parse_pair(std::string_view line, long long& x, long long& y) {
  auto read = [&](long long& out) {
    const auto start = line.find_first_not_of(" \t");
    if (start == std::string_view::npos) return false;
    line.remove_prefix(start);
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), out);
    if (ec != std::errc() || ptr == line.data()) return false;
    line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
    return line.empty() || line.front() == ' ' || line.front() == '\t';
  };
  if (!read(x) || !read(y)) return false;
  return trim(line).empty();
}

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
  throw Error(ErrorCode::parse_error, "line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

Graph::Graph(int n) {
  if (n < 0) throw Error(ErrorCode::bad_size, "negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    check_vertex(n, e.u);
    check_vertex(n, e.v);
    if (e.u == e.v) {
      throw Error(ErrorCode::invalid_argument, "loop at vertex " + std::to_string(e.u));
    }
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

int Graph::edge_index(const Edge& e) const {
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::with_edge(const Edge& e) const {
  EdgeList es = edges_;
  es.push_back(e);
  return Graph(order(), es);
}

Graph Graph::without_edge(const Edge& e) const {
  EdgeList es;
  es.reserve(edges_.size());
  for (const Edge& f : edges_) {
    if (f != e) es.push_back(f);
  }
  return Graph(order(), es);
}

ParsedGraph parse_graph(std::string_view text) {
  ParsedGraph out;
  long long n = -1;
  long long m = -1;
  long long seen = 0;
  EdgeList edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = text.find('\n', pos);
    const auto raw = text.substr(pos, end == std::string_view::npos ? text.size() - pos : end - pos);
    pos = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = trim(line.substr(1));
      const auto eq = body.find('=');
      if (eq != std::string_view::npos) {
        out.metadata.emplace_back(std::string(trim(body.substr(0, eq))),
                                  std::string(trim(body.substr(eq + 1))));
      }
      continue;
    }
    long long x = 0;
    long long y = 0;
    if (!parse_pair(line, x, y)) parse_fail(line_no, "expected two integers");
    if (x < 0 || y < 0) parse_fail(line_no, "negative value");
    if (n < 0) {
      if (x > 1'000'000) parse_fail(line_no, "vertex count too large");
      n = x;
      m = y;
      continue;
    }
    if (seen == m) parse_fail(line_no, "more edge lines than declared");
    if (x >= n || y >= n) {
      parse_fail(line_no, "vertex id out of range 0.." + std::to_string(n - 1));
    }
    if (x == y) parse_fail(line_no, "loop edge at vertex " + std::to_string(x));
    edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
    ++seen;
  }
  if (n < 0) parse_fail(line_no, "missing header line \"n m\"");
  if (seen != m) {
    parse_fail(line_no, "expected " + std::to_string(m) + " edge lines, found " +
                            std::to_string(seen));
  }
  out.graph = Graph(static_cast<int>(n), edges);
  out.duplicate_edges = static_cast<int>(edges.size()) - out.graph.size();
  return out;
}

ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::parse_error, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string write_graph(const Graph& g,
                        std::span<const std::pair<std::string, std::string>> metadata) {
  std::ostringstream out;
  for (const auto& [key, value] : metadata) out << "# " << key << '=' << value << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

BipartitionResult bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Walk both tree paths up to their meeting point.
          std::vector<Vertex> left{u};
          std::vector<Vertex> right{w};
          Vertex a = u;
          Vertex b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          BipartitionResult result;
          result.odd_cycle.assign(left.rbegin(), left.rend());
          result.odd_cycle.insert(result.odd_cycle.end(), right.begin(), right.end());
          return result;
        }
      }
    }
  }
  Bipartition b;
  b.side.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    b.side[v] = static_cast<std::uint8_t>(color[v]);
    (color[v] == 0 ? b.class_a : b.class_b).push_back(v);
  }
  BipartitionResult result;
  result.parts = std::move(b);
  return result;
}

Bipartition require_bipartition(const Graph& g) {
  auto result = bipartition(g);
  if (!result.parts) {
    throw Error(ErrorCode::not_bipartite, "odd cycle " + format_vertices(result.odd_cycle));
  }
  return std::move(*result.parts);
}

bool is_valid_bipartition(const Graph& g, const Bipartition& b) {
  const auto n = static_cast<std::size_t>(g.order());
  if (b.side.size() != n || b.class_a.size() + b.class_b.size() != n) return false;
  for (Vertex v : b.class_a) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || b.side[v] != 0) return false;
  }
  for (Vertex v : b.class_b) {
    if (v < 0 || static_cast<std::size_t>(v) >= n || b.side[v] != 1) return false;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return b.side[e.u] != b.side[e.v]; });
}

std::vector<VertexSet> connected_components(const Graph& g) {
  const int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<VertexSet> out;
  for (Vertex root = 0; root < n; ++root) {
    if (comp[root] != -1) continue;
    const int id = static_cast<int>(out.size());
    VertexSet members;
    std::vector<Vertex> stack{root};
    comp[root] = id;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      members.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (comp[w] == -1) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  const int n = g.order();
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  for (Vertex v : keep) check_vertex(n, v);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> new_id(n, -1);
  for (std::size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);
  EdgeList edges;
  for (const Edge& e : g.edges()) {
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) edges.emplace_back(new_id[e.u], new_id[e.v]);
  }
  return {Graph(static_cast<int>(keep.size()), edges), std::move(keep)};
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) {
    check_vertex(g.order(), v);
    gone[v] = true;
  }
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!gone[v]) keep.push_back(v);
  }
  return induced_subgraph(g, keep);
}

DominationCheck is_n_dominating(const Graph& g, std::span<const Vertex> d, int k) {
  std::vector<bool> in_d(g.order(), false);
  for (Vertex v : d) {
    check_vertex(g.order(), v);
    in_d[v] = true;
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (in_d[v]) continue;
    int count = 0;
    for (Vertex w : g.neighbors(v)) count += in_d[w] ? 1 : 0;
    if (count < k) return {false, v};
  }
  return {};
}

VertexSet pendant_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.push_back(v);
  }
  return out;
}

EdgeList complement_edges(const Graph& g) {
  EdgeList out;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

EdgeList bipartite_complement_edges(const Graph& g, const Bipartition& b) {
  EdgeList out;
  for (Vertex a : b.class_a) {
    for (Vertex v : b.class_b) {
      if (!g.has_edge(a, v)) out.emplace_back(a, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_stable_set(const Graph& g, std::span<const Vertex> s) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : s) {
    if (v < 0 || v >= g.order()) return false;
    in[v] = true;
  }
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const Edge& e) { return in[e.u] && in[e.v]; });
}

bool is_vertex_cover(const Graph& g, std::span<const Vertex> cover) {
  std::vector<bool> in(g.order(), false);
  for (Vertex v : cover) {
    if (v < 0 || v >= g.order()) return false;
    in[v] = true;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return in[e.u] || in[e.v]; });
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::string format_edge(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

std::string format_vertices(std::span<const Vertex> vs) {
  std::string out = "(";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(vs[i]);
  }
  return out + ")";
}

}  // namespace alphastab
