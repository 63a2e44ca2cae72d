#include "alphastab/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

namespace alphastab {

namespace {

void require_size(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::bad_size, what);
}

Construction with_report(Graph g) {
  Construction out{std::move(g), {}};
  out.report = is_alpha_stable(out.graph);
  return out;
}

void require_bistable(const Graph& g, const std::string& what) {
  const BistableResult r = is_bistable(g);
  if (!r.bistable) {
    throw Error(ErrorCode::not_bistable,
                what + " is not bistable (" + std::string(to_string(r.failure)) + ")");
  }
}

}  // namespace

Graph even_cycle(int k) {
  require_size(k >= 4 && k % 2 == 0, "even cycle needs an even length >= 4");
  EdgeList edges;
  for (Vertex v = 0; v < k; ++v) edges.emplace_back(v, (v + 1) % k);
  return Graph(k, edges);
}

Graph complete_bipartite(int p, int q) {
  require_size(p >= 1 && q >= 1, "complete bipartite graph needs both sides non-empty");
  EdgeList edges;
  for (Vertex a = 0; a < p; ++a) {
    for (Vertex b = p; b < p + q; ++b) edges.emplace_back(a, b);
  }
  return Graph(p + q, edges);
}

Graph path(int k) {
  require_size(k >= 2, "path needs at least 2 vertices");
  EdgeList edges;
  for (Vertex v = 0; v + 1 < k; ++v) edges.emplace_back(v, v + 1);
  return Graph(k, edges);
}

Graph random_tree(int k, std::uint64_t seed) {
  require_size(k >= 2, "tree needs at least 2 vertices");
  if (k == 2) return path(2);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, k - 1);
  std::vector<Vertex> code(k - 2);
  for (Vertex& c : code) c = pick(rng);
  std::vector<int> degree(k, 1);
  for (Vertex c : code) ++degree[c];
  EdgeList edges;
  for (Vertex c : code) {
    const Vertex leaf = static_cast<Vertex>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
    edges.emplace_back(leaf, c);
    --degree[leaf];
    --degree[c];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < k; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return Graph(k, edges);
}

EarGrowth ear_growth(std::uint64_t seed, int target) {
  require_size(target >= 2 && target % 2 == 0, "ear growth needs an even target >= 2");
  std::mt19937_64 rng(seed);
  std::geometric_distribution<int> half(0.5);
  EarGrowth out;
  out.seed = seed;
  out.decomposition.base = Edge(0, 1);
  EdgeList edges{Edge(0, 1)};
  std::set<std::pair<Vertex, Vertex>> present{{0, 1}};
  std::vector<Vertex> class_a{0};
  std::vector<Vertex> class_b{1};
  int n = 2;
  auto uniform = [&](const std::vector<Vertex>& from) {
    return from[std::uniform_int_distribution<std::size_t>(0, from.size() - 1)(rng)];
  };
  auto adjacent = [&](Vertex a, Vertex b) { return present.count({std::min(a, b), std::max(a, b)}) > 0; };
  auto add_edge = [&](Vertex u, Vertex v) {
    edges.emplace_back(u, v);
    present.insert({std::min(u, v), std::max(u, v)});
  };
  while (n < target) {
    int internal = std::min(2 * half(rng), target - n);
    Ear ear;
    if (internal == 0) {
      // Rejection sampling keeps the chord uniform over open pairs; the scan
      // only runs when the graph is close to complete bipartite.
      const std::size_t pairs = class_a.size() * class_b.size();
      if (present.size() == pairs) {
        internal = 2;
      } else if (2 * present.size() <= pairs) {
        do {
          ear.first = uniform(class_a);
          ear.last = uniform(class_b);
        } while (adjacent(ear.first, ear.last));
      } else {
        std::vector<std::pair<Vertex, Vertex>> open;
        for (Vertex a : class_a) {
          for (Vertex b : class_b) {
            if (!adjacent(a, b)) open.emplace_back(a, b);
          }
        }
        std::tie(ear.first, ear.last) = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
      }
    }
    if (internal > 0) {
      ear.first = uniform(class_a);
      ear.last = uniform(class_b);
      for (int i = 0; i < internal; ++i) {
        const Vertex fresh = n++;
        ear.internal.push_back(fresh);
        (i % 2 == 0 ? class_b : class_a).push_back(fresh);
      }
    }
    Vertex prev = ear.first;
    for (Vertex v : ear.internal) {
      add_edge(prev, v);
      prev = v;
    }
    add_edge(prev, ear.last);
    out.decomposition.ears.push_back(std::move(ear));
  }
  out.graph = Graph(n, edges);
  return out;
}

Graph detail::attach_even_path_unchecked(const Graph& h, int k,
                                         const std::vector<PathAttachment>& attachments) {
  const int base = h.order();
  EdgeList edges = h.edges();
  for (int i = 0; i + 1 < k; ++i) edges.emplace_back(base + i, base + i + 1);
  for (const PathAttachment& at : attachments) {
    if (at.position < 0 || at.position >= k || at.host < 0 || at.host >= base) {
      throw Error(ErrorCode::vertex_out_of_range, "attachment out of range");
    }
    edges.emplace_back(base + at.position, at.host);
  }
  return Graph(base + k, edges);
}

Construction attach_even_path(const Graph& h, int k, const std::vector<PathAttachment>& attachments) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::parity_violation, "path must have an even number >= 2 of vertices");
  }
  require_bistable(h, "host graph");
  for (int end : {0, k - 1}) {
    const bool attached = std::any_of(attachments.begin(), attachments.end(),
                                      [&](const PathAttachment& at) { return at.position == end; });
    if (!attached) {
      throw Error(ErrorCode::endpoint_not_attached,
                  "path end " + std::to_string(end) + " has no edge into the host graph");
    }
  }
  Graph g = detail::attach_even_path_unchecked(h, k, attachments);
  const BipartitionResult bip = bipartition(g);
  if (!bip.bipartite()) {
    throw Error(ErrorCode::not_bipartite, "attachments create odd cycle " + format_vertices(bip.odd_cycle));
  }
  return with_report(std::move(g));
}

Vertex lowest_port(int, bool, const VertexSet& candidates) { return candidates.front(); }

std::vector<Vertex> piece_offsets(const std::vector<Graph>& pieces) {
  std::vector<Vertex> offsets;
  Vertex next = 0;
  for (const Graph& piece : pieces) {
    offsets.push_back(next);
    next += piece.order();
  }
  return offsets;
}

Construction substitute(const Graph& templ, const std::vector<Graph>& pieces,
                        const PortChooser& choose) {
  require_bistable(templ, "template");
  const int p = templ.order() / 2;
  if (p < 2) throw Error(ErrorCode::bad_size, "template needs at least 4 vertices");
  if (static_cast<int>(pieces.size()) != p) {
    throw Error(ErrorCode::bad_size, "template with " + std::to_string(p) + " pairs needs " +
                                         std::to_string(p) + " pieces, got " +
                                         std::to_string(pieces.size()));
  }
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    require_bistable(pieces[i], "piece " + std::to_string(i));
  }
  const Bipartition tb = require_bipartition(templ);
  return with_report(
      detail::substitute_unchecked(templ, maximum_matching(templ, tb), pieces, choose));
}

Graph detail::substitute_unchecked(const Graph& templ, const Matching& pairing,
                                   const std::vector<Graph>& pieces, const PortChooser& choose) {
  const Bipartition tb = require_bipartition(templ);
  if (!pairing.is_perfect() || pairing.order() != templ.order()) {
    throw Error(ErrorCode::not_perfect, "template pairing is not a perfect matching");
  }
  std::vector<Bipartition> piece_parts;
  for (const Graph& piece : pieces) piece_parts.push_back(require_bipartition(piece));
  // pair_of[v] = index i of the matched pair x_i y_i holding template vertex v
  std::vector<int> pair_of(templ.order(), -1);
  int next_pair = 0;
  for (Vertex x : tb.class_a) pair_of[x] = pair_of[pairing.partner(x)] = next_pair++;

  const std::vector<Vertex> offsets = piece_offsets(pieces);
  EdgeList edges;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const Edge& e : pieces[i].edges()) edges.emplace_back(offsets[i] + e.u, offsets[i] + e.v);
  }
  for (const Edge& e : templ.edges()) {
    const Vertex x = tb.in_a(e.u) ? e.u : e.v;
    const Vertex y = x == e.u ? e.v : e.u;
    const int i = pair_of[x];
    const int j = pair_of[y];
    if (i == j) continue;
    const Vertex a = choose(i, true, piece_parts[i].class_a);
    const Vertex b = choose(j, false, piece_parts[j].class_b);
    edges.emplace_back(offsets[i] + a, offsets[j] + b);
  }
  return Graph(offsets.back() + pieces.back().order(), edges);
}

Construction union_connect(const std::vector<Graph>& pieces, const EdgeList& bridges) {
  if (pieces.empty()) throw Error(ErrorCode::bad_size, "union needs at least one piece");
  const std::vector<Vertex> offsets = piece_offsets(pieces);
  EdgeList edges;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const Edge& e : pieces[i].edges()) edges.emplace_back(offsets[i] + e.u, offsets[i] + e.v);
  }
  edges.insert(edges.end(), bridges.begin(), bridges.end());
  Graph g(offsets.back() + pieces.back().order(), edges);
  const BipartitionResult bip = bipartition(g);
  if (!bip.bipartite()) {
    throw Error(ErrorCode::not_bipartite, "bridges create odd cycle " + format_vertices(bip.odd_cycle));
  }
  if (!is_connected(g)) throw Error(ErrorCode::not_connected, "bridges leave the union disconnected");
  return with_report(std::move(g));
}

}  // namespace alphastab
