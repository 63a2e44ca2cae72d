#include "alphastab/enumeration.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "alphastab/chordal.hpp"

namespace alphastab {

namespace {

constexpr int kMaxExhaustiveOrder = 8;
constexpr int kMaxTreeOrder = 12;

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  void run() {
    std::vector<int> colors(n_);
    for (Vertex v = 0; v < n_; ++v) colors[v] = g_.degree(v);
    search(rank(colors));
  }

  const std::string& code() const { return best_code_; }
  // best_order_[position] = vertex
  const std::vector<Vertex>& order() const { return best_order_; }

 private:
  static std::vector<int> rank(const std::vector<int>& keys) {
    std::vector<int> sorted = keys;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(keys.size());
    for (std::size_t i = 0; i < keys.size(); ++i) {
      out[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) -
                                sorted.begin());
    }
    return out;
  }

  std::vector<int> refine(std::vector<int> colors) const {
    int classes = *std::max_element(colors.begin(), colors.end()) + 1;
    while (true) {
      std::vector<std::vector<int>> signature(n_);
      for (Vertex v = 0; v < n_; ++v) {
        signature[v].push_back(colors[v]);
        std::vector<int> nbr;
        for (Vertex w : g_.neighbors(v)) nbr.push_back(colors[w]);
        std::sort(nbr.begin(), nbr.end());
        signature[v].insert(signature[v].end(), nbr.begin(), nbr.end());
      }
      std::vector<std::vector<int>> sorted = signature;
      std::sort(sorted.begin(), sorted.end());
      sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
      for (Vertex v = 0; v < n_; ++v) {
        colors[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), signature[v]) -
                                     sorted.begin());
      }
      const int next = static_cast<int>(sorted.size());
      if (next == classes) return colors;
      classes = next;
    }
  }

  void search(const std::vector<int>& input) {
    const std::vector<int> colors = refine(input);
    std::vector<int> cell_size(n_, 0);
    for (int c : colors) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n_; ++c) {
      if (cell_size[c] > 1) {
        target = c;
        break;
      }
    }
    if (target == -1) {
      leaf(colors);
      return;
    }
    std::vector<Vertex> explored;
    for (Vertex v = 0; v < n_; ++v) {
      if (colors[v] != target || in_explored_orbit(v, explored)) continue;
      explored.push_back(v);
      std::vector<int> split(n_);
      for (Vertex x = 0; x < n_; ++x) {
        split[x] = 2 * colors[x] + (colors[x] == target && x != v ? 1 : 0);
      }
      prefix_.push_back(v);
      search(rank(split));
      prefix_.pop_back();
    }
  }

  // Orbits under the known automorphisms that fix the current prefix
  // pointwise; children in an explored orbit give the same leaves.
  bool in_explored_orbit(Vertex v, const std::vector<Vertex>& explored) const {
    if (explored.empty() || automorphisms_.empty()) return false;
    std::vector<Vertex> root(n_);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](Vertex x) {
      while (root[x] != x) x = root[x] = root[root[x]];
      return x;
    };
    for (const auto& aut : automorphisms_) {
      const bool fixes_prefix =
          std::all_of(prefix_.begin(), prefix_.end(), [&](Vertex p) { return aut[p] == p; });
      if (!fixes_prefix) continue;
      for (Vertex x = 0; x < n_; ++x) root[find(x)] = find(aut[x]);
    }
    return std::any_of(explored.begin(), explored.end(),
                       [&](Vertex e) { return find(e) == find(v); });
  }

  void leaf(const std::vector<int>& colors) {
    std::vector<Vertex> order(n_);
    for (Vertex v = 0; v < n_; ++v) order[colors[v]] = v;
    std::string code;
    code.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
    for (int i = 0; i < n_; ++i) {
      for (int j = i + 1; j < n_; ++j) code.push_back(g_.has_edge(order[i], order[j]) ? '1' : '0');
    }
    if (best_order_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_order_ = std::move(order);
    } else if (code == best_code_) {
      std::vector<Vertex> aut(n_);
      for (int i = 0; i < n_; ++i) aut[order[i]] = best_order_[i];
      automorphisms_.push_back(std::move(aut));
    }
  }

  const Graph& g_;
  int n_;
  std::string best_code_;
  std::vector<Vertex> best_order_;
  std::vector<Vertex> prefix_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> position(g.order());
  for (std::size_t i = 0; i < order.size(); ++i) position[order[i]] = static_cast<Vertex>(i);
  EdgeList edges;
  for (const Edge& e : g.edges()) edges.emplace_back(position[e.u], position[e.v]);
  return Graph(g.order(), edges);
}

Graph add_vertex(const Graph& g, unsigned neighborhood) {
  EdgeList edges = g.edges();
  const Vertex fresh = g.order();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (neighborhood & (1u << v)) edges.emplace_back(v, fresh);
  }
  return Graph(g.order() + 1, edges);
}

void check_order(int n, int limit) {
  if (n < 0 || n > limit) {
    throw Error(ErrorCode::budget_exceeded,
                "exhaustive enumeration supports 0.." + std::to_string(limit) + " vertices");
  }
}

std::vector<Graph> dedupe_sorted(const std::vector<Graph>& candidates) {
  std::map<std::string, Graph> unique;
  for (const Graph& g : candidates) {
    Canonizer c(g);
    c.run();
    if (!unique.contains(c.code())) unique.emplace(c.code(), relabel(g, c.order()));
  }
  std::vector<Graph> out;
  out.reserve(unique.size());
  for (auto& [code, g] : unique) out.push_back(std::move(g));
  return out;
}

// Biadjacency columns as row bitmasks.
using Columns = std::vector<std::uint32_t>;

Columns canonical_columns(const std::vector<std::uint32_t>& rows, int p, int q,
                          std::vector<int>& best_perm) {
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  Columns best;
  do {
    Columns cols(q, 0);
    for (int i = 0; i < p; ++i) {
      const std::uint32_t row = rows[perm[i]];
      for (int j = 0; j < q; ++j) {
        if (row & (1u << j)) cols[j] |= 1u << (p - 1 - i);
      }
    }
    std::sort(cols.begin(), cols.end());
    if (best.empty() || cols < best) {
      best = std::move(cols);
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

bool biadjacency_connected(const std::vector<std::uint32_t>& rows, int p, int q) {
  // Flood fill over rows and columns.
  std::uint32_t row_seen = 1;
  std::uint32_t col_seen = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    for (int i = 0; i < p; ++i) {
      if (!(row_seen & (1u << i))) continue;
      if ((rows[i] | col_seen) != col_seen) {
        col_seen |= rows[i];
        grew = true;
      }
    }
    for (int i = 0; i < p; ++i) {
      if (!(row_seen & (1u << i)) && (rows[i] & col_seen)) {
        row_seen |= 1u << i;
        grew = true;
      }
    }
  }
  const std::uint32_t all_rows = (1u << p) - 1;
  const std::uint32_t all_cols = (1u << q) - 1;
  return row_seen == all_rows && col_seen == all_cols;
}

Graph graph_from_columns(const Columns& cols, int p, int q) {
  EdgeList edges;
  for (int j = 0; j < q; ++j) {
    for (int i = 0; i < p; ++i) {
      if (cols[j] & (1u << (p - 1 - i))) edges.emplace_back(i, p + j);
    }
  }
  return Graph(p + q, edges);
}

std::mutex cache_mutex;

}  // namespace

std::string canonical_code(const Graph& g) {
  Canonizer c(g);
  c.run();
  return std::to_string(g.order()) + ":" + c.code();
}

Graph canonical_graph(const Graph& g) {
  Canonizer c(g);
  c.run();
  return relabel(g, c.order());
}

const std::vector<Graph>& all_graphs(int n) {
  check_order(n, kMaxExhaustiveOrder);
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> result;
  if (n <= 1) {
    result.emplace_back(n);
  } else {
    const std::vector<Graph>& smaller = all_graphs(n - 1);
    std::vector<Graph> candidates;
    candidates.reserve(smaller.size() << (n - 1));
    for (const Graph& g : smaller) {
      for (unsigned s = 0; s < (1u << (n - 1)); ++s) candidates.push_back(add_vertex(g, s));
    }
    result = dedupe_sorted(candidates);
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

long long enumerate_connected_bipartite(int n, const GraphSink& sink) {
  check_order(n, kMaxExhaustiveOrder);
  if (n == 0) return 0;
  if (n == 1) {
    sink(Graph(1));
    return 1;
  }
  long long count = 0;
  for (int p = 1; 2 * p <= n; ++p) {
    const int q = n - p;
    std::set<Columns> seen;
    std::vector<std::uint32_t> rows(p);
    const std::uint64_t total = std::uint64_t{1} << (p * q);
    std::vector<int> perm;
    std::vector<Columns> found;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
      for (int i = 0; i < p; ++i) {
        rows[i] = static_cast<std::uint32_t>((bits >> (i * q)) & ((1u << q) - 1));
      }
      if (!biadjacency_connected(rows, p, q)) continue;
      Columns code = canonical_columns(rows, p, q, perm);
      if (p == q) {
        std::vector<std::uint32_t> transposed(p, 0);
        for (int i = 0; i < p; ++i) {
          for (int j = 0; j < q; ++j) {
            if (rows[i] & (1u << j)) transposed[j] |= 1u << i;
          }
        }
        code = std::min(code, canonical_columns(transposed, p, q, perm));
      }
      if (seen.insert(code).second) found.push_back(std::move(code));
    }
    std::sort(found.begin(), found.end());
    for (const Columns& cols : found) {
      sink(graph_from_columns(cols, p, q));
      ++count;
    }
  }
  return count;
}

const std::vector<Graph>& connected_bipartite_graphs(int n) {
  check_order(n, kMaxExhaustiveOrder);
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> result;
  enumerate_connected_bipartite(n, [&](const Graph& g) { result.push_back(g); });
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

std::vector<Graph> bipartite_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n)) {
    if (bipartition(g).bipartite()) out.push_back(g);
  }
  return out;
}

std::vector<Graph> chordal_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n)) {
    if (is_chordal(g).chordal()) out.push_back(g);
  }
  return out;
}

std::vector<Graph> connected_graphs(int n) {
  std::vector<Graph> out;
  for (const Graph& g : all_graphs(n)) {
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

const std::vector<Graph>& trees(int n) {
  check_order(n, kMaxTreeOrder);
  if (n == 0) throw Error(ErrorCode::bad_size, "a tree needs at least one vertex");
  static std::map<int, std::vector<Graph>> cache;
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::vector<Graph> result;
  if (n == 1) {
    result.emplace_back(1);
  } else {
    std::vector<Graph> candidates;
    for (const Graph& t : trees(n - 1)) {
      for (Vertex v = 0; v < t.order(); ++v) candidates.push_back(add_vertex(t, 1u << v));
    }
    result = dedupe_sorted(candidates);
  }
  std::lock_guard lock(cache_mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

Graph sample_connected_bipartite(int n, std::mt19937_64& rng) {
  if (n < 2) throw Error(ErrorCode::bad_size, "sampler needs at least 2 vertices");
  const int p = std::uniform_int_distribution<int>(1, n - 1)(rng);
  std::bernoulli_distribution coin(0.5);
  while (true) {
    EdgeList edges;
    for (Vertex a = 0; a < p; ++a) {
      for (Vertex b = p; b < n; ++b) {
        if (coin(rng)) edges.emplace_back(a, b);
      }
    }
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
}

}  // namespace alphastab
