#include "alphastab/oracle.hpp"

#include <algorithm>
#include <bit>

namespace alphastab {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(int v) { return Mask{1} << v; }

int lowest(Mask m) { return std::countr_zero(m); }

struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;

  explicit MaskGraph(const Graph& g) : n(g.order()), adj(g.order(), 0) {
    for (const Edge& e : g.edges()) toggle(e);
  }
  void toggle(const Edge& e) {
    adj[e.u] ^= bit(e.v);
    adj[e.v] ^= bit(e.u);
  }
  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }
};

void check_budget(int n, int limit, const char* what) {
  if (n > limit || n > 64) {
    throw Error(ErrorCode::budget_exceeded, std::string(what) + ": " + std::to_string(n) +
                                                " vertices exceeds limit " + std::to_string(limit));
  }
}

// Number of cliques in a greedy clique cover of the candidate set; an upper
// bound on the stability number of G[candidates].
int clique_cover_bound(const MaskGraph& g, Mask candidates) {
  int cliques = 0;
  while (candidates) {
    Mask common = candidates;
    while (common) {
      const int v = lowest(common);
      candidates &= ~bit(v);
      common &= g.adj[v];
    }
    ++cliques;
  }
  return cliques;
}

class AlphaSolver {
 public:
  explicit AlphaSolver(const MaskGraph& g) : g_(g) {}

  int solve() {
    best_ = 0;
    search(g_.all(), 0);
    return best_;
  }

 private:
  void search(Mask candidates, int size) {
    // Vertices of degree <= 1 in the candidate graph belong to some maximum
    // stable set; take them greedily.
    bool reduced = true;
    while (reduced && candidates) {
      reduced = false;
      for (Mask rest = candidates; rest; rest &= rest - 1) {
        const int v = lowest(rest);
        if (std::popcount(g_.adj[v] & candidates) <= 1) {
          candidates &= ~(g_.adj[v] | bit(v));
          ++size;
          reduced = true;
          break;
        }
      }
    }
    if (!candidates) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + clique_cover_bound(g_, candidates) <= best_) return;
    int pivot = -1;
    int pivot_degree = -1;
    for (Mask rest = candidates; rest; rest &= rest - 1) {
      const int v = lowest(rest);
      const int d = std::popcount(g_.adj[v] & candidates);
      if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    search(candidates & ~(g_.adj[pivot] | bit(pivot)), size + 1);
    search(candidates & ~bit(pivot), size);
  }

  const MaskGraph& g_;
  int best_ = 0;
};

int alpha_of(const MaskGraph& g) { return AlphaSolver(g).solve(); }

int mu_search(const MaskGraph& g, Mask free, int size, int best) {
  if (size + std::popcount(free) / 2 <= best) return best;
  // Drop vertices with no free neighbor.
  Mask useful = 0;
  for (Mask rest = free; rest; rest &= rest - 1) {
    const int v = lowest(rest);
    if (g.adj[v] & free) useful |= bit(v);
  }
  if (!useful) return std::max(best, size);
  if (size + std::popcount(useful) / 2 <= best) return best;
  const int v = lowest(useful);
  for (Mask nbrs = g.adj[v] & useful; nbrs; nbrs &= nbrs - 1) {
    const int w = lowest(nbrs);
    best = mu_search(g, useful & ~bit(v) & ~bit(w), size + 1, best);
  }
  return mu_search(g, useful & ~bit(v), size, best);
}

int mu_of(const MaskGraph& g) { return mu_search(g, g.all(), 0, 0); }

void enumerate_stable(const MaskGraph& g, Mask candidates, Mask chosen, int size, int target,
                      std::vector<Mask>& out) {
  if (size == target) {
    out.push_back(chosen);
    return;
  }
  if (!candidates || size + clique_cover_bound(g, candidates) < target) return;
  const int v = lowest(candidates);
  enumerate_stable(g, candidates & ~(g.adj[v] | bit(v)), chosen | bit(v), size + 1, target, out);
  enumerate_stable(g, candidates & ~bit(v), chosen, size, target, out);
}

}  // namespace

int oracle_alpha(const Graph& g, const OracleBudget& budget) {
  check_budget(g.order(), budget.max_vertices_exact_alpha, "oracle_alpha");
  return alpha_of(MaskGraph(g));
}

int oracle_mu(const Graph& g, const OracleBudget& budget) {
  check_budget(g.order(), budget.max_vertices_exact_alpha, "oracle_mu");
  return mu_of(MaskGraph(g));
}

std::vector<VertexSet> enumerate_maximum_stable_sets(const Graph& g, const OracleBudget& budget) {
  check_budget(g.order(), budget.max_vertices_enumeration, "enumerate_maximum_stable_sets");
  const MaskGraph mg(g);
  const int target = alpha_of(mg);
  std::vector<Mask> found;
  enumerate_stable(mg, mg.all(), 0, 0, target, found);
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (Mask m : found) {
    VertexSet s;
    for (; m; m &= m - 1) s.push_back(lowest(m));
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Matching> enumerate_maximum_matchings(const Graph& g, const OracleBudget& budget) {
  check_budget(g.order(), budget.max_vertices_enumeration, "enumerate_maximum_matchings");
  if (g.size() > 2 * budget.max_vertices_enumeration) {
    throw Error(ErrorCode::budget_exceeded, "enumerate_maximum_matchings: too many edges");
  }
  const int mu = mu_of(MaskGraph(g));
  const EdgeList& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  std::vector<Matching> out;
  std::vector<Edge> chosen;
  // Include/exclude on edges in sorted order.
  auto recurse = [&](auto&& self, int index, Mask used) -> void {
    const int size = static_cast<int>(chosen.size());
    if (size == mu) {
      out.emplace_back(g.order(), chosen);
      return;
    }
    const int free_vertices = g.order() - std::popcount(used);
    if (size + std::min(m - index, free_vertices / 2) < mu) return;
    const Edge& e = edges[index];
    if (!(used & (bit(e.u) | bit(e.v)))) {
      chosen.push_back(e);
      self(self, index + 1, used | bit(e.u) | bit(e.v));
      chosen.pop_back();
    }
    self(self, index + 1, used);
  };
  recurse(recurse, 0, 0);
  std::sort(out.begin(), out.end(),
            [](const Matching& a, const Matching& b) { return a.edges() < b.edges(); });
  return out;
}

std::optional<Edge> find_alpha_minus_violation(const Graph& g, const OracleBudget& budget) {
  check_budget(g.order(), budget.max_vertices_exact_alpha, "def_alpha_minus");
  MaskGraph mg(g);
  const int base = alpha_of(mg);
  for (const Edge& e : g.edges()) {
    mg.toggle(e);
    const int changed = alpha_of(mg);
    mg.toggle(e);
    if (changed != base) return e;
  }
  return std::nullopt;
}

std::optional<Edge> find_alpha_plus_violation(const Graph& g, const OracleBudget& budget) {
  check_budget(g.order(), budget.max_vertices_exact_alpha, "def_alpha_plus");
  MaskGraph mg(g);
  const int base = alpha_of(mg);
  for (const Edge& e : complement_edges(g)) {
    mg.toggle(e);
    const int changed = alpha_of(mg);
    mg.toggle(e);
    if (changed != base) return e;
  }
  return std::nullopt;
}

bool def_alpha_minus(const Graph& g, const OracleBudget& budget) {
  return !find_alpha_minus_violation(g, budget).has_value();
}

bool def_alpha_plus(const Graph& g, const OracleBudget& budget) {
  return !find_alpha_plus_violation(g, budget).has_value();
}

bool def_alpha_stable(const Graph& g, const OracleBudget& budget) {
  return def_alpha_minus(g, budget) && def_alpha_plus(g, budget);
}

}  // namespace alphastab
