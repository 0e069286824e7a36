#pragma once

// Independent brute-force reference computations for the tests. These work on
// plain adjacency data and deliberately avoid the library's algorithms.

#include "decyc/decyc.hpp"

#include <functional>
#include <set>

namespace oracle {

using decyc::CubicGraph;
using decyc::EdgeEnds;
using decyc::Multigraph;

struct Plain {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Plain plain(const Multigraph& g) {
  Plain p{g.order(), {}};
  for (int e = 0; e < g.size(); ++e) p.edges.push_back({g.ends(e).u, g.ends(e).v});
  return p;
}

// Components of the subgraph on vertices with keep[v], using edges with use[e].
inline std::vector<int> labels(const Plain& g, const std::vector<bool>& keep, const std::vector<bool>& use, int& count) {
  std::vector<std::vector<int>> adj(g.n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (!use[e] || !keep[u] || !keep[v]) continue;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<int> lab(g.n, -1);
  count = 0;
  for (int s = 0; s < g.n; ++s) {
    if (!keep[s] || lab[s] >= 0) continue;
    std::vector<int> stack{s};
    lab[s] = count;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : adj[x])
        if (lab[y] < 0) {
          lab[y] = count;
          stack.push_back(y);
        }
    }
    ++count;
  }
  return lab;
}

// Is the subgraph induced by keep a forest? (edges == vertices - components)
inline bool induced_forest(const Plain& g, const std::vector<bool>& keep) {
  int verts = 0, edges = 0, comps = 0;
  for (int v = 0; v < g.n; ++v) verts += keep[v];
  for (auto [u, v] : g.edges)
    if (keep[u] && keep[v]) ++edges;
  labels(g, keep, std::vector<bool>(g.edges.size(), true), comps);
  return edges == verts - comps;
}

/// Minimum decycling set size over all vertex subsets.
inline int decycling_number(const Multigraph& mg) {
  auto g = plain(mg);
  int best = g.n;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    int k = std::popcount(mask);
    if (k >= best) continue;
    std::vector<bool> keep(g.n);
    for (int v = 0; v < g.n; ++v) keep[v] = !(mask >> v & 1);
    if (induced_forest(g, keep)) best = k;
  }
  return best;
}

/// Which stable shapes occur among J of size ceil((n+2)/4) with G - J a forest:
/// bit 0 tree + independent J, bit 1 tree + one J edge, bit 2 two trees +
/// independent J.
inline int stable_shapes(const Multigraph& mg) {
  auto g = plain(mg);
  int k = (g.n + 5) / 4, shapes = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    if (std::popcount(mask) != k) continue;
    std::vector<bool> keep(g.n);
    for (int v = 0; v < g.n; ++v) keep[v] = !(mask >> v & 1);
    if (!induced_forest(g, keep)) continue;
    int eJ = 0, comps = 0;
    for (auto [u, v] : g.edges) eJ += !keep[u] && !keep[v];
    labels(g, keep, std::vector<bool>(g.edges.size(), true), comps);
    if (comps == 1 && eJ == 0) shapes |= 1;
    if (comps == 1 && eJ == 1) shapes |= 2;
    if (comps == 2 && eJ == 0) shapes |= 4;
  }
  return shapes;
}

/// Maximum independent S with G - S connected.
inline int max_nonseparating_independent(const Multigraph& mg) {
  auto g = plain(mg);
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    int k = std::popcount(mask);
    if (k <= best) continue;
    bool indep = true;
    for (auto [u, v] : g.edges)
      if ((mask >> u & 1) && (mask >> v & 1)) indep = false;
    if (!indep) continue;
    std::vector<bool> keep(g.n);
    for (int v = 0; v < g.n; ++v) keep[v] = !(mask >> v & 1);
    int comps = 0;
    labels(g, keep, std::vector<bool>(g.edges.size(), true), comps);
    if (comps == 1) best = k;
  }
  return best;
}

// Calls f(tree_mask) for every spanning tree, by brute force over (n-1)-subsets.
inline void spanning_trees(const Plain& g, const std::function<void(const std::vector<bool>&)>& f) {
  int m = static_cast<int>(g.edges.size());
  std::vector<int> pick;
  std::vector<bool> all(g.n, true);
  std::function<void(int)> rec = [&](int start) {
    if (static_cast<int>(pick.size()) == g.n - 1) {
      std::vector<bool> use(m, false);
      for (int e : pick) use[e] = true;
      int comps = 0;
      labels(g, all, use, comps);
      if (comps == 1) f(use);
      return;
    }
    for (int e = start; e < m; ++e) {
      if (m - e < g.n - 1 - static_cast<int>(pick.size())) break;
      if (g.edges[e].first == g.edges[e].second) continue;
      pick.push_back(e);
      rec(e + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

struct Deficiency {
  int xi = 0;
  bool heavy = false;  // some tree with one odd cotree component that is heavy
  long trees = 0;
};

inline Deficiency deficiency(const Multigraph& mg) {
  auto g = plain(mg);
  int m = static_cast<int>(g.edges.size());
  int beta = m - g.n + 1;
  Deficiency d{beta + 1, false, 0};
  std::vector<bool> all(g.n, true);
  spanning_trees(g, [&](const std::vector<bool>& tree) {
    ++d.trees;
    std::vector<bool> co(m);
    for (int e = 0; e < m; ++e) co[e] = !tree[e];
    int comps = 0;
    auto lab = labels(g, all, co, comps);
    std::vector<int> size(comps, 0);
    for (int e = 0; e < m; ++e)
      if (co[e]) ++size[lab[g.edges[e].first]];
    int odd = 0, odd_size = 0;
    for (int s : size)
      if (s % 2) {
        ++odd;
        odd_size = s;
      }
    d.xi = std::min(d.xi, odd);
    if (odd == 1 && odd_size >= 3 && odd_size % 2 == beta % 2) d.heavy = true;
  });
  return d;
}

/// Number of spanning trees by the matrix-tree theorem (Bareiss elimination).
inline long long matrix_tree_count(const Multigraph& mg) {
  auto g = plain(mg);
  int n = g.n - 1;
  if (n <= 0) return 1;
  std::vector<std::vector<long long>> L(n, std::vector<long long>(n, 0));
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    if (u < n) ++L[u][u];
    if (v < n) ++L[v][v];
    if (u < n && v < n) {
      --L[u][v];
      --L[v][u];
    }
  }
  long long prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (L[k][k] == 0) {
      int r = k + 1;
      while (r < n && L[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(L[k], L[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) L[i][j] = (L[i][j] * L[k][k] - L[i][k] * L[k][j]) / prev;
    prev = L[k][k];
  }
  return sign * L[n - 1][n - 1];
}

/// Smallest number of edges whose removal leaves two components that both
/// contain a cycle, by enumerating vertex bipartitions. -1 if none.
inline int min_cycle_separating_cut(const Multigraph& mg) {
  auto g = plain(mg);
  int best = -1;
  std::vector<bool> all(g.edges.size(), true);
  for (std::uint32_t mask = 1; mask + 1 < (1u << g.n); ++mask) {
    if (mask & 1) continue;  // vertex 0 on the complement side
    std::vector<bool> a(g.n), b(g.n);
    for (int v = 0; v < g.n; ++v) {
      a[v] = mask >> v & 1;
      b[v] = !a[v];
    }
    int ca = 0, cb = 0;
    labels(g, a, all, ca);
    labels(g, b, all, cb);
    if (ca != 1 || cb != 1) continue;
    if (induced_forest(g, a) || induced_forest(g, b)) continue;
    int cut = 0;
    for (auto [u, v] : g.edges)
      if (a[u] != a[v]) ++cut;
    if (best < 0 || cut < best) best = cut;
  }
  return best;
}

/// Isomorphism by backtracking over vertex maps with degree and multiplicity checks.
inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
  int n = a.order();
  if (n != b.order() || a.size() != b.size()) return false;
  std::vector<int> map(n, -1), used(n, 0);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w) || a.multiplicity(v, v) != b.multiplicity(w, w)) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = a.multiplicity(u, v) == b.multiplicity(map[u], w);
      if (!ok) continue;
      map[v] = w;
      used[w] = 1;
      if (rec(v + 1)) return true;
      used[w] = 0;
    }
    map[v] = -1;
    return false;
  };
  return rec(0);
}

/// All connected cubic graphs on n vertices up to isomorphism. Graphs are
/// built in breadth-first label order (each vertex's new neighbours take the
/// next free labels), which reaches every isomorphism class; duplicates are
/// removed by canonical code.
inline std::vector<CubicGraph> cubic_census(int n, bool multigraphs) {
  std::vector<int> deg(n, 0);
  std::vector<EdgeEnds> edges;
  std::set<decyc::CanonicalCode> seen;
  std::vector<CubicGraph> out;
  int next = 1;
  std::function<void(int)> fill = [&](int v) {
    if (v == n) {
      if (next != n) return;
      auto g = decyc::build_graph(n, edges);
      if (seen.insert(decyc::canonical_code(g)).second) out.push_back(g);
      return;
    }
    if (v >= next) return;  // disconnected
    if (deg[v] == 3) {
      fill(v + 1);
      return;
    }
    // Loop at v.
    if (multigraphs && deg[v] <= 1) {
      deg[v] += 2;
      edges.push_back({v, v});
      fill(v);
      edges.pop_back();
      deg[v] -= 2;
    }
    // Edge to an existing later vertex w (nondecreasing w keeps choices ordered).
    int last = -1;
    for (const auto& e : edges)
      if (e.u == v && e.v > v) last = std::max(last, e.v);
    for (int w = std::max(v + 1, last); w < next; ++w) {
      if (deg[w] == 3) continue;
      if (!multigraphs && w == last) continue;
      ++deg[v];
      ++deg[w];
      edges.push_back({v, w});
      fill(v);
      edges.pop_back();
      --deg[v];
      --deg[w];
    }
    // Edge to a new vertex.
    if (next < n && std::max(v + 1, last) <= next) {
      int w = next++;
      ++deg[v];
      ++deg[w];
      edges.push_back({v, w});
      fill(v);
      edges.pop_back();
      --deg[v];
      --deg[w];
      --next;
    }
  };
  if (n >= 2) fill(0);
  return out;
}

// Rooted trees as parent arrays (parent[0] = -1), every shape on n vertices.
inline void rooted_trees(int n, std::vector<std::vector<int>>& out) {
  // Level sequences in the Beyer-Hedetniemi successor order.
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = i;
  for (;;) {
    std::vector<int> parent(n, -1), last_at(n + 1, -1);
    for (int i = 0; i < n; ++i) {
      if (i > 0) parent[i] = last_at[L[i] - 1];
      last_at[L[i]] = i;
    }
    out.push_back(parent);
    int p = n - 1;
    while (p > 0 && L[p] == 1) --p;
    if (p == 0) return;
    int q = p - 1;
    while (L[q] != L[p] - 1) --q;
    for (int i = p; i < n; ++i) L[i] = L[i - p + q];
  }
}

inline std::string ahu(const std::vector<std::vector<int>>& adj, int v, int from) {
  std::vector<std::string> kids;
  for (int w : adj[v])
    if (w != from) kids.push_back(ahu(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (auto& k : kids) s += k;
  return s + ")";
}

// Canonical string of a free tree, rooted at its center (or the smaller of
// the two rooted strings at a bicenter).
inline std::string free_tree_code(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  std::vector<int> deg(n);
  std::vector<int> leaves;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) leaves.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(leaves.size());
    std::vector<int> next;
    for (int v : leaves)
      for (int w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    leaves = next;
  }
  if (leaves.size() == 1) return ahu(adj, leaves[0], -1);
  return std::min(ahu(adj, leaves[0], -1), ahu(adj, leaves[1], -1));
}

/// Free trees on n vertices up to isomorphism, as edge lists.
inline std::vector<std::vector<std::pair<int, int>>> free_trees(int n) {
  std::vector<std::vector<int>> rooted;
  rooted_trees(n, rooted);
  std::set<std::string> seen;
  std::vector<std::vector<std::pair<int, int>>> out;
  for (const auto& parent : rooted) {
    std::vector<std::vector<int>> adj(n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
      adj[v].push_back(parent[v]);
      adj[parent[v]].push_back(v);
      edges.push_back({parent[v], v});
    }
    if (seen.insert(free_tree_code(adj)).second) out.push_back(edges);
  }
  return out;
}

/// Every connected simple graph with an even number m <= max_edges of edges
/// (up to isomorphism, with repetitions): a free tree plus extra non-tree
/// edges. Calls f for each.
inline long for_each_connected_even_graph(int max_edges, const std::function<void(const Multigraph&)>& f) {
  long calls = 0;
  for (int n = 2; n <= max_edges + 1; ++n) {
    for (const auto& tree : free_trees(n)) {
      std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
      for (auto [u, v] : tree) adj[u][v] = adj[v][u] = true;
      std::vector<std::pair<int, int>> free_pairs;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!adj[u][v]) free_pairs.push_back({u, v});
      std::vector<int> pick;
      std::function<void(int, int)> rec = [&](int start, int left) {
        if (left == 0) {
          Multigraph g(n);
          for (auto [u, v] : tree) g.add_edge(u, v);
          for (int i : pick) g.add_edge(free_pairs[i].first, free_pairs[i].second);
          ++calls;
          f(g);
          return;
        }
        for (int i = start; i < static_cast<int>(free_pairs.size()); ++i) {
          pick.push_back(i);
          rec(i + 1, left - 1);
          pick.pop_back();
        }
      };
      for (int m = n - 1; m <= max_edges; ++m)
        if (m % 2 == 0 && m - (n - 1) <= static_cast<int>(free_pairs.size())) rec(0, m - (n - 1));
    }
  }
  return calls;
}

}  // namespace oracle
