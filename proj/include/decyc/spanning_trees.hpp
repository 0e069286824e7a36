#pragma once

// Exhaustive spanning-tree enumeration by include/exclude recursion on edge
// ids. An edge is included when it joins two different components of the
// partial forest; it is excluded only if the graph stays connected without it.

#include "decyc/graph.hpp"

#include <cstdint>
#include <functional>

namespace decyc {

inline constexpr int kSpanningTreeCap = 14;

namespace detail {

class TreeWalker {
 public:
  TreeWalker(const Multigraph& g, const std::function<bool(const EdgeSet&)>& visit)
      : g_(g), visit_(visit), dsu_(g.order()), tree_(g.empty_edge_set()), excluded_(g.empty_edge_set()) {}

  // Returns false once the visitor asked to stop.
  bool run(EdgeId e, int placed) {
    if (placed == g_.order() - 1) return visit_(tree_);
    if (e == g_.size()) return true;
    auto [u, v] = g_.ends(e);
    if (dsu_.find(u) == dsu_.find(v)) return run(e + 1, placed);

    auto cp = dsu_.checkpoint();
    dsu_.unite(u, v);
    tree_.insert(e);
    bool go_on = run(e + 1, placed + 1);
    tree_.erase(e);
    dsu_.rollback(cp);
    if (!go_on) return false;

    excluded_.insert(e);
    if (components(g_, nullptr, &excluded_).count == 1) go_on = run(e + 1, placed);
    excluded_.erase(e);
    return go_on;
  }

 private:
  const Multigraph& g_;
  const std::function<bool(const EdgeSet&)>& visit_;
  UnionFind dsu_;
  EdgeSet tree_;
  EdgeSet excluded_;
};

}  // namespace detail

/// Calls visit(tree) once per spanning tree until it returns false. Works on
/// any connected multigraph and applies no size cap; returns false if stopped.
inline bool for_each_spanning_tree_unbounded(const Multigraph& g, const std::function<bool(const EdgeSet&)>& visit) {
  require(is_connected(g), Errc::Disconnected, "spanning trees of a disconnected graph");
  if (g.order() == 0) return true;
  detail::TreeWalker walker(g, visit);
  return walker.run(0, 0);
}

/// Spanning trees of a cubic graph; refuses graphs above the desk-scale cap.
inline bool for_each_spanning_tree(const CubicGraph& g, const std::function<bool(const EdgeSet&)>& visit) {
  require(g.order() <= kSpanningTreeCap, Errc::TooLarge,
          "spanning-tree enumeration is capped at n=" + std::to_string(kSpanningTreeCap));
  return for_each_spanning_tree_unbounded(g, visit);
}

inline std::vector<EdgeSet> spanning_trees(const CubicGraph& g) {
  std::vector<EdgeSet> out;
  for_each_spanning_tree(g, [&](const EdgeSet& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

inline std::int64_t count_spanning_trees(const Multigraph& g) {
  std::int64_t count = 0;
  for_each_spanning_tree_unbounded(g, [&](const EdgeSet&) {
    ++count;
    return true;
  });
  return count;
}

}  // namespace decyc
