#pragma once

// JSON certificate envelopes and their independent verifier. The verifier
// recounts everything from the embedded graph and data using its own
// union-find passes rather than the classifiers that produced the data.

#include "decyc/decomposition.hpp"
#include "decyc/io.hpp"

#include <json.hpp>

#include <cstdio>

namespace decyc {

using Json = nlohmann::json;

inline constexpr std::string_view kCertificateSchema = "decyc.certificate/1";

/// FNV-1a (64 bit) over the edge-list text of g.
inline std::string graph_hash(const Multigraph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : to_edgelist(g)) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json graph_json(const Multigraph& g) {
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.size(); ++e) edges.push_back({g.ends(e).u, g.ends(e).v});
  return {{"n", g.order()}, {"edges", edges}};
}

inline Multigraph graph_from_json(const Json& j) {
  int n = j.at("n").get<int>();
  require(n > 0, Errc::Malformed, "graph order must be positive");
  Multigraph g(n);
  for (const auto& e : j.at("edges")) {
    int u = e.at(0).get<int>(), v = e.at(1).get<int>();
    require(u >= 0 && u < n && v >= 0 && v < n, Errc::Malformed, "edge endpoint out of range");
    g.add_edge(u, v);
  }
  return g;
}

template <class Set>
Json ids_json(const Set& s) {
  return Json(s.to_vector());
}

inline Json partition_json(const DecyclingPartition& p) {
  return {{"kind", "partition"},
          {"A", ids_json(p.A)},
          {"J", ids_json(p.J)},
          {"class", std::string(to_string(p.cls.type))},
          {"stable", p.cls.stable},
          {"coherent", p.cls.coherent},
          {"e_J", p.cls.e_J},
          {"components_A", p.cls.components_A}};
}

inline Json xuong_json(const XuongCertificate& c) {
  Json comps = Json::array();
  for (const auto& cc : c.components)
    comps.push_back({{"edges", ids_json(cc.edges)}, {"parity", cc.odd() ? "odd" : "even"}, {"heavy", cc.heavy}});
  return {{"kind", "xuong"}, {"tree_edges", ids_json(c.tree)}, {"components", comps}, {"odd_count", c.odd_count}};
}

inline Json nebesky_json(const NebeskyWitness& w) {
  return {{"kind", "nebesky"}, {"witness", {{"X", ids_json(w.X)}, {"ec", w.ec}, {"oc", w.oc}}}};
}

/// Negative existence answer backed by complete enumeration; `query` is
/// "stable" or "coherent".
inline Json exhaustion_json(std::string_view query, const ExhaustionProof& p) {
  return {{"kind", "exhaustion"}, {"query", query}, {"method", p.method}, {"examined", p.examined}, {"complete", p.complete}};
}

inline Json decomposition_json(const DecompositionTree& t) {
  Json nodes = Json::array();
  for (const auto& node : t.nodes) {
    Json j = {{"graph", graph_json(node.graph)}};
    if (node.cut) {
      j["cut"] = ids_json(*node.cut);
      j["children"] = {node.child1, node.child2};
    }
    nodes.push_back(j);
  }
  Json codes = Json::array();
  for (const auto& c : t.codes) codes.push_back(c.hex());
  return {{"kind", "decomposition"}, {"nodes", nodes}, {"factors", t.factor_nodes}, {"codes", codes}};
}

inline Json make_envelope(const Multigraph& g, std::string_view operation, Json result) {
  return {{"schema", kCertificateSchema},
          {"graph", graph_json(g)},
          {"graph_hash", graph_hash(g)},
          {"operation", operation},
          {"result", std::move(result)}};
}

struct Verdict {
  bool pass = false;
  std::string reason;
};

namespace detail {

inline Verdict ok() { return {true, "ok"}; }
inline Verdict bad(std::string r) { return {false, std::move(r)}; }

inline std::vector<int> id_list(const Json& j, int universe, const char* what) {
  require(j.is_array(), Errc::Malformed, std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& x : j) {
    require(x.is_number_integer(), Errc::Malformed, std::string(what) + " entries must be integers");
    int v = x.get<int>();
    require(v >= 0 && v < universe, Errc::Malformed, std::string(what) + " entry out of range");
    out.push_back(v);
  }
  return out;
}

inline Verdict verify_partition(const Multigraph& g, const Json& r) {
  int n = g.order();
  auto A = id_list(r.at("A"), n, "A");
  auto J = id_list(r.at("J"), n, "J");
  std::vector<int> side(n, -1);
  for (int v : A) {
    if (side[v] != -1) return bad("vertex " + std::to_string(v) + " listed twice");
    side[v] = 0;
  }
  for (int v : J) {
    if (side[v] != -1) return bad("vertex " + std::to_string(v) + " listed twice");
    side[v] = 1;
  }
  for (int v = 0; v < n; ++v)
    if (side[v] == -1) return bad("vertex " + std::to_string(v) + " in neither part");
  UnionFind dsu(n);
  int a_edges = 0, e_J = 0;
  for (EdgeId e = 0; e < g.size(); ++e) {
    auto [u, v] = g.ends(e);
    if (side[u] == 0 && side[v] == 0) {
      if (!dsu.unite(u, v)) return bad("A is not acyclic");
      ++a_edges;
    } else if (side[u] == 1 && side[v] == 1) {
      ++e_J;
    }
  }
  int comps = static_cast<int>(A.size()) - a_edges;
  if (r.at("e_J").get<int>() != e_J) return bad("e_J is " + std::to_string(e_J));
  if (r.at("components_A").get<int>() != comps) return bad("A has " + std::to_string(comps) + " components");
  std::string cls = "Other";
  int lb = (n + 5) / 4;
  if (static_cast<int>(J.size()) == lb) {
    if (comps == 1 && e_J == 0) cls = "TreeIndependent";
    else if (comps == 1 && e_J == 1) cls = "TreeNearIndependent";
    else if (comps == 2 && e_J == 0) cls = "TwoTreesIndependent";
  }
  if (r.at("class").get<std::string>() != cls) return bad("class recounts as " + cls);
  if (r.contains("coherent") && r.at("coherent").get<bool>() != (cls != "Other" && comps == 1))
    return bad("coherent flag disagrees");
  if (r.contains("stable") && r.at("stable").get<bool>() != (cls != "Other")) return bad("stable flag disagrees");
  return ok();
}

inline Verdict verify_xuong(const Multigraph& g, const Json& r) {
  int n = g.order(), m = g.size();
  auto tree = id_list(r.at("tree_edges"), m, "tree_edges");
  if (static_cast<int>(tree.size()) != n - 1) return bad("tree has the wrong number of edges");
  std::vector<bool> in_tree(m, false);
  UnionFind dsu(n);
  for (EdgeId e : tree) {
    if (in_tree[e]) return bad("tree edge repeated");
    in_tree[e] = true;
    if (!dsu.unite(g.ends(e).u, g.ends(e).v)) return bad("tree edges contain a cycle");
  }
  // Cotree components by union-find over cotree edges.
  UnionFind co(n);
  for (EdgeId e = 0; e < m; ++e)
    if (!in_tree[e]) co.unite(g.ends(e).u, g.ends(e).v);
  std::map<int, std::vector<EdgeId>> by_root;
  for (EdgeId e = 0; e < m; ++e)
    if (!in_tree[e]) by_root[co.find(g.ends(e).u)].push_back(e);
  int beta = m - n + 1, odd = 0;
  std::map<std::vector<EdgeId>, std::pair<bool, bool>> truth;  // edges -> (odd, heavy)
  for (auto& [root, edges] : by_root) {
    int s = static_cast<int>(edges.size());
    truth[edges] = {s % 2 == 1, s >= 3 && s % 2 == beta % 2};
    if (s % 2) ++odd;
  }
  const auto& comps = r.at("components");
  if (comps.size() != truth.size()) return bad("cotree has " + std::to_string(truth.size()) + " components");
  for (const auto& c : comps) {
    auto edges = id_list(c.at("edges"), m, "component edges");
    std::sort(edges.begin(), edges.end());
    auto it = truth.find(edges);
    if (it == truth.end()) return bad("listed component is not a cotree component");
    if ((c.at("parity").get<std::string>() == "odd") != it->second.first) return bad("component parity is wrong");
    if (c.at("heavy").get<bool>() != it->second.second) return bad("heavy flag is wrong");
  }
  if (r.contains("odd_count") && r.at("odd_count").get<int>() != odd) return bad("odd count is " + std::to_string(odd));
  return ok();
}

inline Verdict verify_nebesky(const Multigraph& g, const Json& r) {
  const auto& w = r.at("witness");
  auto X = id_list(w.at("X"), g.size(), "X");
  std::vector<bool> removed(g.size(), false);
  for (EdgeId e : X) removed[e] = true;
  UnionFind dsu(g.order());
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!removed[e]) dsu.unite(g.ends(e).u, g.ends(e).v);
  std::map<int, std::pair<int, int>> ve;  // root -> (vertices, edges)
  for (VertexId v = 0; v < g.order(); ++v) ve[dsu.find(v)].first++;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (!removed[e]) ve[dsu.find(g.ends(e).u)].second++;
  int ec = 0, oc = 0;
  for (auto& [root, c] : ve) ((c.second - c.first + 1) % 2 == 0 ? ec : oc)++;
  if (w.at("ec").get<int>() != ec) return bad("ec recounts as " + std::to_string(ec));
  if (w.at("oc").get<int>() != oc) return bad("oc recounts as " + std::to_string(oc));
  if (ec + 2 * oc - 2 - static_cast<int>(X.size()) <= 0) return bad("witness margin is not positive");
  return ok();
}

inline Verdict verify_exhaustion(const Multigraph& g, const Json& r) {
  if (!r.at("complete").get<bool>()) return bad("enumeration was not complete");
  CubicGraph c(g);
  auto query = r.at("query").get<std::string>();
  PartitionQuery q;
  if (query == "coherent") q = coherent_query(c);
  else if (query == "stable") q = stable_query(c);
  else return bad("unknown query '" + query + "'");
  q.node_budget = std::numeric_limits<std::int64_t>::max();
  auto res = search_partition(c, q);
  if (res.found) return bad("re-run found a partition");
  return ok();
}

inline Verdict verify_decomposition(const Multigraph& g, const Json& r) {
  const auto& nodes = r.at("nodes");
  require(nodes.is_array() && !nodes.empty(), Errc::Malformed, "decomposition needs nodes");
  std::vector<CubicGraph> graphs;
  for (const auto& node : nodes) graphs.emplace_back(graph_from_json(node.at("graph")));
  if (!is_isomorphic(graphs[0], CubicGraph(g))) return bad("root node is not the input graph");
  std::vector<CanonicalCode> leaf_codes;
  DecompositionTree t;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    t.nodes.emplace_back(graphs[i]);
    const auto& node = nodes[i];
    if (!node.contains("cut")) {
      if (!nontrivial_three_cuts(graphs[i]).empty()) return bad("factor " + std::to_string(i) + " has a nontrivial 3-cut");
      t.factor_nodes.push_back(static_cast<int>(i));
      continue;
    }
    auto cut_ids = id_list(node.at("cut"), graphs[i].size(), "cut");
    EdgeSet cut(static_cast<std::size_t>(graphs[i].size()), cut_ids);
    auto ch = node.at("children");
    int c1 = ch.at(0).get<int>(), c2 = ch.at(1).get<int>();
    require(c1 > 0 && c2 > 0 && c1 < static_cast<int>(nodes.size()) && c2 < static_cast<int>(nodes.size()), Errc::Malformed,
            "child index out of range");
    ThreeCutSplit split;
    try {
      split = split_at_three_cut(graphs[i], cut);
    } catch (const Error& e) {
      return bad("node " + std::to_string(i) + ": " + e.what());
    }
    if (!(split.side1.graph() == graphs[c1].graph()) || !(split.side2.graph() == graphs[c2].graph()))
      return bad("node " + std::to_string(i) + " does not split into its children");
    auto& tn = t.nodes.back();
    tn.cut = cut;
    tn.child1 = c1;
    tn.child2 = c2;
    tn.root1 = split.root1;
    tn.root2 = split.root2;
    tn.vmap1 = split.vmap1;
    tn.vmap2 = split.vmap2;
    tn.emap1 = split.emap1;
    tn.emap2 = split.emap2;
  }
  auto rec = recombine(t, 0);
  if (!recombination_matches(t.nodes[0].graph, rec)) return bad("factors do not recombine to the input");
  if (r.contains("codes")) {
    std::vector<std::string> listed, actual;
    for (const auto& c : r.at("codes")) listed.push_back(c.get<std::string>());
    for (int i : t.factor_nodes) actual.push_back(canonical_code(graphs[i]).hex());
    std::sort(listed.begin(), listed.end());
    std::sort(actual.begin(), actual.end());
    if (listed != actual) return bad("factor codes disagree");
  }
  return ok();
}

}  // namespace detail

inline Verdict verify_result(const Multigraph& g, const Json& r) {
  auto kind = r.at("kind").get<std::string>();
  if (kind == "partition") return detail::verify_partition(g, r);
  if (kind == "xuong") return detail::verify_xuong(g, r);
  if (kind == "nebesky") return detail::verify_nebesky(g, r);
  if (kind == "exhaustion") return detail::verify_exhaustion(g, r);
  if (kind == "decomposition") return detail::verify_decomposition(g, r);
  if (kind == "unknown" || kind == "report") return detail::ok();  // nothing to check
  if (kind == "bundle") {
    for (const auto& part : r.at("parts")) {
      auto v = verify_result(g, part);
      if (!v.pass) return {false, part.value("kind", "?") + ": " + v.reason};
    }
    return detail::ok();
  }
  fail(Errc::Malformed, "unknown result kind '" + kind + "'");
}

/// Re-checks an envelope from its embedded graph. Structural problems raise
/// Malformed; mathematical ones give a failing verdict with a reason.
inline Verdict verify_certificate(const Json& env) {
  try {
    require(env.is_object(), Errc::Malformed, "envelope must be an object");
    require(env.value("schema", "") == kCertificateSchema, Errc::Malformed, "unknown schema");
    auto g = graph_from_json(env.at("graph"));
    if (env.at("graph_hash").get<std::string>() != graph_hash(g)) return {false, "graph hash mismatch"};
    for (VertexId v = 0; v < g.order(); ++v)
      if (g.degree(v) != 3) return {false, "graph is not cubic"};
    return verify_result(g, env.at("result"));
  } catch (const Json::exception& e) {
    fail(Errc::Malformed, e.what());
  }
}

}  // namespace decyc
