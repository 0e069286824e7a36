#pragma once

// Canonical labelling by individualisation and refinement. The code of a
// labelling is the upper triangle of the edge-multiplicity matrix (loops on
// the diagonal); the canonical code is the lexicographically least code over
// all leaves of the search tree, so it does not depend on the input labels.
// Automorphisms found at equal leaves prune sibling branches in the same
// orbit of the pointwise stabiliser of the individualised prefix.

#include "decyc/graph.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace decyc {

inline constexpr int kDefaultIsoCap = 64;

struct CanonicalCode {
  std::vector<std::uint8_t> bytes;

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string s;
    s.reserve(bytes.size() * 2);
    for (auto b : bytes) {
      s.push_back(digits[b >> 4]);
      s.push_back(digits[b & 15]);
    }
    return s;
  }

  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalForm {
  CanonicalCode code;
  std::vector<VertexId> labeling;  // labeling[v] = canonical position of v
};

namespace detail {

class Canonizer {
 public:
  explicit Canonizer(const Multigraph& g) : g_(g), n_(g.order()), mult_(static_cast<std::size_t>(n_) * n_, 0) {
    for (EdgeId e = 0; e < g.size(); ++e) {
      auto [u, v] = g.ends(e);
      ++mult_[u * n_ + v];
      if (u != v) ++mult_[v * n_ + u];
    }
  }

  CanonicalForm run() {
    Partition p;
    if (n_ > 0) {
      p.cells.push_back({});
      for (VertexId v = 0; v < n_; ++v) p.cells[0].push_back(v);
    }
    refine(p);
    std::vector<VertexId> path;
    search(p, path);
    return {best_code_, best_label_};
  }

 private:
  struct Partition {
    std::vector<std::vector<VertexId>> cells;
  };

  int mult(VertexId u, VertexId v) const { return mult_[u * n_ + v]; }

  // Splits cells by the vector of edge counts into every cell until stable.
  void refine(Partition& p) const {
    std::vector<int> cell_of(n_);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t c = 0; c < p.cells.size(); ++c)
        for (VertexId v : p.cells[c]) cell_of[v] = static_cast<int>(c);
      std::vector<std::vector<VertexId>> next;
      for (const auto& cell : p.cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::map<std::vector<int>, std::vector<VertexId>> groups;
        for (VertexId v : cell) {
          std::vector<int> sig(p.cells.size() + 1, 0);
          sig.back() = mult(v, v);
          for (DartId d : g_.darts(v)) ++sig[cell_of[g_.across(d)]];
          groups[sig].push_back(v);
        }
        if (groups.size() > 1) changed = true;
        for (auto& [sig, members] : groups) next.push_back(std::move(members));
      }
      p.cells = std::move(next);
    }
  }

  CanonicalCode code_of(const std::vector<VertexId>& order) const {
    CanonicalCode code;
    code.bytes.reserve(2 + static_cast<std::size_t>(n_) * (n_ + 1) / 2);
    code.bytes.push_back(static_cast<std::uint8_t>(n_ >> 8));
    code.bytes.push_back(static_cast<std::uint8_t>(n_ & 255));
    for (int i = 0; i < n_; ++i)
      for (int j = i; j < n_; ++j) code.bytes.push_back(static_cast<std::uint8_t>(mult(order[i], order[j])));
    return code;
  }

  void search(const Partition& p, std::vector<VertexId>& path) {
    int target = -1;
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
      if (p.cells[c].size() > 1 && (target < 0 || p.cells[c].size() < p.cells[target].size()))
        target = static_cast<int>(c);
    }
    if (target < 0) {
      std::vector<VertexId> order;
      for (const auto& cell : p.cells) order.push_back(cell[0]);
      auto code = code_of(order);
      if (!have_best_ || code < best_code_) {
        have_best_ = true;
        best_code_ = std::move(code);
        best_order_ = order;
        best_label_.assign(n_, 0);
        for (int i = 0; i < n_; ++i) best_label_[order[i]] = i;
      } else if (code == best_code_) {
        std::vector<VertexId> gamma(n_);
        for (int i = 0; i < n_; ++i) gamma[best_order_[i]] = order[i];
        automorphisms_.push_back(std::move(gamma));
      }
      return;
    }
    std::vector<VertexId> explored;
    for (VertexId v : p.cells[target]) {
      if (!explored.empty() && same_orbit(path, explored, v)) continue;
      explored.push_back(v);
      Partition child;
      for (std::size_t c = 0; c < p.cells.size(); ++c) {
        if (static_cast<int>(c) != target) {
          child.cells.push_back(p.cells[c]);
          continue;
        }
        child.cells.push_back({v});
        std::vector<VertexId> rest;
        for (VertexId w : p.cells[c])
          if (w != v) rest.push_back(w);
        child.cells.push_back(std::move(rest));
      }
      refine(child);
      path.push_back(v);
      search(child, path);
      path.pop_back();
    }
  }

  // Is v in the orbit of an explored vertex under the automorphisms found so
  // far that fix every vertex of path?
  bool same_orbit(const std::vector<VertexId>& path, const std::vector<VertexId>& explored, VertexId v) const {
    UnionFind orbits(n_);
    bool any = false;
    for (const auto& gamma : automorphisms_) {
      bool fixes = true;
      for (VertexId x : path)
        if (gamma[x] != x) {
          fixes = false;
          break;
        }
      if (!fixes) continue;
      any = true;
      for (VertexId x = 0; x < n_; ++x) orbits.unite(x, gamma[x]);
    }
    if (!any) return false;
    for (VertexId w : explored)
      if (orbits.find(w) == orbits.find(v)) return true;
    return false;
  }

  const Multigraph& g_;
  int n_;
  std::vector<int> mult_;
  bool have_best_ = false;
  CanonicalCode best_code_;
  std::vector<VertexId> best_order_;
  std::vector<VertexId> best_label_;
  std::vector<std::vector<VertexId>> automorphisms_;
};

}  // namespace detail

inline CanonicalForm canonical_form(const Multigraph& g, int cap = kDefaultIsoCap) {
  require(g.order() <= cap, Errc::TooLarge,
          "canonical code capped at n=" + std::to_string(cap) + ", got " + std::to_string(g.order()));
  return detail::Canonizer(g).run();
}

inline CanonicalCode canonical_code(const Multigraph& g, int cap = kDefaultIsoCap) { return canonical_form(g, cap).code; }

inline bool is_isomorphic(const Multigraph& a, const Multigraph& b, int cap = kDefaultIsoCap) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_code(a, cap) == canonical_code(b, cap);
}

}  // namespace decyc
