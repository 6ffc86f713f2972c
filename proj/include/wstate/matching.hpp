// Copyright 2026 The wstate Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WSTATE_MATCHING_HPP
#define WSTATE_MATCHING_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <queue>
#include <utility>
#include <vector>

#include "wstate/graph.hpp"

namespace wstate {

/// A matching is a set of pairwise non-adjacent edge ids, kept ascending.
using Matching = std::vector<EdgeId>;
using MatchingList = std::vector<Matching>;

/// Integer weight per edge id.
using WeightMap = std::map<EdgeId, long long>;

/// Vertex cap for exhaustive perfect-matching enumeration. 8! times small
/// factors stays sub-second; callers may override per call.
inline constexpr int kDefaultEnumerationCap = 16;

namespace detail {

// Maximum cardinality matching by blossom contraction (the classic
// array-based augmenting-path search). Operates on the underlying simple
// graph; parallel edges are matching-equivalent for cardinality purposes.
class BlossomMatcher {
 public:
  explicit BlossomMatcher(const ColouredMultigraph& g)
      : n_(g.order()), adj_(n_) {
    for (int v = 0; v < n_; ++v) adj_[v] = g.neighbours(v);
    match_.assign(n_, -1);
    for (int v = 0; v < n_; ++v)
      if (match_[v] == -1)
        if (int u = find_path(v); u != -1) augment(u);
  }

  // match()[v] is v's partner or -1.
  const std::vector<int>& match() const { return match_; }

 private:
  void augment(int v) {
    while (v != -1) {
      int pv = p_[v], ppv = match_[pv];
      match_[v] = pv;
      match_[pv] = v;
      v = ppv;
    }
  }

  int lca(int a, int b) {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[a];
      seen[a] = 1;
      if (match_[a] == -1) break;
      a = p_[match_[a]];
    }
    for (;;) {
      b = base_[b];
      if (seen[b]) return b;
      b = p_[match_[b]];
    }
  }

  void mark_path(int v, int b, int child) {
    while (base_[v] != b) {
      in_blossom_[base_[v]] = 1;
      in_blossom_[base_[match_[v]]] = 1;
      p_[v] = child;
      child = match_[v];
      v = p_[match_[v]];
    }
  }

  int find_path(int root) {
    used_.assign(n_, 0);
    p_.assign(n_, -1);
    base_.resize(n_);
    for (int i = 0; i < n_; ++i) base_[i] = i;
    used_[root] = 1;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int to : adj_[v]) {
        if (base_[v] == base_[to] || match_[v] == to) continue;
        if (to == root || (match_[to] != -1 && p_[match_[to]] != -1)) {
          int b = lca(v, to);
          in_blossom_.assign(n_, 0);
          mark_path(v, b, to);
          mark_path(to, b, v);
          for (int i = 0; i < n_; ++i)
            if (in_blossom_[base_[i]]) {
              base_[i] = b;
              if (!used_[i]) {
                used_[i] = 1;
                q.push(i);
              }
            }
        } else if (p_[to] == -1) {
          p_[to] = v;
          if (match_[to] == -1) return to;
          used_[match_[to]] = 1;
          q.push(match_[to]);
        }
      }
    }
    return -1;
  }

  int n_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, p_, base_;
  std::vector<char> used_, in_blossom_;
};

}  // namespace detail

/// Maximum-cardinality matching. Parallel edges are collapsed for the
/// search and re-expanded deterministically: the smallest edge id between a
/// matched pair wins.
inline Matching max_matching(const ColouredMultigraph& g) {
  detail::BlossomMatcher m(g);
  Matching out;
  for (int v = 0; v < g.order(); ++v) {
    int w = m.match()[v];
    if (w > v) out.push_back(g.bundle(v, w).front());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool has_perfect_matching(const ColouredMultigraph& g) {
  if (g.order() % 2 != 0) return false;
  return static_cast<int>(max_matching(g).size()) * 2 == g.order();
}

/// All perfect matchings, each as an ascending id set, the list sorted
/// lexicographically. Parallel edges yield distinct matchings. Odd order
/// gives the empty list. Inputs above the cap are rejected.
inline MatchingList enumerate_perfect_matchings(
    const ColouredMultigraph& g, int vertex_cap = kDefaultEnumerationCap) {
  if (g.order() > vertex_cap)
    fail(ErrorKind::CapExceeded,
         "perfect-matching enumeration capped at " + std::to_string(vertex_cap) +
             " vertices (got " + std::to_string(g.order()) + ")");
  MatchingList out;
  if (g.order() % 2 != 0) return out;

  const int n = g.order();
  std::vector<std::vector<const Edge*>> at(n);
  for (const Edge& e : g.edges()) {
    at[e.u].push_back(&e);
    at[e.v].push_back(&e);
  }
  for (auto& v : at)
    std::sort(v.begin(), v.end(),
              [](const Edge* a, const Edge* b) { return a->id < b->id; });

  std::vector<char> covered(n, 0);
  Matching current;
  auto rec = [&](auto&& self) -> void {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!covered[v]) {
        u = v;
        break;
      }
    if (u == -1) {
      out.push_back(current);
      return;
    }
    covered[u] = 1;
    for (const Edge* e : at[u]) {
      int w = e->other(u);
      if (covered[w]) continue;
      covered[w] = 1;
      current.push_back(e->id);
      self(self);
      current.pop_back();
      covered[w] = 0;
    }
    covered[u] = 0;
  };
  rec(rec);

  for (Matching& m : out) std::sort(m.begin(), m.end());
  std::sort(out.begin(), out.end());
  return out;
}

/// Every edge lies in at least one perfect matching. Checked as: connected,
/// a perfect matching exists, and for each edge {u,v} the graph minus those
/// two endpoints still has one (which certifies an extension through the
/// edge). No size cap; this is the blossom-backed route.
inline bool is_matching_covered(const ColouredMultigraph& g) {
  if (!is_connected(g)) return false;
  if (!has_perfect_matching(g)) return false;
  // Parallel edges share the extension certificate; test each pair once.
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges())
    pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (auto [u, v] : pairs)
    if (!has_perfect_matching(delete_vertices(g, {u, v}))) return false;
  return true;
}

/// Deleting any single vertex leaves a graph with a perfect matching. The
/// one-vertex edgeless graph qualifies.
inline bool is_factor_critical(const ColouredMultigraph& g) {
  if (g.order() % 2 == 0) return false;
  for (int v = 0; v < g.order(); ++v)
    if (!has_perfect_matching(delete_vertices(g, {v}))) return false;
  return true;
}

/// Deleting any two distinct vertices leaves a perfect matching. Requires
/// at least 4 vertices.
inline bool is_bicritical(const ColouredMultigraph& g) {
  if (g.order() < 4)
    fail(ErrorKind::Precondition, "bicritical test requires order >= 4");
  if (g.order() % 2 != 0) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (!has_perfect_matching(delete_vertices(g, {u, v}))) return false;
  return true;
}

/// Every perfect matching meets delta(X) in exactly one edge. Enumeration
/// backed; g must be matching-covered and X a non-empty proper subset.
inline bool is_tight_cut(const ColouredMultigraph& g, const std::vector<int>& x,
                         int vertex_cap = kDefaultEnumerationCap) {
  if (!is_matching_covered(g))
    fail(ErrorKind::Precondition, "tight-cut test requires a matching-covered graph");
  std::vector<EdgeId> delta = cut_edges(g, x);
  std::vector<char> in_cut;
  for (const Matching& m : enumerate_perfect_matchings(g, vertex_cap)) {
    int hits = 0;
    for (EdgeId id : m)
      if (std::binary_search(delta.begin(), delta.end(), id)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

inline long long matching_weight(const Matching& m, const WeightMap& w) {
  long long total = 0;
  for (EdgeId id : m) {
    auto it = w.find(id);
    total += (it == w.end() ? 0 : it->second);
  }
  return total;
}

/// Minimum and maximum total weight over all perfect matchings.
inline std::pair<long long, long long> extreme_pm_weights(
    const ColouredMultigraph& g, const WeightMap& w,
    int vertex_cap = kDefaultEnumerationCap) {
  MatchingList all = enumerate_perfect_matchings(g, vertex_cap);
  if (all.empty())
    fail(ErrorKind::Precondition, "extreme_pm_weights: no perfect matching");
  long long lo = std::numeric_limits<long long>::max();
  long long hi = std::numeric_limits<long long>::min();
  for (const Matching& m : all) {
    long long t = matching_weight(m, w);
    lo = std::min(lo, t);
    hi = std::max(hi, t);
  }
  return {lo, hi};
}

}  // namespace wstate

#endif  // WSTATE_MATCHING_HPP
