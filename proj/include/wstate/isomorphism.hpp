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

#ifndef WSTATE_ISOMORPHISM_HPP
#define WSTATE_ISOMORPHISM_HPP

#include <algorithm>
#include <array>
#include <map>
#include <tuple>
#include <vector>

#include "wstate/graph.hpp"

namespace wstate {

namespace detail {

// Per-vertex invariant used to prune the permutation search: degree, number
// of red/blue halves, and the sorted multiset of parallel-bundle sizes.
inline std::tuple<int, int, int, std::vector<int>> iso_signature(
    const ColouredMultigraph& g, int v) {
  int deg = 0, reds = 0, blues = 0;
  std::map<int, int> bundles;
  for (const Edge& e : g.edges()) {
    if (e.u != v && e.v != v) continue;
    ++deg;
    Half h = e.colour_at(v);
    (h == Half::Red ? reds : blues)++;
    bundles[e.other(v)]++;
  }
  std::vector<int> sizes;
  for (auto& [w, n] : bundles) sizes.push_back(n);
  std::sort(sizes.begin(), sizes.end());
  return {deg, reds, blues, sizes};
}

// Canonical key for an edge under a mapping of endpoints: endpoints sorted,
// colours carried along, so that (u,v,cu,cv) and (v,u,cv,cu) coincide.
using EdgeKey = std::tuple<int, int, int, int>;

inline EdgeKey edge_key(int a, int b, Half ca, Half cb) {
  if (a <= b) return {a, b, static_cast<int>(ca), static_cast<int>(cb)};
  return {b, a, static_cast<int>(cb), static_cast<int>(ca)};
}

inline std::vector<EdgeKey> edge_multiset(const ColouredMultigraph& g,
                                          const std::vector<int>& map) {
  std::vector<EdgeKey> keys;
  keys.reserve(g.edges().size());
  for (const Edge& e : g.edges())
    keys.push_back(edge_key(map[e.u], map[e.v], e.cu, e.cv));
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace detail

/// Colour- and multiplicity-preserving isomorphism test, brute force over
/// vertex bijections with signature pruning. Intended for fixture-sized
/// graphs; rejects inputs above 12 vertices.
inline bool are_isomorphic(const ColouredMultigraph& g1,
                           const ColouredMultigraph& g2) {
  constexpr int kMaxVertices = 12;
  if (g1.order() > kMaxVertices || g2.order() > kMaxVertices)
    fail(ErrorKind::CapExceeded, "isomorphism test capped at 12 vertices");
  if (g1.order() != g2.order() || g1.size() != g2.size()) return false;

  const int n = g1.order();
  std::vector<std::tuple<int, int, int, std::vector<int>>> sig1(n), sig2(n);
  for (int v = 0; v < n; ++v) {
    sig1[v] = detail::iso_signature(g1, v);
    sig2[v] = detail::iso_signature(g2, v);
  }
  {
    auto s1 = sig1, s2 = sig2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return false;
  }

  std::vector<int> identity(g2.order());
  for (int v = 0; v < g2.order(); ++v) identity[v] = v;
  const auto target = detail::edge_multiset(g2, identity);

  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto backtrack = [&](auto&& self, int v) -> bool {
    if (v == n) return detail::edge_multiset(g1, map) == target;
    for (int w = 0; w < n; ++w) {
      if (used[w] || sig1[v] != sig2[w]) continue;
      map[v] = w;
      used[w] = 1;
      if (self(self, v + 1)) return true;
      used[w] = 0;
      map[v] = -1;
    }
    return false;
  };
  return backtrack(backtrack, 0);
}

}  // namespace wstate

#endif  // WSTATE_ISOMORPHISM_HPP
