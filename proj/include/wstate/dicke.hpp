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

#ifndef WSTATE_DICKE_HPP
#define WSTATE_DICKE_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wstate/graph.hpp"
#include "wstate/matching.hpp"

namespace wstate {

// Dicke-state checkers over perfect matchings with vertex-colour
// constraints (PMVC). Red monochromatic edges are allowed throughout this
// module: such an edge contributes two red half-edges.

/// A 0/1 vertex colouring; weight = number of red (1) vertices.
struct VertexColouring {
  std::vector<Half> phi;  // indexed like the host graph's vertices

  int weight() const {
    int k = 0;
    for (Half h : phi)
      if (h == Half::Red) ++k;
    return k;
  }
};

/// A coloured multigraph together with the target weight k.
struct DickeInstance {
  ColouredMultigraph graph;
  int k = 0;
};

inline constexpr long long kDefaultForallBudget = 200000;

/// The simple graph G_phi: uv is an edge iff some edge e = uv of g matches
/// the colouring at both endpoints, c(e,u) = phi(u) and c(e,v) = phi(v).
/// Parallel matches collapse; the output is simple and uncoloured (all
/// halves blue).
inline ColouredMultigraph induced_graph(const ColouredMultigraph& g,
                                        const VertexColouring& phi) {
  if (static_cast<int>(phi.phi.size()) != g.order())
    fail(ErrorKind::Precondition, "vertex colouring must assign every vertex");
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges())
    if (e.cu == phi.phi[e.u] && e.cv == phi.phi[e.v])
      pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  ColouredMultigraph out(g.vertex_labels());
  for (auto [u, v] : pairs)
    out.add_edge_indexed(u, v, Half::Blue, Half::Blue);
  return out;
}

/// R(M): the vertices whose matched half-edge is red. |R(M)| equals the
/// matching weight under the 2/1/0 scheme (red-red / bichromatic /
/// blue-blue).
inline int red_vertex_count(const ColouredMultigraph& g, const Matching& m) {
  int count = 0;
  for (EdgeId id : m) {
    const Edge& e = g.edge(id);
    if (e.cu == Half::Red) ++count;
    if (e.cv == Half::Red) ++count;
  }
  return count;
}

inline WeightMap dicke_weights(const ColouredMultigraph& g) {
  WeightMap w;
  for (const Edge& e : g.edges()) {
    switch (classify(e)) {
      case EdgeClass::MonochromaticRed: w[e.id] = 2; break;
      case EdgeClass::Bichromatic: w[e.id] = 1; break;
      case EdgeClass::MonochromaticBlue: w[e.id] = 0; break;
    }
  }
  return w;
}

/// EXISTS-PMVC: every perfect matching M has |R(M)| = k, checked through
/// the weight window (minimum- and maximum-weight perfect matchings both of
/// weight k, with weight 2 per red edge, 1 per bichromatic, 0 per blue).
inline bool exists_pmvc(const ColouredMultigraph& g, int k,
                        int vertex_cap = kDefaultEnumerationCap) {
  auto [lo, hi] = extreme_pm_weights(g, dicke_weights(g), vertex_cap);
  return lo == k && hi == k;
}

struct ForallResult {
  bool holds = true;
  std::optional<VertexColouring> counterexample;  // first failing phi
};

namespace detail {

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  k = std::min(k, n - k);
  for (int i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > (1LL << 60)) return 1LL << 60;
  }
  return r;
}

}  // namespace detail

/// FORALL-PMVC: every colouring with exactly k red vertices is realized by
/// a perfect matching of the induced graph. Colourings are scanned in
/// lexicographic order of their sorted red-vertex sets; the first violator
/// is returned. The number of colourings must stay within the budget.
inline ForallResult forall_pmvc(const ColouredMultigraph& g, int k,
                                long long budget = kDefaultForallBudget) {
  const int n = g.order();
  if (k < 0 || k > n)
    fail(ErrorKind::Precondition, "k must lie between 0 and |V|");
  if (detail::binomial(n, k) > budget)
    fail(ErrorKind::BudgetExceeded,
         "forall-pmvc budget exceeded: C(" + std::to_string(n) + "," +
             std::to_string(k) + ") colourings");

  std::vector<int> red(k);
  for (int i = 0; i < k; ++i) red[i] = i;
  for (;;) {
    VertexColouring phi;
    phi.phi.assign(n, Half::Blue);
    for (int v : red) phi.phi[v] = Half::Red;
    if (!has_perfect_matching(induced_graph(g, phi)))
      return {false, phi};
    // next k-subset in lexicographic order
    if (k == 0) break;
    int i = k - 1;
    while (i >= 0 && red[i] == n - k + i) --i;
    if (i < 0) break;
    ++red[i];
    for (int j = i + 1; j < k; ++j) red[j] = red[j - 1] + 1;
  }
  return {};
}

/// Output of the Vertex-Cover reduction: the Dicke instance plus the map
/// from each original vertex to its two copies and the auxiliary vertices.
struct ReductionOutput {
  DickeInstance instance;
  std::map<Vertex, std::pair<Vertex, Vertex>> copies;  // v -> (v^0, v^1)
  Vertex aux_a, aux_b;
};

/// Builds the Dicke FORALL-PMVC instance for a Vertex-Cover question
/// (H, k): two copies v^0, v^1 per vertex joined by four parallel edges
/// covering every half-colour type, auxiliaries a and b joined to every
/// v^1 the same way, one blue-blue edge between the 0-copies of each edge
/// of H, and no a-b edge. (H, k) has a vertex cover of size <= k iff the
/// instance violates FORALL-PMVC.
inline ReductionOutput vc_reduction(const ColouredMultigraph& h, int k) {
  for (const Edge& e : h.edges())
    for (const Edge& f : h.edges())
      if (e.id < f.id && ColouredMultigraph::same_endpoints(e, f))
        fail(ErrorKind::Precondition, "vc_reduction requires a simple graph");
  for (const Vertex& v : h.vertex_labels())
    if (v == "a" || v == "b")
      fail(ErrorKind::Precondition,
           "vc_reduction reserves the labels 'a' and 'b'");

  ReductionOutput out;
  out.aux_a = "a";
  out.aux_b = "b";
  std::vector<Vertex> labels{"a", "b"};
  for (const Vertex& v : h.vertex_labels()) {
    labels.push_back(v + "^0");
    labels.push_back(v + "^1");
    out.copies[v] = {v + "^0", v + "^1"};
  }
  ColouredMultigraph g(std::move(labels));

  static constexpr std::pair<Half, Half> kTypes[4] = {
      {Half::Blue, Half::Blue},
      {Half::Blue, Half::Red},
      {Half::Red, Half::Blue},
      {Half::Red, Half::Red}};
  auto add_bundle = [&](const Vertex& u, const Vertex& v) {
    for (auto [cu, cv] : kTypes) g.add_edge(u, v, cu, cv);
  };
  for (const Vertex& v : h.vertex_labels()) add_bundle(v + "^0", v + "^1");
  for (const Edge& e : h.edges())
    g.add_edge(h.label(e.u) + "^0", h.label(e.v) + "^0", Half::Blue,
               Half::Blue);
  for (const Vertex& v : h.vertex_labels()) add_bundle("a", v + "^1");
  for (const Vertex& v : h.vertex_labels()) add_bundle("b", v + "^1");

  out.instance = {std::move(g), k};
  return out;
}

/// Exact minimum vertex cover by subset enumeration, smallest witness in
/// lexicographic order. Capped at 16 vertices.
struct VertexCoverResult {
  int size = 0;
  std::vector<Vertex> witness;
};

inline VertexCoverResult min_vertex_cover_bruteforce(
    const ColouredMultigraph& h) {
  if (h.order() > 16)
    fail(ErrorKind::CapExceeded, "vertex-cover oracle capped at 16 vertices");
  const int n = h.order();
  auto covers = [&](unsigned mask) {
    for (const Edge& e : h.edges())
      if (!(mask & (1u << e.u)) && !(mask & (1u << e.v))) return false;
    return true;
  };
  for (int size = 0; size <= n; ++size) {
    // subsets of the given size in lexicographic order of vertex sets
    std::vector<int> pick(size);
    for (int i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      unsigned mask = 0;
      for (int v : pick) mask |= 1u << v;
      if (covers(mask)) {
        VertexCoverResult r;
        r.size = size;
        for (int v : pick) r.witness.push_back(h.label(v));
        return r;
      }
      if (size == 0) break;
      int i = size - 1;
      while (i >= 0 && pick[i] == n - size + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  // covers(all vertices) always holds, so this point is unreachable
  fail(ErrorKind::Precondition, "no vertex cover found");
}

}  // namespace wstate

#endif  // WSTATE_DICKE_HPP
