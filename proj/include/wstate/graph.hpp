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

#ifndef WSTATE_GRAPH_HPP
#define WSTATE_GRAPH_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wstate/error.hpp"

namespace wstate {

/// Half-edge colour: each edge carries one colour per endpoint.
enum class Half : unsigned char { Blue = 0, Red = 1 };

enum class EdgeClass { MonochromaticBlue, MonochromaticRed, Bichromatic };

using Vertex = std::string;
using EdgeId = int;

/// One edge of a coloured multigraph. Endpoints are vertex indices into the
/// host graph's sorted label table; `cu` is the half-colour at `u`, `cv` at
/// `v`. `id` is stable across subgraph extraction. `is_virtual` marks edges
/// introduced by a block decomposition (never present in an original input).
struct Edge {
  int u = -1;
  int v = -1;
  Half cu = Half::Blue;
  Half cv = Half::Blue;
  EdgeId id = -1;
  bool is_virtual = false;

  /// Half-colour at endpoint index `w` (which must be u or v).
  Half colour_at(int w) const {
    if (w == u) return cu;
    if (w == v) return cv;
    fail(ErrorKind::Precondition, "colour_at: vertex not an endpoint");
  }
  int other(int w) const { return w == u ? v : u; }
};

/// Half-edge 2-coloured multigraph: an ordered set of vertex labels plus an
/// indexed list of coloured edges. Parallel edges are allowed, loops are not.
///
/// Vertex labels are kept sorted, so vertex *indices* compare exactly like
/// the labels do lexicographically; all tie-breaking in this library relies
/// on that. Instances are immutable after construction in practice (the
/// builders below produce new values), so they are safe to share across
/// threads without locking.
class ColouredMultigraph {
 public:
  ColouredMultigraph() = default;

  explicit ColouredMultigraph(std::vector<Vertex> labels) {
    std::sort(labels.begin(), labels.end());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      validate_label(labels[i]);
      if (i > 0 && labels[i] == labels[i - 1])
        fail(ErrorKind::DuplicateVertex, "duplicate vertex label: " + labels[i]);
    }
    labels_ = std::move(labels);
  }

  int order() const { return static_cast<int>(labels_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Vertex>& vertex_labels() const { return labels_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const Vertex& label(int index) const { return labels_.at(index); }

  bool has_vertex(const Vertex& v) const {
    return std::binary_search(labels_.begin(), labels_.end(), v);
  }

  int index_of(const Vertex& v) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
    if (it == labels_.end() || *it != v)
      fail(ErrorKind::UnknownVertex, "unknown vertex: " + v);
    return static_cast<int>(it - labels_.begin());
  }

  /// Appends an edge and returns its identifier.
  EdgeId add_edge(const Vertex& u, const Vertex& v, Half cu, Half cv) {
    return add_edge_indexed(index_of(u), index_of(v), cu, cv, false);
  }

  EdgeId add_edge_indexed(int u, int v, Half cu, Half cv,
                          bool is_virtual = false, EdgeId forced_id = -1) {
    if (u < 0 || u >= order() || v < 0 || v >= order())
      fail(ErrorKind::UnknownVertex, "edge endpoint out of range");
    if (u == v)
      fail(ErrorKind::Loop, "loops are not allowed (vertex " + label(u) + ")");
    Edge e;
    e.u = u;
    e.v = v;
    e.cu = cu;
    e.cv = cv;
    e.id = forced_id >= 0 ? forced_id : next_id_;
    e.is_virtual = is_virtual;
    next_id_ = std::max(next_id_, e.id + 1);
    edges_.push_back(e);
    return e.id;
  }

  bool has_edge_id(EdgeId id) const { return find_edge(id) != nullptr; }

  const Edge& edge(EdgeId id) const {
    const Edge* e = find_edge(id);
    if (!e) fail(ErrorKind::UnknownEdge, "unknown edge id " + std::to_string(id));
    return *e;
  }

  /// Ids of all edges between a pair of vertices, ascending.
  std::vector<EdgeId> bundle(int u, int v) const {
    std::vector<EdgeId> out;
    for (const Edge& e : edges_)
      if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Ids of all edges incident with `u`, ascending.
  std::vector<EdgeId> incident(int u) const {
    std::vector<EdgeId> out;
    for (const Edge& e : edges_)
      if (e.u == u || e.v == u) out.push_back(e.id);
    std::sort(out.begin(), out.end());
    return out;
  }

  int degree(int u) const {
    int d = 0;
    for (const Edge& e : edges_)
      if (e.u == u || e.v == u) ++d;
    return d;
  }

  /// Distinct neighbours of `u` in the underlying simple graph, ascending.
  std::vector<int> neighbours(int u) const {
    std::vector<int> out;
    for (const Edge& e : edges_) {
      if (e.u == u) out.push_back(e.v);
      else if (e.v == u) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  bool universal(int u) const {
    return static_cast<int>(neighbours(u).size()) == order() - 1;
  }

  /// True if some pair of vertices is joined by two or more edges.
  bool has_parallel_pair() const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (std::size_t j = i + 1; j < edges_.size(); ++j)
        if (same_endpoints(edges_[i], edges_[j])) return true;
    return false;
  }

  bool has_red_half_at(int u) const {
    for (const Edge& e : edges_) {
      if (e.u == u && e.cu == Half::Red) return true;
      if (e.v == u && e.cv == Half::Red) return true;
    }
    return false;
  }

  static bool same_endpoints(const Edge& a, const Edge& b) {
    return (a.u == b.u && a.v == b.v) || (a.u == b.v && a.v == b.u);
  }

 private:
  static void validate_label(const Vertex& v) {
    if (v.empty()) fail(ErrorKind::BadLabel, "empty vertex label");
    for (char c : v)
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#')
        fail(ErrorKind::BadLabel, "label contains whitespace or '#': " + v);
  }

  const Edge* find_edge(EdgeId id) const {
    for (const Edge& e : edges_)
      if (e.id == id) return &e;
    return nullptr;
  }

  std::vector<Vertex> labels_;
  std::vector<Edge> edges_;
  EdgeId next_id_ = 0;
};

inline EdgeClass classify(const Edge& e) {
  if (e.cu == e.cv)
    return e.cu == Half::Blue ? EdgeClass::MonochromaticBlue
                              : EdgeClass::MonochromaticRed;
  return EdgeClass::Bichromatic;
}

inline EdgeClass classify_edge(const ColouredMultigraph& g, EdgeId id) {
  return classify(g.edge(id));
}

inline bool is_bichromatic(const Edge& e) {
  return classify(e) == EdgeClass::Bichromatic;
}

inline bool has_red_monochromatic_edge(const ColouredMultigraph& g) {
  for (const Edge& e : g.edges())
    if (classify(e) == EdgeClass::MonochromaticRed) return true;
  return false;
}

/// The disjoint partition E = E_m ⊔ E_b, as ascending id lists.
struct EdgePartition {
  std::vector<EdgeId> monochromatic;
  std::vector<EdgeId> bichromatic;
};

inline EdgePartition edge_partition(const ColouredMultigraph& g) {
  EdgePartition p;
  for (const Edge& e : g.edges()) {
    if (is_bichromatic(e)) p.bichromatic.push_back(e.id);
    else p.monochromatic.push_back(e.id);
  }
  std::sort(p.monochromatic.begin(), p.monochromatic.end());
  std::sort(p.bichromatic.begin(), p.bichromatic.end());
  return p;
}

/// A two-sided vertex cut (X, X'). Both sides non-empty and disjoint.
struct VertexCut {
  std::vector<int> left;
  std::vector<int> right;
};

inline VertexCut make_cut(const ColouredMultigraph& g, std::vector<int> left) {
  std::sort(left.begin(), left.end());
  if (left.empty() || static_cast<int>(left.size()) >= g.order())
    fail(ErrorKind::Precondition, "cut side must be a non-empty proper subset");
  VertexCut cut;
  cut.left = std::move(left);
  for (int v = 0; v < g.order(); ++v)
    if (!std::binary_search(cut.left.begin(), cut.left.end(), v))
      cut.right.push_back(v);
  return cut;
}

/// Every edge with exactly one endpoint in X, ascending ids.
/// X must be a non-empty proper subset of V(g).
inline std::vector<EdgeId> cut_edges(const ColouredMultigraph& g,
                                     const std::vector<int>& x) {
  for (int v : x)
    if (v < 0 || v >= g.order())
      fail(ErrorKind::UnknownVertex, "cut set vertex out of range");
  std::vector<char> in(g.order(), 0);
  int count = 0;
  for (int v : x) {
    if (!in[v]) ++count;
    in[v] = 1;
  }
  if (count == 0 || count == g.order())
    fail(ErrorKind::Precondition, "cut set must be a non-empty proper subset");
  std::vector<EdgeId> out;
  for (const Edge& e : g.edges())
    if (in[e.u] != in[e.v]) out.push_back(e.id);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<EdgeId> cut_edges(const ColouredMultigraph& g,
                                     const std::vector<Vertex>& x) {
  std::vector<int> idx;
  idx.reserve(x.size());
  for (const Vertex& v : x) idx.push_back(g.index_of(v));
  return cut_edges(g, idx);
}

/// Subgraph induced by S: keeps exactly the edges with both endpoints in S.
/// Edge ids and virtual flags carry over from the parent graph.
inline ColouredMultigraph induced_subgraph(const ColouredMultigraph& g,
                                           const std::vector<int>& s) {
  std::vector<Vertex> labels;
  labels.reserve(s.size());
  std::vector<char> keep(g.order(), 0);
  for (int v : s) {
    if (v < 0 || v >= g.order())
      fail(ErrorKind::UnknownVertex, "induced set vertex out of range");
    if (!keep[v]) labels.push_back(g.label(v));
    keep[v] = 1;
  }
  ColouredMultigraph h(std::move(labels));
  for (const Edge& e : g.edges()) {
    if (!keep[e.u] || !keep[e.v]) continue;
    h.add_edge_indexed(h.index_of(g.label(e.u)), h.index_of(g.label(e.v)),
                       e.cu, e.cv, e.is_virtual, e.id);
  }
  return h;
}

inline ColouredMultigraph induced_subgraph(const ColouredMultigraph& g,
                                           const std::vector<Vertex>& s) {
  std::vector<int> idx;
  idx.reserve(s.size());
  for (const Vertex& v : s) idx.push_back(g.index_of(v));
  return induced_subgraph(g, idx);
}

/// Copy of g without the vertices in `drop` (and their incident edges).
inline ColouredMultigraph delete_vertices(const ColouredMultigraph& g,
                                          const std::vector<int>& drop) {
  std::vector<char> gone(g.order(), 0);
  for (int v : drop) gone.at(v) = 1;
  std::vector<int> keep;
  for (int v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

/// Copy of g without the listed edges. Vertices are untouched.
inline ColouredMultigraph delete_edges(const ColouredMultigraph& g,
                                       const std::vector<EdgeId>& drop) {
  ColouredMultigraph h(g.vertex_labels());
  for (const Edge& e : g.edges()) {
    if (std::find(drop.begin(), drop.end(), e.id) != drop.end()) continue;
    h.add_edge_indexed(e.u, e.v, e.cu, e.cv, e.is_virtual, e.id);
  }
  return h;
}

namespace detail {

// Connected components of the underlying simple graph, restricted to the
// vertices with mask[v] != 0. Returns component index per vertex (-1 for
// masked-out vertices) and the number of components.
inline int components(const ColouredMultigraph& g, const std::vector<char>& mask,
                      std::vector<int>& comp) {
  comp.assign(g.order(), -1);
  std::vector<std::vector<int>> adj(g.order());
  for (const Edge& e : g.edges()) {
    if (!mask[e.u] || !mask[e.v]) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (!mask[s] || comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
    }
    ++count;
  }
  return count;
}

}  // namespace detail

/// Connectivity of the underlying simple graph. The empty graph counts as
/// not connected.
inline bool is_connected(const ColouredMultigraph& g) {
  if (g.order() == 0) return false;
  std::vector<char> mask(g.order(), 1);
  std::vector<int> comp;
  return detail::components(g, mask, comp) == 1;
}

inline bool has_cut_vertex(const ColouredMultigraph& g) {
  if (g.order() < 3) return false;
  std::vector<int> comp;
  for (int v = 0; v < g.order(); ++v) {
    std::vector<char> mask(g.order(), 1);
    mask[v] = 0;
    if (detail::components(g, mask, comp) > 1) return true;
  }
  return false;
}

}  // namespace wstate

#endif  // WSTATE_GRAPH_HPP
