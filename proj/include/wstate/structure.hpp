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

#ifndef WSTATE_STRUCTURE_HPP
#define WSTATE_STRUCTURE_HPP

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "wstate/graph.hpp"
#include "wstate/io.hpp"
#include "wstate/matching.hpp"

namespace wstate {

// ---------------------------------------------------------------------------
// Monochromatic shores
// ---------------------------------------------------------------------------

/// The two-sided partition V = X ⊔ X' induced by the components of the
/// monochromatic spanning subgraph. Canonical order: X contains the
/// lexicographically smallest vertex (index 0).
struct ShorePartition {
  std::vector<int> x;
  std::vector<int> x_prime;
};

/// Outcome of the shore computation. Anything other than Ok is a disproof
/// that the input is a W-state graph.
struct ShoreResult {
  enum class Status {
    Ok,
    WrongComponentCount,
    ShoreNotFactorCritical,
    BichromaticEdgeInsideShore,
  };
  Status status = Status::Ok;
  ShorePartition shores;       // valid when status == Ok
  int component_count = 0;     // WrongComponentCount
  int failing_shore = -1;      // ShoreNotFactorCritical: 0 for X, 1 for X'
  EdgeId offending_edge = -1;  // BichromaticEdgeInsideShore
  bool ok() const { return status == Status::Ok; }
};

/// Splits V(g) along the components of the monochromatic spanning subgraph
/// G_m. Succeeds iff G_m has exactly two components, both factor-critical,
/// and every bichromatic edge crosses between them.
inline ShoreResult monochromatic_shores(const ColouredMultigraph& g) {
  ShoreResult r;
  // Components of the spanning subgraph of monochromatic edges. Isolated
  // vertices count as their own components.
  std::vector<std::vector<int>> adj(g.order());
  for (const Edge& e : g.edges()) {
    if (is_bichromatic(e)) continue;
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> comp(g.order(), -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
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
  if (count != 2) {
    r.status = ShoreResult::Status::WrongComponentCount;
    r.component_count = count;
    return r;
  }
  // Vertex 0 is the lexicographically smallest label; its side is X.
  for (int v = 0; v < g.order(); ++v)
    (comp[v] == comp[0] ? r.shores.x : r.shores.x_prime).push_back(v);

  for (int side = 0; side < 2; ++side) {
    const auto& shore = side == 0 ? r.shores.x : r.shores.x_prime;
    ColouredMultigraph sub = induced_subgraph(g, shore);
    std::vector<EdgeId> bi;
    for (const Edge& e : sub.edges())
      if (is_bichromatic(e)) bi.push_back(e.id);
    if (!is_factor_critical(delete_edges(sub, bi))) {
      r.status = ShoreResult::Status::ShoreNotFactorCritical;
      r.failing_shore = side;
      return r;
    }
  }
  for (const Edge& e : g.edges())
    if (is_bichromatic(e) && comp[e.u] == comp[e.v]) {
      r.status = ShoreResult::Status::BichromaticEdgeInsideShore;
      r.offending_edge = e.id;
      return r;
    }
  return r;
}

// ---------------------------------------------------------------------------
// Separation pairs and 3-connectivity
// ---------------------------------------------------------------------------

/// Lexicographically smallest pair {x, y} whose removal disconnects g, or
/// nothing if no such pair exists. Connectivity is about the underlying
/// simple topology; parallel edges are irrelevant. Requires a connected
/// graph with at least 4 vertices.
inline std::optional<std::pair<int, int>> find_separation_pair(
    const ColouredMultigraph& g) {
  if (g.order() < 4)
    fail(ErrorKind::Precondition, "separation-pair search requires order >= 4");
  if (!is_connected(g))
    fail(ErrorKind::Precondition, "separation-pair search requires a connected graph");
  std::vector<int> comp;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y) {
      std::vector<char> mask(g.order(), 1);
      mask[x] = mask[y] = 0;
      if (detail::components(g, mask, comp) > 1) return std::make_pair(x, y);
    }
  return std::nullopt;
}

inline bool is_three_connected(const ColouredMultigraph& g) {
  if (g.order() < 4) return false;
  if (!is_connected(g) || has_cut_vertex(g)) return false;
  return !find_separation_pair(g).has_value();
}

// ---------------------------------------------------------------------------
// W-block decomposition
// ---------------------------------------------------------------------------

namespace detail {

// Splits g at the separation pair {x, x'} into one block per component of
// g - {x, x'}. Real x-x' edges all go to the first block (the one whose
// component contains the smallest vertex); duplicating them into every
// induced block would break the union/deletion round trip. Each block is
// then repaired:
//   rule 1: a cut vertex without a red half inside the block gets a virtual
//           bichromatic x-x' edge with the red half at that vertex;
//   rule 2: if the block still has no bichromatic x-x' edge, one virtual
//           edge is added with the red half at the smaller cut vertex.
// Virtual edges draw fresh ids from `next_virtual_id`.
inline std::vector<ColouredMultigraph> w_blocks(const ColouredMultigraph& g,
                                                std::pair<int, int> cut,
                                                EdgeId& next_virtual_id) {
  auto [x, y] = cut;
  if (x == y || x < 0 || y < 0 || x >= g.order() || y >= g.order())
    fail(ErrorKind::Precondition, "invalid cut pair");
  std::vector<char> mask(g.order(), 1);
  mask[x] = mask[y] = 0;
  std::vector<int> comp;
  int t = components(g, mask, comp);
  if (t < 2) fail(ErrorKind::NotSeparationPair, "not a separation pair");

  std::vector<ColouredMultigraph> blocks;
  for (int k = 0; k < t; ++k) {
    std::vector<int> verts{x, y};
    for (int v = 0; v < g.order(); ++v)
      if (comp[v] == k) verts.push_back(v);
    std::sort(verts.begin(), verts.end());

    std::vector<char> in(g.order(), 0);
    for (int v : verts) in[v] = 1;
    std::vector<Vertex> labels;
    for (int v : verts) labels.push_back(g.label(v));
    ColouredMultigraph block(std::move(labels));
    for (const Edge& e : g.edges()) {
      if (!in[e.u] || !in[e.v]) continue;
      bool is_cut_edge = (e.u == x && e.v == y) || (e.u == y && e.v == x);
      if (is_cut_edge && k != 0) continue;
      block.add_edge_indexed(block.index_of(g.label(e.u)),
                             block.index_of(g.label(e.v)), e.cu, e.cv,
                             e.is_virtual, e.id);
    }

    int bx = block.index_of(g.label(x));
    int by = block.index_of(g.label(y));
    bool x_has_red = block.has_red_half_at(bx);
    bool y_has_red = block.has_red_half_at(by);
    if (!x_has_red)
      block.add_edge_indexed(bx, by, Half::Red, Half::Blue, true,
                             next_virtual_id++);
    if (!y_has_red)
      block.add_edge_indexed(bx, by, Half::Blue, Half::Red, true,
                             next_virtual_id++);
    bool has_bi_cut_edge = false;
    for (EdgeId id : block.bundle(bx, by))
      if (is_bichromatic(block.edge(id))) has_bi_cut_edge = true;
    if (!has_bi_cut_edge) {
      // red half at the lexicographically smaller cut vertex
      if (g.label(x) < g.label(y))
        block.add_edge_indexed(bx, by, Half::Red, Half::Blue, true,
                               next_virtual_id++);
      else
        block.add_edge_indexed(bx, by, Half::Blue, Half::Red, true,
                               next_virtual_id++);
    }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace detail

/// Public single-split entry point; fresh virtual ids start just above the
/// largest id in g.
inline std::vector<ColouredMultigraph> w_block_decompose(
    const ColouredMultigraph& g, std::pair<int, int> cut) {
  EdgeId next_id = 0;
  for (const Edge& e : g.edges()) next_id = std::max(next_id, e.id + 1);
  return detail::w_blocks(g, cut, next_id);
}

inline std::vector<ColouredMultigraph> w_block_decompose(
    const ColouredMultigraph& g, const std::pair<Vertex, Vertex>& cut) {
  return w_block_decompose(g, std::make_pair(g.index_of(cut.first),
                                             g.index_of(cut.second)));
}

// ---------------------------------------------------------------------------
// Decomposition tree
// ---------------------------------------------------------------------------

/// One node of the split history. A leaf's component is a final piece
/// (3-connected, or of order <= 3, or the 2-vertex doubled-edge graph); an
/// internal node's component is the graph that was split at `split_pair`,
/// with the resulting blocks as children. Adhesion pairs are stored as
/// label pairs since the labels are shared between parent and child.
struct DecompositionNode {
  ColouredMultigraph component;
  std::vector<EdgeId> virtual_edges;
  std::optional<std::pair<Vertex, Vertex>> parent_adhesion;
  std::optional<std::pair<Vertex, Vertex>> split_pair;
  std::vector<DecompositionNode> children;
  int node_id = 0;

  bool is_leaf() const { return children.empty(); }
};

namespace detail {

inline DecompositionNode decompose_rec(
    ColouredMultigraph g, std::optional<std::pair<Vertex, Vertex>> adhesion,
    EdgeId& next_virtual_id, int& next_node_id) {
  DecompositionNode node;
  node.node_id = next_node_id++;
  node.parent_adhesion = std::move(adhesion);
  for (const Edge& e : g.edges())
    if (e.is_virtual) node.virtual_edges.push_back(e.id);
  std::sort(node.virtual_edges.begin(), node.virtual_edges.end());

  if (g.order() >= 4) {
    if (auto cut = find_separation_pair(g)) {
      auto pair_labels =
          std::make_pair(g.label(cut->first), g.label(cut->second));
      node.split_pair = pair_labels;
      for (ColouredMultigraph& block :
           detail::w_blocks(g, *cut, next_virtual_id))
        node.children.push_back(decompose_rec(std::move(block), pair_labels,
                                              next_virtual_id, next_node_id));
    }
  }
  node.component = std::move(g);
  return node;
}

inline DecompositionNode decomposition_tree_unchecked(
    const ColouredMultigraph& g) {
  EdgeId next_virtual_id = 0;
  for (const Edge& e : g.edges())
    next_virtual_id = std::max(next_virtual_id, e.id + 1);
  int next_node_id = 0;
  return decompose_rec(g, std::nullopt, next_virtual_id, next_node_id);
}

}  // namespace detail

/// Recursively splits g along separation pairs until every leaf is
/// 3-connected or has at most 3 vertices. Deterministic: the smallest
/// separation pair is used at each step and components are ordered by
/// their smallest vertex. Requires a connected matching-covered input.
inline DecompositionNode decomposition_tree(const ColouredMultigraph& g) {
  if (!is_connected(g))
    fail(ErrorKind::Precondition, "decomposition requires a connected graph");
  if (!is_matching_covered(g))
    fail(ErrorKind::Precondition, "decomposition requires a matching-covered graph");
  return detail::decomposition_tree_unchecked(g);
}

inline std::vector<const DecompositionNode*> leaves(
    const DecompositionNode& root) {
  std::vector<const DecompositionNode*> out;
  std::vector<const DecompositionNode*> stack{&root};
  while (!stack.empty()) {
    const DecompositionNode* n = stack.back();
    stack.pop_back();
    if (n->is_leaf()) out.push_back(n);
    for (auto it = n->children.rbegin(); it != n->children.rend(); ++it)
      stack.push_back(&*it);
  }
  return out;
}

// ---------------------------------------------------------------------------
// W-union
// ---------------------------------------------------------------------------

/// Glueing instructions: identify the designated bichromatic edges of the
/// two inputs. By default the red-half endpoint of e1 merges with the
/// blue-half endpoint of e2, so the glued pair ends up with opposite
/// orientations; `pair_red_with_red` flips that. A glued edge with its
/// retain flag cleared is deleted after the union, which is legal only
/// while both merged vertices keep another red half.
struct WUnionSpec {
  EdgeId e1 = -1;
  EdgeId e2 = -1;
  bool retain_e1 = true;
  bool retain_e2 = true;
  bool pair_red_with_red = false;
};

inline ColouredMultigraph w_union(const ColouredMultigraph& g1,
                                  const ColouredMultigraph& g2,
                                  const WUnionSpec& spec) {
  const Edge& e1 = g1.edge(spec.e1);
  const Edge& e2 = g2.edge(spec.e2);
  if (!is_bichromatic(e1) || !is_bichromatic(e2))
    fail(ErrorKind::NonBichromaticGlueEdge,
         "W-union edges must be bichromatic");
  for (const Vertex& v : g1.vertex_labels())
    if (g2.has_vertex(v))
      fail(ErrorKind::Precondition,
           "W-union inputs must have disjoint vertex labels (shared: " + v + ")");

  int r1 = e1.cu == Half::Red ? e1.u : e1.v;  // red-half endpoint of e1
  int b1 = e1.other(r1);
  int r2 = e2.cu == Half::Red ? e2.u : e2.v;
  int b2 = e2.other(r2);
  int mate_of_r1 = spec.pair_red_with_red ? r2 : b2;
  int mate_of_b1 = spec.pair_red_with_red ? b2 : r2;

  Vertex x = g1.label(r1) + g2.label(mate_of_r1);
  Vertex x_prime = g1.label(b1) + g2.label(mate_of_b1);
  if (x == x_prime)
    fail(ErrorKind::Precondition, "merged vertices collapse to one label");

  std::vector<Vertex> labels{x, x_prime};
  for (int v = 0; v < g1.order(); ++v)
    if (v != r1 && v != b1) labels.push_back(g1.label(v));
  for (int v = 0; v < g2.order(); ++v)
    if (v != mate_of_r1 && v != mate_of_b1) labels.push_back(g2.label(v));
  for (const Vertex& v : labels)
    if (std::count(labels.begin(), labels.end(), v) > 1)
      fail(ErrorKind::Precondition, "merged label collides: " + v);

  ColouredMultigraph out(std::move(labels));
  EdgeId glued1 = -1, glued2 = -1;
  auto map1 = [&](int v) {
    return v == r1 ? out.index_of(x)
                   : (v == b1 ? out.index_of(x_prime) : out.index_of(g1.label(v)));
  };
  auto map2 = [&](int v) {
    return v == mate_of_r1
               ? out.index_of(x)
               : (v == mate_of_b1 ? out.index_of(x_prime)
                                  : out.index_of(g2.label(v)));
  };
  for (const Edge& e : g1.edges()) {
    EdgeId id = out.add_edge_indexed(map1(e.u), map1(e.v), e.cu, e.cv,
                                     e.is_virtual);
    if (e.id == spec.e1) glued1 = id;
  }
  for (const Edge& e : g2.edges()) {
    EdgeId id = out.add_edge_indexed(map2(e.u), map2(e.v), e.cu, e.cv,
                                     e.is_virtual);
    if (e.id == spec.e2) glued2 = id;
  }

  std::vector<EdgeId> drop;
  if (!spec.retain_e1) drop.push_back(glued1);
  if (!spec.retain_e2) drop.push_back(glued2);
  if (drop.empty()) return out;

  ColouredMultigraph trimmed = delete_edges(out, drop);
  for (const Vertex& v : {x, x_prime})
    if (!trimmed.has_red_half_at(trimmed.index_of(v)))
      fail(ErrorKind::IllegalDeletion,
           "deleting glued edge would strip the last red half-edge at " + v);
  return trimmed;
}

// ---------------------------------------------------------------------------
// Reassembly (inverse of the decomposition)
// ---------------------------------------------------------------------------

namespace detail {

// Union of block graphs identified on their shared labels, keeping ids.
inline ColouredMultigraph merge_on_labels(
    const std::vector<ColouredMultigraph>& parts) {
  std::vector<Vertex> labels;
  for (const auto& p : parts)
    labels.insert(labels.end(), p.vertex_labels().begin(),
                  p.vertex_labels().end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  ColouredMultigraph out(labels);
  for (const auto& p : parts)
    for (const Edge& e : p.edges())
      out.add_edge_indexed(out.index_of(p.label(e.u)),
                           out.index_of(p.label(e.v)), e.cu, e.cv,
                           e.is_virtual, e.id);
  return out;
}

}  // namespace detail

/// Rebuilds a node's graph from its children: glue all child blocks at the
/// split pair (retained unions on shared labels), then delete exactly the
/// virtual edges that were created by this split, checking them against the
/// red-half rule. On a tree built by decomposition_tree this reproduces the
/// node's component, ids included.
inline ColouredMultigraph reassemble(const DecompositionNode& node) {
  if (node.is_leaf()) return node.component;
  std::vector<ColouredMultigraph> parts;
  parts.reserve(node.children.size());
  for (const DecompositionNode& child : node.children)
    parts.push_back(reassemble(child));
  ColouredMultigraph merged = detail::merge_on_labels(parts);

  std::vector<EdgeId> created;
  for (const Edge& e : merged.edges())
    if (e.is_virtual && !node.component.has_edge_id(e.id))
      created.push_back(e.id);
  if (created.empty()) return merged;

  ColouredMultigraph out = delete_edges(merged, created);
  for (const Vertex& v : {node.split_pair->first, node.split_pair->second})
    if (!out.has_red_half_at(out.index_of(v)))
      fail(ErrorKind::IllegalDeletion,
           "virtual-edge deletion would strip the last red half-edge at " + v);
  return out;
}

// ---------------------------------------------------------------------------
// Tree serialization (export only)
// ---------------------------------------------------------------------------

namespace detail {

inline void write_tree_rec(const DecompositionNode& n, int depth,
                           std::ostringstream& out) {
  std::string pad(2 * depth, ' ');
  out << pad << "node " << n.node_id << " {\n";
  out << pad << "  adhesion:";
  if (n.parent_adhesion)
    out << ' ' << n.parent_adhesion->first << ' ' << n.parent_adhesion->second;
  else
    out << " -";
  out << '\n';
  out << pad << "  virtual:";
  for (EdgeId id : n.virtual_edges) out << ' ' << id;
  out << '\n';
  out << pad << "  graph {\n";
  std::istringstream gs(write_graph_text(n.component));
  std::string line;
  while (std::getline(gs, line)) out << pad << "    " << line << '\n';
  out << pad << "  }\n";
  for (const DecompositionNode& c : n.children) write_tree_rec(c, depth + 1, out);
  out << pad << "}\n";
}

}  // namespace detail

inline std::string write_decomposition_tree(const DecompositionNode& root) {
  std::ostringstream out;
  detail::write_tree_rec(root, 0, out);
  return out.str();
}

}  // namespace wstate

#endif  // WSTATE_STRUCTURE_HPP
