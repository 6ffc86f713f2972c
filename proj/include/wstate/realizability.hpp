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

#ifndef WSTATE_REALIZABILITY_HPP
#define WSTATE_REALIZABILITY_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wstate/graph.hpp"
#include "wstate/matching.hpp"
#include "wstate/structure.hpp"

namespace wstate {

// Decides whether an uncoloured multigraph admits a half-edge 2-colouring
// turning it into a W-state graph, and synthesizes a witness colouring.
// Inputs are ColouredMultigraph values whose colours are ignored; only the
// structure (and virtual-edge flags, inside the decomposition) matters.

// ---------------------------------------------------------------------------
// Apex candidates
// ---------------------------------------------------------------------------

/// Candidate apexes of a decomposition component: universal, incident with
/// a pair of parallel edges, and incident with every virtual edge. Only
/// such vertices can be the apex of a W-cone colouring in which the
/// virtual edges come out bichromatic.
struct ApexCandidateSet {
  int component_id = 0;
  std::vector<Vertex> candidates;
};

inline std::vector<Vertex> apex_candidates(const ColouredMultigraph& k) {
  std::vector<Vertex> out;
  for (int v = 0; v < k.order(); ++v) {
    if (!k.universal(v)) continue;
    bool parallel = false;
    for (int w : k.neighbours(v))
      if (k.bundle(v, w).size() >= 2) parallel = true;
    if (!parallel) continue;
    bool meets_virtuals = true;
    for (const Edge& e : k.edges())
      if (e.is_virtual && e.u != v && e.v != v) meets_virtuals = false;
    if (meets_virtuals) out.push_back(k.label(v));
  }
  return out;
}

inline ApexCandidateSet apex_candidates(const DecompositionNode& node) {
  return {node.node_id, apex_candidates(node.component)};
}

// ---------------------------------------------------------------------------
// Forced W-cone colouring
// ---------------------------------------------------------------------------

/// Recolours H as a W-cone with the given apex, forcing every edge of S
/// bichromatic: base edges all blue; apex edges bichromatic with the red
/// halves at the neighbours, except for the designated parallel pair to u0
/// (the smallest neighbour joined by a multi-edge), whose first edge is red
/// at the apex and second red at u0. Precondition failures name the
/// violated clause.
inline ColouredMultigraph forced_w_cone_colouring(const ColouredMultigraph& h,
                                                  const std::vector<EdgeId>& s,
                                                  const Vertex& apex_label) {
  int apex = h.index_of(apex_label);
  if (!h.universal(apex))
    fail(ErrorKind::Precondition, "forced colouring: apex is not universal");
  for (EdgeId id : s) {
    const Edge& e = h.edge(id);
    if (e.u != apex && e.v != apex)
      fail(ErrorKind::Precondition,
           "forced colouring: forced edge " + std::to_string(id) +
               " is not incident with the apex");
  }
  int u0 = -1;
  for (int w : h.neighbours(apex))
    if (h.bundle(apex, w).size() >= 2) {
      u0 = w;
      break;
    }
  if (u0 < 0)
    fail(ErrorKind::Precondition,
         "forced colouring: apex has no parallel edge pair");
  if (!is_matching_covered(h))
    fail(ErrorKind::Precondition,
         "forced colouring: graph is not matching-covered");

  std::vector<EdgeId> pair = h.bundle(apex, u0);
  EdgeId e1 = pair[0], e2 = pair[1];
  ColouredMultigraph out(h.vertex_labels());
  for (const Edge& e : h.edges()) {
    Half cu = Half::Blue, cv = Half::Blue;
    if (e.u == apex || e.v == apex) {
      Half at_apex = e.id == e1 ? Half::Red : Half::Blue;
      Half at_other = e.id == e1 ? Half::Blue : Half::Red;
      if (e.id == e2) at_other = Half::Red;  // e2 is blue-at-apex/red-at-u0
      bool apex_is_u = e.u == apex;
      cu = apex_is_u ? at_apex : at_other;
      cv = apex_is_u ? at_other : at_apex;
    }
    out.add_edge_indexed(e.u, e.v, cu, cv, e.is_virtual, e.id);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition for realizability
// ---------------------------------------------------------------------------

/// Component tree of the uncoloured decomposition. Leaves are the final
/// pieces; a link joins the two leaves hosting the adhesion-pair bundles of
/// one split. Every block receives one virtual x-x' edge when the pair
/// still carries an edge after the split (the real bundle is assigned to
/// the first block only) and two otherwise, so each leaf holds at least one
/// virtual edge per adhesion pair incident to it.
struct RealizabilityDecomposition {
  std::vector<ColouredMultigraph> leaves;  // colours are placeholders
  struct Link {
    int leaf_a = -1;  // side that kept the pair's real edges, if any
    int leaf_b = -1;
    Vertex x, y;
  };
  std::vector<Link> links;
  int root = 0;
};

namespace detail {

struct RealizeSplitState {
  std::vector<ColouredMultigraph> leaves;
  struct PendingLink {
    EdgeId anchor_a, anchor_b;
    Vertex x, y;
  };
  std::vector<PendingLink> pending;
  std::map<EdgeId, int> owner;  // edge id -> leaf index
  EdgeId next_virtual_id = 0;
};

inline void realize_split(ColouredMultigraph g, RealizeSplitState& st) {
  std::optional<std::pair<int, int>> cut;
  if (g.order() >= 4) cut = find_separation_pair(g);
  if (!cut) {
    int idx = static_cast<int>(st.leaves.size());
    for (const Edge& e : g.edges()) st.owner[e.id] = idx;
    st.leaves.push_back(std::move(g));
    return;
  }
  auto [x, y] = *cut;
  const Vertex lx = g.label(x), ly = g.label(y);
  std::vector<char> mask(g.order(), 1);
  mask[x] = mask[y] = 0;
  std::vector<int> comp;
  int t = components(g, mask, comp);

  std::vector<ColouredMultigraph> blocks;
  std::vector<EdgeId> anchors;
  for (int k = 0; k < t; ++k) {
    std::vector<int> verts{x, y};
    for (int v = 0; v < g.order(); ++v)
      if (comp[v] == k) verts.push_back(v);
    std::vector<char> in(g.order(), 0);
    for (int v : verts) in[v] = 1;
    std::vector<Vertex> labels;
    for (int v : verts) labels.push_back(g.label(v));
    ColouredMultigraph block(std::move(labels));
    for (const Edge& e : g.edges()) {
      if (!in[e.u] || !in[e.v]) continue;
      bool cut_edge = (e.u == x && e.v == y) || (e.u == y && e.v == x);
      if (cut_edge && k != 0) continue;
      block.add_edge_indexed(block.index_of(g.label(e.u)),
                             block.index_of(g.label(e.v)), e.cu, e.cv,
                             e.is_virtual, e.id);
    }
    int bx = block.index_of(lx), by = block.index_of(ly);
    int add = block.bundle(bx, by).empty() ? 2 : 1;
    for (int i = 0; i < add; ++i)
      block.add_edge_indexed(bx, by, Half::Blue, Half::Blue, true,
                             st.next_virtual_id++);
    anchors.push_back(block.bundle(bx, by).front());
    blocks.push_back(std::move(block));
  }
  for (int k = 1; k < t; ++k)
    st.pending.push_back({anchors[0], anchors[k], lx, ly});
  for (ColouredMultigraph& b : blocks) realize_split(std::move(b), st);
}

}  // namespace detail

inline RealizabilityDecomposition realizability_decomposition(
    const ColouredMultigraph& g) {
  detail::RealizeSplitState st;
  for (const Edge& e : g.edges())
    st.next_virtual_id = std::max(st.next_virtual_id, e.id + 1);
  detail::realize_split(g, st);

  RealizabilityDecomposition out;
  out.leaves = std::move(st.leaves);
  for (const auto& p : st.pending)
    out.links.push_back(
        {st.owner.at(p.anchor_a), st.owner.at(p.anchor_b), p.x, p.y});
  const Vertex& smallest = g.vertex_labels().front();
  for (std::size_t i = 0; i < out.leaves.size(); ++i)
    if (out.leaves[i].has_vertex(smallest)) {
      out.root = static_cast<int>(i);
      break;
    }
  return out;
}

// ---------------------------------------------------------------------------
// Compatibility dynamic program
// ---------------------------------------------------------------------------

/// One component's share of a witness: its apex and the apex edge whose red
/// half sits at the apex. Every other apex edge takes the red half at the
/// far endpoint; base edges are blue.
struct ComponentAssignment {
  int leaf = -1;
  Vertex apex;
  EdgeId red_at_apex_edge = -1;
};

namespace detail {

// Bottom-up feasibility over the component tree. A leaf state fixes the
// apex and the single "in" edge (red half at the apex, chosen inside a
// parallel bundle so the bundle partner keeps its own red half) and records
// which vertices of the parent adhesion pair end up with a red half on a
// real edge. Since every virtual edge is deleted when the components are
// glued back, a vertex's red half must ultimately come from a real edge in
// some leaf containing it; that is exactly the deletion-legality rule of
// the W-union.
class CompatibilityDp {
 public:
  explicit CompatibilityDp(const RealizabilityDecomposition& d) : d_(d) {
    const int n = static_cast<int>(d.leaves.size());
    child_links_.resize(n);
    parent_pair_.resize(n);
    parent_of_.assign(n, -1);
    std::vector<std::vector<std::pair<int, int>>> adj(n);  // (link, other)
    for (int l = 0; l < static_cast<int>(d.links.size()); ++l) {
      adj[d.links[l].leaf_a].push_back({l, d.links[l].leaf_b});
      adj[d.links[l].leaf_b].push_back({l, d.links[l].leaf_a});
    }
    std::vector<char> visited(n, 0);
    order_.push_back(d.root);
    visited[d.root] = 1;
    for (std::size_t i = 0; i < order_.size(); ++i) {
      int v = order_[i];
      for (auto [l, w] : adj[v]) {
        if (visited[w]) continue;
        visited[w] = 1;
        parent_of_[w] = v;
        parent_pair_[w] = {d.links[l].x, d.links[l].y};
        child_links_[v].push_back({w, d.links[l].x, d.links[l].y});
        order_.push_back(w);
      }
    }
  }

  std::optional<std::vector<ComponentAssignment>> run() {
    states_.resize(d_.leaves.size());
    for (auto it = order_.rbegin(); it != order_.rend(); ++it)
      if (!compute_states(*it)) return std::nullopt;
    // States are recorded in canonical order (apex ascending, in-edge
    // ascending, child choices first-found), so state 0 at the root is the
    // deterministic witness.
    std::vector<ComponentAssignment> out;
    collect(d_.root, 0, out);
    std::sort(out.begin(), out.end(),
              [](const ComponentAssignment& a, const ComponentAssignment& b) {
                return a.leaf < b.leaf;
              });
    return out;
  }

 private:
  struct ChildLink {
    int child;
    Vertex x, y;
  };
  struct DpState {
    int apex = -1;
    EdgeId in_edge = -1;
    unsigned parent_support = 0;  // bit 0: pair.first, bit 1: pair.second
    std::vector<std::pair<int, int>> child_choice;  // (leaf, state index)
  };
  using Fold = std::pair<unsigned, std::vector<std::pair<int, int>>>;

  // Vertex universe for coverage bookkeeping at leaf k: the parent pair
  // plus all child pair labels.
  std::vector<Vertex> universe(int k) const {
    std::vector<Vertex> u;
    if (parent_of_[k] >= 0) {
      u.push_back(parent_pair_[k].first);
      u.push_back(parent_pair_[k].second);
    }
    for (const ChildLink& c : child_links_[k]) {
      u.push_back(c.x);
      u.push_back(c.y);
    }
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    return u;
  }

  bool compute_states(int k) {
    const ColouredMultigraph& g = d_.leaves[k];
    if (!is_matching_covered(g)) return false;  // per-component gate
    std::vector<Vertex> cand = apex_candidates(g);
    if (cand.empty()) return false;

    const std::vector<Vertex> uni = universe(k);
    auto bit = [&](const Vertex& v) -> int {
      auto it = std::lower_bound(uni.begin(), uni.end(), v);
      return (it != uni.end() && *it == v) ? static_cast<int>(it - uni.begin())
                                           : -1;
    };
    unsigned parent_mask = 0;
    if (parent_of_[k] >= 0)
      parent_mask = (1u << bit(parent_pair_[k].first)) |
                    (1u << bit(parent_pair_[k].second));
    unsigned required = 0;  // link vertices that cannot defer to the parent
    for (const ChildLink& c : child_links_[k])
      required |= (1u << bit(c.x)) | (1u << bit(c.y));
    required &= ~parent_mask;

    // Fold the achievable support unions over the children, one entry per
    // distinct mask, first (canonical) choices kept.
    std::vector<Fold> folds{{0u, {}}};
    for (const ChildLink& c : child_links_[k]) {
      std::vector<Fold> next;
      for (const Fold& f : folds)
        for (int si = 0; si < static_cast<int>(states_[c.child].size()); ++si) {
          unsigned m = f.first;
          unsigned s = states_[c.child][si].parent_support;
          if (s & 1u) m |= 1u << bit(c.x);
          if (s & 2u) m |= 1u << bit(c.y);
          bool seen = false;
          for (const Fold& e : next)
            if (e.first == m) seen = true;
          if (seen) continue;
          auto choices = f.second;
          choices.emplace_back(c.child, si);
          next.push_back({m, std::move(choices)});
        }
      folds = std::move(next);
    }

    std::vector<unsigned> seen_supports;
    for (const Vertex& apex_label : cand) {
      int apex = g.index_of(apex_label);
      for (EdgeId in_edge : g.incident(apex)) {
        int partner = g.edge(in_edge).other(apex);
        if (g.bundle(apex, partner).size() < 2) continue;
        unsigned local = 0;
        if (!g.edge(in_edge).is_virtual)
          if (int b = bit(apex_label); b >= 0) local |= 1u << b;
        for (const Vertex& z : uni) {
          if (z == apex_label) continue;
          int zi = g.index_of(z);
          for (EdgeId id : g.bundle(apex, zi))
            if (id != in_edge && !g.edge(id).is_virtual) {
              local |= 1u << bit(z);
              break;
            }
        }
        for (const Fold& f : folds) {
          unsigned covered = f.first | local;
          if ((required & ~covered) != 0) continue;
          unsigned support = 0;
          if (parent_of_[k] >= 0) {
            if (covered & (1u << bit(parent_pair_[k].first))) support |= 1u;
            if (covered & (1u << bit(parent_pair_[k].second))) support |= 2u;
          }
          if (std::find(seen_supports.begin(), seen_supports.end(), support) !=
              seen_supports.end())
            continue;
          seen_supports.push_back(support);
          states_[k].push_back({apex, in_edge, support, f.second});
        }
      }
    }
    return !states_[k].empty();
  }

  void collect(int leaf, int state_index,
               std::vector<ComponentAssignment>& out) const {
    const DpState& s = states_[leaf][state_index];
    out.push_back({leaf, d_.leaves[leaf].label(s.apex), s.in_edge});
    for (auto [child, idx] : s.child_choice) collect(child, idx, out);
  }

  const RealizabilityDecomposition& d_;
  std::vector<std::vector<ChildLink>> child_links_;
  std::vector<std::pair<Vertex, Vertex>> parent_pair_;
  std::vector<int> parent_of_;
  std::vector<int> order_;
  std::vector<std::vector<DpState>> states_;
};

}  // namespace detail

/// Bottom-up compatibility check over the component tree: picks an apex and
/// a red-at-apex edge per component so that the coloured components glue
/// back to the input by retained W-unions with every virtual edge deleted
/// legally. Returns one assignment per leaf, or nothing.
inline std::optional<std::vector<ComponentAssignment>> compatibility_dp(
    const RealizabilityDecomposition& d) {
  detail::CompatibilityDp dp(d);
  return dp.run();
}

// ---------------------------------------------------------------------------
// realize and its report
// ---------------------------------------------------------------------------

struct RealizeReport {
  enum class Stage {
    Feasible,
    NotMatchingCovered,  // input gate, also covers disconnected inputs
    ComponentNotMatchingCovered,
    EmptyApexCandidates,
    NoCompatibleAssignment,
  };
  Stage stage = Stage::Feasible;
  int failing_component = -1;
  std::optional<ColouredMultigraph> witness;
};

inline const char* to_string(RealizeReport::Stage s) {
  switch (s) {
    case RealizeReport::Stage::Feasible:
      return "feasible";
    case RealizeReport::Stage::NotMatchingCovered:
      return "input is not a connected matching-covered graph";
    case RealizeReport::Stage::ComponentNotMatchingCovered:
      return "component is not matching-covered";
    case RealizeReport::Stage::EmptyApexCandidates:
      return "component has empty apex-candidate set";
    case RealizeReport::Stage::NoCompatibleAssignment:
      return "no compatible apex/orientation assignment";
  }
  return "?";
}

inline RealizeReport realize_report(const ColouredMultigraph& g) {
  RealizeReport r;
  if (!is_connected(g) || !is_matching_covered(g)) {
    r.stage = RealizeReport::Stage::NotMatchingCovered;
    return r;
  }
  RealizabilityDecomposition d = realizability_decomposition(g);
  for (std::size_t i = 0; i < d.leaves.size(); ++i) {
    if (!is_matching_covered(d.leaves[i])) {
      r.stage = RealizeReport::Stage::ComponentNotMatchingCovered;
      r.failing_component = static_cast<int>(i);
      return r;
    }
    if (apex_candidates(d.leaves[i]).empty()) {
      r.stage = RealizeReport::Stage::EmptyApexCandidates;
      r.failing_component = static_cast<int>(i);
      return r;
    }
  }
  auto assignment = compatibility_dp(d);
  if (!assignment) {
    r.stage = RealizeReport::Stage::NoCompatibleAssignment;
    return r;
  }

  // Assemble the witness: every real edge of g lives in exactly one leaf
  // and is coloured there. Apex edges are bichromatic, base edges blue.
  std::map<EdgeId, std::pair<Half, Half>> colour;
  for (const ComponentAssignment& a : *assignment) {
    const ColouredMultigraph& k = d.leaves[a.leaf];
    int apex = k.index_of(a.apex);
    for (const Edge& e : k.edges()) {
      if (e.is_virtual) continue;
      Half cu = Half::Blue, cv = Half::Blue;
      if (e.u == apex || e.v == apex) {
        Half at_apex = e.id == a.red_at_apex_edge ? Half::Red : Half::Blue;
        Half at_other = e.id == a.red_at_apex_edge ? Half::Blue : Half::Red;
        bool apex_is_u = e.u == apex;
        cu = apex_is_u ? at_apex : at_other;
        cv = apex_is_u ? at_other : at_apex;
      }
      colour[e.id] = {cu, cv};
    }
  }
  ColouredMultigraph out(g.vertex_labels());
  for (const Edge& e : g.edges()) {
    auto [cu, cv] = colour.at(e.id);
    out.add_edge_indexed(e.u, e.v, cu, cv, e.is_virtual, e.id);
  }
  r.witness = std::move(out);
  return r;
}

/// Whether g admits a half-edge 2-colouring making it a W-state graph;
/// returns a witness colouring of g on success. Input colours are ignored.
inline std::optional<ColouredMultigraph> realize(const ColouredMultigraph& g) {
  return realize_report(g).witness;
}

// ---------------------------------------------------------------------------
// Brute-force colouring oracle
// ---------------------------------------------------------------------------

/// Exhaustive anti-drift check for realize: tries every half-edge colouring
/// without red monochromatic edges (blue-blue, blue-red, red-blue per edge,
/// in that order, edges in storage order) and returns the first colouring
/// passing the definition-level W-state checks. Connectivity, the
/// matching-covered property and the perfect-matching structure are
/// colour-independent, so they are evaluated once up front; the residual
/// per-colouring checks are the vertex condition and the exactly-one-
/// bichromatic-edge count over the enumerated perfect matchings.
inline std::optional<ColouredMultigraph> realizability_oracle(
    const ColouredMultigraph& g, int edge_cap = 10, int vertex_cap = 8) {
  if (g.size() > edge_cap || g.order() > vertex_cap)
    fail(ErrorKind::CapExceeded, "realizability oracle capped at " +
                                     std::to_string(edge_cap) + " edges / " +
                                     std::to_string(vertex_cap) + " vertices");
  if (!is_connected(g) || !is_matching_covered(g)) return std::nullopt;

  const int m = g.size();
  const int n = g.order();
  // Perfect matchings as lists of edge positions.
  std::vector<std::vector<int>> pm_positions;
  {
    std::map<EdgeId, int> pos;
    for (int i = 0; i < m; ++i) pos[g.edges()[i].id] = i;
    for (const Matching& pm : enumerate_perfect_matchings(g)) {
      std::vector<int> p;
      for (EdgeId id : pm) p.push_back(pos.at(id));
      pm_positions.push_back(std::move(p));
    }
  }
  // Half positions per vertex: (edge position, true when the vertex is the
  // stored u endpoint).
  std::vector<std::vector<std::pair<int, bool>>> at(n);
  for (int i = 0; i < m; ++i) {
    at[g.edges()[i].u].push_back({i, true});
    at[g.edges()[i].v].push_back({i, false});
  }

  static constexpr std::pair<Half, Half> kOptions[3] = {
      {Half::Blue, Half::Blue}, {Half::Blue, Half::Red}, {Half::Red, Half::Blue}};
  std::vector<int> opt(m, 0);
  for (;;) {
    bool ok = true;
    for (const auto& pm : pm_positions) {
      int bi = 0;
      for (int p : pm)
        if (opt[p] != 0) ++bi;
      if (bi != 1) {
        ok = false;
        break;
      }
    }
    if (ok) {
      for (int v = 0; v < n && ok; ++v) {
        bool red = false;
        for (auto [p, is_u] : at[v]) {
          Half h = is_u ? kOptions[opt[p]].first : kOptions[opt[p]].second;
          if (h == Half::Red) {
            red = true;
            break;
          }
        }
        ok = red;
      }
    }
    if (ok) {
      ColouredMultigraph out(g.vertex_labels());
      for (int i = 0; i < m; ++i) {
        const Edge& e = g.edges()[i];
        out.add_edge_indexed(e.u, e.v, kOptions[opt[i]].first,
                             kOptions[opt[i]].second, e.is_virtual, e.id);
      }
      return out;
    }
    int i = m - 1;
    while (i >= 0 && opt[i] == 2) opt[i--] = 0;
    if (i < 0) return std::nullopt;
    ++opt[i];
  }
}

}  // namespace wstate

#endif  // WSTATE_REALIZABILITY_HPP
