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

#ifndef WSTATE_RECOGNITION_HPP
#define WSTATE_RECOGNITION_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wstate/graph.hpp"
#include "wstate/matching.hpp"
#include "wstate/structure.hpp"

namespace wstate {

// A W-state graph: matching-covered, every perfect matching carries exactly
// one bichromatic edge (matching condition), every vertex carries a red
// half-edge (vertex condition). A W-cone: a W-state building block with a
// universal apex whose incident edges are exactly the bichromatic ones.

/// Evidence that a graph is a W-cone.
struct WConeCertificate {
  Vertex apex;
  std::vector<Vertex> base;                     // V minus apex
  std::pair<EdgeId, EdgeId> parallel_pair{-1, -1};  // two apex edges, same ends
  std::map<Vertex, EdgeId> red_witness;         // edge carrying each red half
};

enum class VerdictReason {
  Ok,
  NotConnected,
  NotMatchingCovered,
  VertexConditionFails,
  MatchingConditionFails,
  ComponentNotWCone,
};

inline const char* to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::Ok: return "ok";
    case VerdictReason::NotConnected: return "not-connected";
    case VerdictReason::NotMatchingCovered: return "not-matching-covered";
    case VerdictReason::VertexConditionFails: return "vertex-condition-fails";
    case VerdictReason::MatchingConditionFails: return "matching-condition-fails";
    case VerdictReason::ComponentNotWCone: return "component-not-w-cone";
  }
  return "?";
}

struct Verdict {
  bool accepted = false;
  VerdictReason reason = VerdictReason::Ok;
  std::optional<Vertex> violating_vertex;       // VertexConditionFails
  std::optional<Matching> violating_matching;   // MatchingConditionFails
  std::optional<int> failing_node;              // ComponentNotWCone
  std::vector<int> leaf_nodes;                  // recognizer: leaf node ids
  std::vector<WConeCertificate> leaf_certificates;
  std::vector<VerdictReason> all_failures;      // oracle diagnostics
};

struct VertexConditionResult {
  bool ok = true;
  std::optional<Vertex> violator;
};

/// Every vertex has at least one incident edge whose half at that vertex is
/// red; reports the first (smallest-label) violator otherwise.
inline VertexConditionResult vertex_condition(const ColouredMultigraph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (!g.has_red_half_at(v)) return {false, g.label(v)};
  return {};
}

struct MatchingConditionResult {
  bool ok = true;
  std::optional<Matching> witness;  // a perfect matching with != 1 bi edge
};

/// Every enumerated perfect matching contains exactly one bichromatic edge.
inline MatchingConditionResult matching_condition_oracle(
    const ColouredMultigraph& g, int vertex_cap = kDefaultEnumerationCap) {
  for (const Matching& m : enumerate_perfect_matchings(g, vertex_cap)) {
    int bi = 0;
    for (EdgeId id : m)
      if (is_bichromatic(g.edge(id))) ++bi;
    if (bi != 1) return {false, m};
  }
  return {};
}

namespace detail {

inline void guard_no_red_monochromatic(const ColouredMultigraph& g) {
  for (const Edge& e : g.edges())
    if (classify(e) == EdgeClass::MonochromaticRed)
      fail(ErrorKind::RedMonochromaticEdge,
           "red monochromatic edge present (id " + std::to_string(e.id) + ")");
}

}  // namespace detail

/// Definition-level brute-force check: connected, matching-covered, vertex
/// condition, matching condition, each tested directly. Rejects inputs with
/// red monochromatic edges and inputs above the enumeration cap. Collects
/// every failing stage in `all_failures` for diagnostics; `reason` is the
/// first one.
inline Verdict is_w_state_oracle(const ColouredMultigraph& g,
                                 int vertex_cap = kDefaultEnumerationCap) {
  detail::guard_no_red_monochromatic(g);
  if (g.order() > vertex_cap)
    fail(ErrorKind::CapExceeded, "oracle capped at " + std::to_string(vertex_cap) +
                                     " vertices");
  Verdict v;
  if (!is_connected(g)) v.all_failures.push_back(VerdictReason::NotConnected);
  if (!is_matching_covered(g))
    v.all_failures.push_back(VerdictReason::NotMatchingCovered);
  if (auto vc = vertex_condition(g); !vc.ok) {
    v.all_failures.push_back(VerdictReason::VertexConditionFails);
    v.violating_vertex = vc.violator;
  }
  if (auto mc = matching_condition_oracle(g, vertex_cap); !mc.ok) {
    v.all_failures.push_back(VerdictReason::MatchingConditionFails);
    v.violating_matching = mc.witness;
  }
  v.accepted = v.all_failures.empty();
  v.reason = v.accepted ? VerdictReason::Ok : v.all_failures.front();
  return v;
}

/// Searches for an apex certifying g as a W-cone: a universal vertex whose
/// incident edges are exactly the bichromatic edges, with the base all
/// monochromatic blue, the graph matching-covered, and every vertex
/// carrying a red half. Returns the certificate for the smallest feasible
/// apex.
inline std::optional<WConeCertificate> is_w_cone(const ColouredMultigraph& g) {
  if (g.order() < 2) return std::nullopt;
  if (!vertex_condition(g).ok) return std::nullopt;

  std::optional<bool> covered;  // matching-covered, computed on demand
  for (int apex = 0; apex < g.order(); ++apex) {
    if (!g.universal(apex)) continue;
    bool partition_ok = true;
    for (const Edge& e : g.edges()) {
      bool at_apex = e.u == apex || e.v == apex;
      if (at_apex ? !is_bichromatic(e)
                  : classify(e) != EdgeClass::MonochromaticBlue) {
        partition_ok = false;
        break;
      }
    }
    if (!partition_ok) continue;
    if (!covered) covered = is_matching_covered(g);
    if (!*covered) return std::nullopt;

    WConeCertificate cert;
    cert.apex = g.label(apex);
    for (int v = 0; v < g.order(); ++v)
      if (v != apex) cert.base.push_back(g.label(v));
    for (int v = 0; v < g.order(); ++v)
      for (EdgeId id : g.incident(v))
        if (g.edge(id).colour_at(v) == Half::Red) {
          cert.red_witness[g.label(v)] = id;
          break;
        }
    // The apex's red half sits on some edge to a neighbour w; w's own red
    // half must then sit on a parallel copy of that edge, which is the
    // multi-edge every W-cone carries.
    EdgeId e1 = cert.red_witness.at(cert.apex);
    int w = g.edge(e1).other(apex);
    EdgeId e2 = -1;
    for (EdgeId id : g.bundle(apex, w))
      if (id != e1 && g.edge(id).colour_at(w) == Half::Red) {
        e2 = id;
        break;
      }
    if (e2 < 0) continue;  // unreachable when the checks above hold
    cert.parallel_pair = {e1, e2};
    return cert;
  }
  return std::nullopt;
}

/// Structural recognizer: connectivity, matching-covered and the vertex
/// condition first, then the block decomposition with virtual edges
/// coloured bichromatically, then a W-cone test on every leaf. Reports the
/// first failing stage. Agrees with is_w_state_oracle on every input under
/// the enumeration cap, and keeps working above it.
inline Verdict recognize_w_state(const ColouredMultigraph& g) {
  detail::guard_no_red_monochromatic(g);
  Verdict v;
  auto reject = [&](VerdictReason r) {
    v.accepted = false;
    v.reason = r;
    v.all_failures.push_back(r);
    return v;
  };
  if (!is_connected(g)) return reject(VerdictReason::NotConnected);
  if (!is_matching_covered(g)) return reject(VerdictReason::NotMatchingCovered);
  if (auto vc = vertex_condition(g); !vc.ok) {
    v.violating_vertex = vc.violator;
    return reject(VerdictReason::VertexConditionFails);
  }
  DecompositionNode tree = detail::decomposition_tree_unchecked(g);
  for (const DecompositionNode* leaf : leaves(tree)) {
    std::optional<WConeCertificate> cert = is_w_cone(leaf->component);
    if (!cert) {
      v.failing_node = leaf->node_id;
      return reject(VerdictReason::ComponentNotWCone);
    }
    v.leaf_nodes.push_back(leaf->node_id);
    v.leaf_certificates.push_back(std::move(*cert));
  }
  v.accepted = true;
  v.reason = VerdictReason::Ok;
  return v;
}

}  // namespace wstate

#endif  // WSTATE_RECOGNITION_HPP
