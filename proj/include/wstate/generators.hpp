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

#ifndef WSTATE_GENERATORS_HPP
#define WSTATE_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wstate/graph.hpp"
#include "wstate/matching.hpp"
#include "wstate/realizability.hpp"

namespace wstate {

// Constructors for test corpora. All randomness is driven by explicit
// seeds; there is no ambient RNG state.

/// All-blue complete graph on n vertices, n odd. Labelled "1".."n".
inline ColouredMultigraph odd_clique(int n) {
  if (n < 3 || n % 2 == 0)
    fail(ErrorKind::Precondition, "odd_clique requires odd n >= 3");
  std::vector<Vertex> labels;
  for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  ColouredMultigraph g(std::move(labels));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      g.add_edge_indexed(i, j, Half::Blue, Half::Blue);
  return g;
}

/// All-blue friendship graph F_t: t triangles sharing one centre vertex.
/// 2t+1 vertices labelled "1".."2t+1" with centre "1".
inline ColouredMultigraph friendship_graph(int t) {
  if (t < 1) fail(ErrorKind::Precondition, "friendship_graph requires t >= 1");
  std::vector<Vertex> labels;
  for (int i = 1; i <= 2 * t + 1; ++i) labels.push_back(std::to_string(i));
  ColouredMultigraph g(labels);
  for (int i = 0; i < t; ++i) {
    const Vertex a = std::to_string(2 * i + 2), b = std::to_string(2 * i + 3);
    g.add_edge("1", a, Half::Blue, Half::Blue);
    g.add_edge("1", b, Half::Blue, Half::Blue);
    g.add_edge(a, b, Half::Blue, Half::Blue);
  }
  return g;
}

/// Cones a factor-critical base: adds a fresh universal apex (label "0"),
/// one bichromatic edge to every base vertex plus one extra parallel edge
/// to `doubled_neighbour` (default: the smallest base vertex), coloured by
/// the forced W-cone rules. The result carries a W-cone certificate.
inline ColouredMultigraph cone_over(const ColouredMultigraph& base,
                                    const Vertex& doubled_neighbour = "") {
  if (!is_factor_critical(base))
    fail(ErrorKind::Precondition, "cone base must be factor-critical");
  Vertex u0 = doubled_neighbour.empty() ? base.vertex_labels().front()
                                        : doubled_neighbour;
  if (!base.has_vertex(u0))
    fail(ErrorKind::UnknownVertex, "doubled neighbour not in base: " + u0);
  const Vertex apex = "0";
  if (base.has_vertex(apex))
    fail(ErrorKind::Precondition, "base already contains the apex label 0");

  std::vector<Vertex> labels = base.vertex_labels();
  labels.push_back(apex);
  ColouredMultigraph g(std::move(labels));
  for (const Edge& e : base.edges())
    g.add_edge(base.label(e.u), base.label(e.v), e.cu, e.cv);
  for (const Vertex& v : base.vertex_labels())
    g.add_edge(apex, v, Half::Blue, Half::Blue);
  g.add_edge(apex, u0, Half::Blue, Half::Blue);
  return forced_w_cone_colouring(g, {}, apex);
}

enum class MutationKind { FlipHalf, DeleteEdge, AddBlueEdge };

/// Seeded single-step mutation, for near-miss fixtures. FlipHalf toggles
/// one half-colour, DeleteEdge removes one edge, AddBlueEdge inserts a
/// blue-blue edge at a random vertex pair (parallels allowed).
inline ColouredMultigraph mutate(const ColouredMultigraph& g,
                                 MutationKind kind, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  switch (kind) {
    case MutationKind::FlipHalf: {
      if (g.size() == 0)
        fail(ErrorKind::Precondition, "flip mutation needs an edge");
      std::size_t i = pick(g.edges().size());
      bool at_u = rng() % 2 == 0;
      ColouredMultigraph out(g.vertex_labels());
      for (std::size_t j = 0; j < g.edges().size(); ++j) {
        Edge e = g.edges()[j];
        if (j == i) {
          Half& h = at_u ? e.cu : e.cv;
          h = h == Half::Blue ? Half::Red : Half::Blue;
        }
        out.add_edge_indexed(e.u, e.v, e.cu, e.cv, e.is_virtual, e.id);
      }
      return out;
    }
    case MutationKind::DeleteEdge: {
      if (g.size() == 0)
        fail(ErrorKind::Precondition, "delete mutation needs an edge");
      std::size_t i = pick(g.edges().size());
      return delete_edges(g, {g.edges()[i].id});
    }
    case MutationKind::AddBlueEdge: {
      if (g.order() < 2)
        fail(ErrorKind::Precondition, "add mutation needs two vertices");
      int u = static_cast<int>(pick(g.order()));
      int v = static_cast<int>(pick(g.order() - 1));
      if (v >= u) ++v;
      ColouredMultigraph out(g.vertex_labels());
      for (const Edge& e : g.edges())
        out.add_edge_indexed(e.u, e.v, e.cu, e.cv, e.is_virtual, e.id);
      out.add_edge_indexed(u, v, Half::Blue, Half::Blue);
      return out;
    }
  }
  fail(ErrorKind::Precondition, "unknown mutation kind");
}

/// Random all-blue factor-critical graph grown by odd ears from a single
/// vertex: each ear is a path of odd length between two existing vertices
/// (or a closed odd path at one vertex), adding an even number of new
/// internal vertices. Standard matching-theory construction, handy for
/// fuzzing. The result is checked before returning.
inline ColouredMultigraph random_factor_critical(int target_order, int ears,
                                                 std::uint64_t seed) {
  if (target_order < 1 || target_order % 2 == 0)
    fail(ErrorKind::Precondition, "factor-critical order must be odd");
  std::mt19937_64 rng(seed);
  // Grown with integer vertex names; relabelled at the end.
  struct RawEdge {
    int u, v;
  };
  int n = 1;
  std::vector<RawEdge> edges;
  int remaining = target_order - 1;  // even
  for (int ear = 0; ear < ears || remaining > 0; ++ear) {
    int internal = 0;
    if (remaining > 0) {
      internal = 2 * static_cast<int>(1 + rng() % 2);  // 2 or 4 new vertices
      internal = std::min(internal, remaining);
    }
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % n);
    if (internal == 0) {
      if (u == v) continue;  // a loop is not an ear
      edges.push_back({u, v});
    } else {
      int prev = u;
      for (int i = 0; i < internal; ++i) {
        edges.push_back({prev, n});
        prev = n++;
      }
      edges.push_back({prev, v});
      remaining -= internal;
    }
    if (ear > ears + 64) break;  // defensive bound; never hit in practice
  }
  std::vector<Vertex> labels;
  for (int i = 0; i < n; ++i)
    labels.push_back(i < 10 ? "0" + std::to_string(i) : std::to_string(i));
  ColouredMultigraph g(labels);
  for (const RawEdge& e : edges)
    g.add_edge(labels[e.u], labels[e.v], Half::Blue, Half::Blue);
  if (!is_factor_critical(g))
    fail(ErrorKind::Precondition, "ear growth produced a non-factor-critical graph");
  return g;
}

}  // namespace wstate

#endif  // WSTATE_GENERATORS_HPP
