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

#ifndef WSTATE_IO_HPP
#define WSTATE_IO_HPP

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wstate/graph.hpp"

namespace wstate {

// Line-oriented graph text format:
//
//   # comment
//   vertices: <label> <label> ...
//   edge <u> <v> <cu> <cv>        with cu, cv in {0,1}
//   k: <int>                      optional, Dicke target weight
//
// The writer emits vertices sorted and edges in storage order, so
// write(parse(write(g))) == write(g) byte for byte.

struct ParsedGraph {
  ColouredMultigraph graph;
  std::optional<int> k;  // present when the file carries a `k:` directive
};

inline ParsedGraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  ParsedGraph out;
  bool saw_vertices = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string head;
    if (!(ls >> head)) continue;  // blank
    const std::string where = " (line " + std::to_string(lineno) + ")";
    if (head == "vertices:") {
      if (saw_vertices) fail(ErrorKind::Parse, "duplicate vertices line" + where);
      std::vector<Vertex> labels;
      Vertex v;
      while (ls >> v) labels.push_back(v);
      out.graph = ColouredMultigraph(std::move(labels));
      saw_vertices = true;
    } else if (head == "edge") {
      if (!saw_vertices)
        fail(ErrorKind::Parse, "edge before vertices line" + where);
      Vertex u, v;
      int cu = -1, cv = -1;
      if (!(ls >> u >> v >> cu >> cv))
        fail(ErrorKind::Parse, "malformed edge line" + where);
      if ((cu != 0 && cu != 1) || (cv != 0 && cv != 1))
        fail(ErrorKind::Parse, "half-colours must be 0 or 1" + where);
      out.graph.add_edge(u, v, static_cast<Half>(cu), static_cast<Half>(cv));
    } else if (head == "k:") {
      int k = 0;
      if (!(ls >> k)) fail(ErrorKind::Parse, "malformed k line" + where);
      out.k = k;
    } else {
      fail(ErrorKind::Parse, "unrecognized directive '" + head + "'" + where);
    }
  }
  if (!saw_vertices) fail(ErrorKind::Parse, "missing vertices line");
  return out;
}

inline std::string write_graph_text(const ColouredMultigraph& g,
                                    std::optional<int> k = std::nullopt) {
  std::ostringstream out;
  out << "vertices:";
  for (const Vertex& v : g.vertex_labels()) out << ' ' << v;
  out << '\n';
  for (const Edge& e : g.edges())
    out << "edge " << g.label(e.u) << ' ' << g.label(e.v) << ' '
        << static_cast<int>(e.cu) << ' ' << static_cast<int>(e.cv) << '\n';
  if (k) out << "k: " << *k << '\n';
  return out.str();
}

inline ParsedGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

inline void write_graph_file(const std::string& path,
                             const ColouredMultigraph& g,
                             std::optional<int> k = std::nullopt) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::Parse, "cannot write " + path);
  out << write_graph_text(g, k);
}

/// DOT export. Each edge is emitted once with cu/cv attributes; bichromatic
/// edges get a two-colour gradient, virtual edges a dashed style. Export
/// only, there is no DOT parser here.
inline std::string write_dot(const ColouredMultigraph& g,
                             const std::string& name = "G") {
  auto colour_name = [](Half h) { return h == Half::Blue ? "blue" : "red"; };
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (const Vertex& v : g.vertex_labels()) out << "  \"" << v << "\";\n";
  for (const Edge& e : g.edges()) {
    out << "  \"" << g.label(e.u) << "\" -- \"" << g.label(e.v) << "\" [cu="
        << static_cast<int>(e.cu) << ", cv=" << static_cast<int>(e.cv);
    if (is_bichromatic(e))
      out << ", color=\"" << colour_name(e.cu) << ";0.5:" << colour_name(e.cv)
          << "\"";
    else
      out << ", color=\"" << colour_name(e.cu) << "\"";
    if (e.is_virtual) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace wstate

#endif  // WSTATE_IO_HPP
