#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "gaussgraph/chords.hpp"
#include "gaussgraph/graph.hpp"
#include "gaussgraph/text_format.hpp"

namespace gaussgraph::testing {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline EmbeddedGraph loop_graph() { return parse_graph("vertex v\nedge e v:0 v:1\n"); }

inline EmbeddedGraph k2_graph() { return parse_graph("vertex v\nvertex w\nedge e v:0 w:0\n"); }

/// θ3 with e1,e2,e3 counterclockwise at v and clockwise at w.
inline EmbeddedGraph theta3(bool planar = true) {
  return parse_graph(std::string("vertex v\nvertex w\n") + "edge e1 v:0 w:" + (planar ? "2" : "0") +
                     "\nedge e2 v:1 w:1\nedge e3 v:2 w:" + (planar ? "0" : "2") + "\n");
}

/// Inserts a new edge whose darts go into two corners of face `f`. Corner k
/// sits just before walk dart k at its vertex. `tail` == -1 adds a new pendant
/// vertex at the head corner instead.
inline EmbeddedGraph add_edge_in_face(const EmbeddedGraph& eg, int f, int tail_corner, int head_corner,
                                      bool pendant) {
  Multigraph g = eg.graph;
  auto order = eg.rotation.orders();
  const FaceSet faces = trace_faces(eg.graph, eg.rotation);
  const auto& walk = faces.face(f).walk;
  const Dart dt = walk.at(tail_corner);
  const VertexId vt = g.vertex_of(dt);
  VertexId vh;
  if (pendant) {
    vh = g.add_vertex("n" + std::to_string(g.vertex_count()));
    order.emplace_back();
  } else {
    vh = g.vertex_of(walk.at(head_corner));
  }
  const EdgeId e = g.add_edge("x" + std::to_string(g.edge_count()), vt, vh);
  auto insert_before = [&](VertexId v, Dart before, Dart x) {
    auto& ring = order[v];
    ring.insert(std::find(ring.begin(), ring.end(), before), x);
  };
  insert_before(vt, dt, Dart{e, End::Tail});
  if (pendant) {
    order[vh].push_back(Dart{e, End::Head});
  } else if (head_corner == tail_corner) {
    insert_before(vh, dt, Dart{e, End::Head});
  } else {
    insert_before(vh, walk.at(head_corner), Dart{e, End::Head});
  }
  return {g, RotationSystem(g, std::move(order))};
}

/// Random connected graph with a planar rotation, built by adding edges inside
/// faces, starting from a single loop or a single edge.
inline EmbeddedGraph random_planar(Rng& rng, int edges, bool loops = true) {
  EmbeddedGraph eg = uniform(rng, 0, 1) == 0 ? loop_graph() : k2_graph();
  while (eg.graph.edge_count() < edges) {
    const FaceSet faces = trace_faces(eg.graph, eg.rotation);
    const int f = uniform(rng, 0, faces.size() - 1);
    const int m = static_cast<int>(faces.face(f).walk.size());
    const int a = uniform(rng, 0, m - 1);
    const int b = uniform(rng, 0, m - 1);
    const bool pendant = uniform(rng, 0, 3) == 0;
    if (!pendant && !loops && eg.graph.vertex_of(faces.face(f).walk[a]) == eg.graph.vertex_of(faces.face(f).walk[b]))
      continue;
    eg = add_edge_in_face(eg, f, a, b, pendant);
  }
  return eg;
}

/// Random rotation (arbitrary genus) of the same graph.
inline RotationSystem random_rotation(Rng& rng, const Multigraph& g) {
  auto order = g.incidence();
  for (auto& ring : order) std::shuffle(ring.begin(), ring.end(), rng);
  return RotationSystem(g, std::move(order));
}

/// n chords with endpoints spread uniformly over the edges and random marks.
inline ChordDiagram random_diagram(Rng& rng, const Multigraph& g, int n, bool oriented = true) {
  std::vector<EdgeId> where(2 * n);
  for (auto& e : where) e = uniform(rng, 0, g.edge_count() - 1);
  std::vector<int> count(g.edge_count(), 0);
  std::vector<ChordEndpoint> points;
  for (EdgeId e : where) points.push_back({e, count[e]++, Mark::Plain});
  std::shuffle(points.begin(), points.end(), rng);
  ChordDiagram c;
  c.oriented = oriented;
  for (int i = 0; i < n; ++i) {
    Chord ch{std::string(1, static_cast<char>('A' + i)), points[2 * i], points[2 * i + 1]};
    if (oriented) {
      ch.a.mark = uniform(rng, 0, 1) ? Mark::Barred : Mark::Plain;
      ch.b.mark = uniform(rng, 0, 1) ? Mark::Barred : Mark::Plain;
    }
    c.chords.push_back(ch);
  }
  return c;
}

/// Diagram on a loop from a word such as "A B ~A ~B" (marks only with `~`).
inline ChordDiagram circle_diagram(const std::vector<std::string>& word, bool oriented = true) {
  ChordDiagram c;
  c.oriented = oriented;
  for (int i = 0; i < static_cast<int>(word.size()); ++i) {
    std::string s = word[i];
    Mark m = Mark::Plain;
    if (s.front() == '~') m = Mark::Barred, s.erase(0, 1);
    auto idx = c.find(s);
    if (idx) {
      c.chords[*idx].b = {0, i, m};
    } else {
      c.chords.push_back({s, {0, i, m}, {0, -1, Mark::Plain}});
    }
  }
  return c;
}

/// Every crossing sequence on n symbols up to relabeling: symbols appear in
/// order of first occurrence.
inline std::vector<std::vector<std::string>> all_curve_words(int n) {
  std::vector<std::vector<std::string>> out;
  std::vector<int> word, count(n, 0);
  auto rec = [&](auto&& self, int used) -> void {
    if (static_cast<int>(word.size()) == 2 * n) {
      std::vector<std::string> w;
      for (int x : word) w.emplace_back(1, static_cast<char>('A' + x));
      out.push_back(std::move(w));
      return;
    }
    for (int x = 0; x <= std::min(used, n - 1); ++x) {
      if (count[x] == 2) continue;
      word.push_back(x);
      ++count[x];
      self(self, std::max(used, x + 1));
      word.pop_back();
      --count[x];
    }
  };
  rec(rec, 0);
  return out;
}

inline std::vector<std::string> random_curve_word(Rng& rng, int n) {
  std::vector<std::string> w;
  for (int i = 0; i < n; ++i) w.insert(w.end(), 2, std::string(1, static_cast<char>('A' + i)));
  std::shuffle(w.begin(), w.end(), rng);
  return w;
}

}  // namespace gaussgraph::testing
