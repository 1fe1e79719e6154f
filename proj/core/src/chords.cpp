#include "gaussgraph/chords.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "gaussgraph/text_format.hpp"

namespace gaussgraph {

std::optional<int> ChordDiagram::find(std::string_view id) const {
  for (int i = 0; i < size(); ++i)
    if (chords[i].id == id) return i;
  return std::nullopt;
}

void ChordDiagram::validate(const Multigraph& g, bool contiguous) const {
  std::set<std::string> ids;
  std::set<std::pair<EdgeId, int>> points;
  std::map<EdgeId, std::vector<int>> per_edge;
  for (const Chord& c : chords) {
    if (!ids.insert(c.id).second) throw std::invalid_argument("duplicate chord '" + c.id + "'");
    for (const ChordEndpoint& p : {c.a, c.b}) {
      if (p.edge < 0 || p.edge >= g.edge_count())
        throw std::invalid_argument("chord '" + c.id + "' references a missing edge");
      if (p.index < 0) throw std::invalid_argument("chord '" + c.id + "' has a negative index");
      if (!points.insert({p.edge, p.index}).second)
        throw std::invalid_argument("chord '" + c.id + "' reuses point " + g.edge(p.edge).name + "@" +
                                    std::to_string(p.index));
      per_edge[p.edge].push_back(p.index);
    }
  }
  if (!contiguous) return;
  for (auto& [e, idx] : per_edge) {
    std::sort(idx.begin(), idx.end());
    for (int i = 0; i < static_cast<int>(idx.size()); ++i)
      if (idx[i] != i)
        throw std::invalid_argument("indices on edge '" + g.edge(e).name + "' are not 0.." +
                                    std::to_string(idx.size() - 1));
  }
}

namespace {

ChordEndpoint parse_endpoint(const Word& w, int line, const Multigraph& g) {
  std::string text = w.text;
  Mark mark = Mark::Plain;
  if (!text.empty() && text.back() == '~') {
    mark = Mark::Barred;
    text.pop_back();
  }
  auto at = text.rfind('@');
  if (at == std::string::npos || at == 0 || at + 1 == text.size())
    throw ParseError(line, w.column, "expected <edge>@<index>[~], got '" + w.text + "'");
  auto edge = g.find_edge(text.substr(0, at));
  if (!edge) throw ParseError(line, w.column, "unknown edge '" + text.substr(0, at) + "'");
  int index = 0;
  const char* first = text.data() + at + 1;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last || index < 0)
    throw ParseError(line, w.column + static_cast<int>(at) + 1, "bad index in '" + w.text + "'");
  return {*edge, index, mark};
}

}  // namespace

ChordDiagram parse_chords(std::string_view text, const Multigraph& g) {
  ChordDiagram c;
  std::map<std::pair<EdgeId, int>, int> seen;
  for (const Line& line : split_lines(text)) {
    const auto& w = line.words;
    if (w[0].text == "unoriented") {
      if (w.size() != 1) throw ParseError(line.number, w[1].column, "unexpected text after 'unoriented'");
      c.oriented = false;
    } else if (w[0].text == "chord") {
      if (w.size() != 4)
        throw ParseError(line.number, w[0].column, "expected: chord <id> <edge>@<index>[~] <edge>@<index>[~]");
      if (c.find(w[1].text)) throw ParseError(line.number, w[1].column, "duplicate chord '" + w[1].text + "'");
      Chord chord{w[1].text, parse_endpoint(w[2], line.number, g), parse_endpoint(w[3], line.number, g)};
      for (int k = 0; k < 2; ++k) {
        const ChordEndpoint& p = k == 0 ? chord.a : chord.b;
        if (!seen.emplace(std::pair{p.edge, p.index}, line.number).second)
          throw ParseError(line.number, w[2 + k].column, "point " + w[2 + k].text + " already used");
      }
      c.chords.push_back(std::move(chord));
    } else {
      throw ParseError(line.number, w[0].column, "unknown directive '" + w[0].text + "'");
    }
  }
  try {
    c.validate(g, true);
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, 0, e.what());
  }
  return c;
}

std::string write_chords(const ChordDiagram& c, const Multigraph& g) {
  std::ostringstream out;
  if (!c.oriented) out << "unoriented\n";
  auto point = [&](const ChordEndpoint& p) {
    return g.edge(p.edge).name + "@" + std::to_string(p.index) + (c.oriented && p.mark == Mark::Barred ? "~" : "");
  };
  for (const Chord& ch : c.chords) out << "chord " << ch.id << ' ' << point(ch.a) << ' ' << point(ch.b) << '\n';
  return out.str();
}

RegionSet face_regions(const Multigraph& g, const FaceSet& faces) {
  RegionSet rs;
  rs.region_of_side.assign(2 * g.edge_count(), -1);
  for (int f = 0; f < faces.size(); ++f) {
    rs.regions.push_back({"R" + std::to_string(f), faces.face(f).walk});
    for (Dart d : faces.face(f).walk) rs.region_of_side[2 * d.edge + static_cast<int>(d.right_side())] = f;
  }
  return rs;
}

bool properly_intersect(const std::vector<Atom>& p, const std::vector<Atom>& q) {
  std::size_t common = 0;
  for (auto i = p.begin(), j = q.begin(); i != p.end() && j != q.end();) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common > 0 && common < p.size() && common < q.size();
}

bool properly_intersect(const BoundaryPath& p, const BoundaryPath& q) { return properly_intersect(p.atoms, q.atoms); }

std::vector<Attachment> attachments(const Chord& chord, bool oriented, const RegionSet& regions,
                                    const std::set<EdgeId>& cuts) {
  std::vector<Attachment> out;
  const bool check_marks = oriented && !cuts.count(chord.a.edge) && !cuts.count(chord.b.edge);
  for (Side sa : {Side::Left, Side::Right}) {
    for (Side sb : {Side::Left, Side::Right}) {
      int r = regions.region_on(chord.a.edge, sa);
      if (r != regions.region_on(chord.b.edge, sb)) continue;
      if (check_marks && (sa == sb) != (chord.a.mark != chord.b.mark)) continue;
      out.push_back({r, sa, sb});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool respects(const Chord& chord, bool oriented, const Multigraph& g, const FaceSet& faces,
              const std::set<EdgeId>& cuts) {
  return !attachments(chord, oriented, face_regions(g, faces), cuts).empty();
}

Subdivision::Subdivision(const Multigraph& g, const ChordDiagram& c) : indices_(g.edge_count()) {
  for (const Chord& ch : c.chords)
    for (const ChordEndpoint& p : {ch.a, ch.b}) indices_.at(p.edge).push_back(p.index);
  for (auto& idx : indices_) {
    std::sort(idx.begin(), idx.end());
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  }
}

int Subdivision::rank(EdgeId e, int index) const {
  const auto& idx = indices_.at(e);
  auto it = std::lower_bound(idx.begin(), idx.end(), index);
  if (it == idx.end() || *it != index) throw std::out_of_range("no subdivision point at that index");
  return static_cast<int>(it - idx.begin());
}

namespace {

struct Item {
  bool point = false;
  Atom atom;
  EdgeId edge = -1;
  int index = -1;
};

std::vector<Item> boundary_items(const Region& region, const Multigraph& g, const Subdivision& sub,
                                 VertexAtoms mode) {
  std::vector<Item> seq;
  // Corners are keyed by the walk dart leaving them.
  auto push_vertex = [&](VertexId v, int corner) {
    Atom a = Atom::vertex(v);
    if (mode == VertexAtoms::PerCorner) a.segment = corner;
    if (!seq.empty() && !seq.back().point && seq.back().atom == a) return;
    seq.push_back({false, a, -1, -1});
  };
  const int m = static_cast<int>(region.walk.size());
  for (int w = 0; w < m; ++w) {
    const Dart d = region.walk[w];
    const EdgeId e = d.edge;
    const auto& idx = sub.indices(e);
    const int k = static_cast<int>(idx.size());
    push_vertex(g.vertex_of(d), d.index());
    if (d.end == End::Tail) {
      for (int r = 0; r < k; ++r) {
        seq.push_back({false, Atom::segment_of(e, r), -1, -1});
        seq.push_back({true, {}, e, idx[r]});
      }
      seq.push_back({false, Atom::segment_of(e, k), -1, -1});
    } else {
      seq.push_back({false, Atom::segment_of(e, k), -1, -1});
      for (int r = k - 1; r >= 0; --r) {
        seq.push_back({true, {}, e, idx[r]});
        seq.push_back({false, Atom::segment_of(e, r), -1, -1});
      }
    }
    const Dart next = region.walk[(w + 1) % m];
    const VertexId end = g.vertex_of(d.twin());
    push_vertex(end, g.vertex_of(next) == end ? next.index() : -1 - d.index());
  }
  if (seq.size() > 1 && !seq.front().point && !seq.back().point && seq.front().atom == seq.back().atom)
    seq.pop_back();
  return seq;
}

}  // namespace

std::vector<BoundaryPoint> boundary_points(const Region& region, const Subdivision& sub) {
  std::vector<BoundaryPoint> out;
  for (Dart d : region.walk) {
    const auto& idx = sub.indices(d.edge);
    const Side side = d.right_side();
    if (d.end == End::Tail) {
      for (int i : idx) out.push_back({d.edge, i, side});
    } else {
      for (auto it = idx.rbegin(); it != idx.rend(); ++it) out.push_back({d.edge, *it, side});
    }
  }
  return out;
}

std::vector<BoundaryPath> boundary_paths(const Chord& chord, const Multigraph& g, const RegionSet& regions,
                                         const Subdivision& sub, VertexAtoms mode) {
  std::vector<BoundaryPath> out;
  std::set<std::vector<Atom>> seen;
  for (int r = 0; r < static_cast<int>(regions.regions.size()); ++r) {
    const auto seq = boundary_items(regions.regions[r], g, sub, mode);
    const int n = static_cast<int>(seq.size());
    std::vector<int> at_a, at_b;
    for (int i = 0; i < n; ++i) {
      if (!seq[i].point) continue;
      if (seq[i].edge == chord.a.edge && seq[i].index == chord.a.index) at_a.push_back(i);
      if (seq[i].edge == chord.b.edge && seq[i].index == chord.b.index) at_b.push_back(i);
    }
    for (int pa : at_a) {
      for (int pb : at_b) {
        for (int step : {1, -1}) {
          BoundaryPath path{r, {}, {}};
          for (int i = (pa + step + n) % n; i != pb; i = (i + step + n) % n)
            if (!seq[i].point) path.walk.push_back(seq[i].atom);
          path.atoms = path.walk;
          std::sort(path.atoms.begin(), path.atoms.end());
          if (std::adjacent_find(path.atoms.begin(), path.atoms.end()) != path.atoms.end()) continue;
          if (!seen.insert(path.atoms).second) continue;
          out.push_back(std::move(path));
        }
      }
    }
  }
  if (out.size() > 4)
    throw std::logic_error("chord '" + chord.id + "' has " + std::to_string(out.size()) + " boundary paths");
  return out;
}

std::vector<BoundaryPath> boundary_paths(const ChordDiagram& c, int chord, const Multigraph& g,
                                         const RotationSystem& rot) {
  return boundary_paths(c.chords.at(chord), g, face_regions(g, trace_faces(g, rot)), Subdivision(g, c));
}

bool IntersectionGraph::adjacent(int i, int j) const {
  if (i > j) std::swap(i, j);
  return edges.count({i, j}) > 0;
}

std::vector<std::vector<int>> IntersectionGraph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(size());
  for (auto [i, j] : edges) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  return adj;
}

std::size_t comparison_bound(std::size_t n) { return 16 * (n * (n - (n > 0 ? 1 : 0)) / 2); }

namespace {

IntersectionGraph from_path_sets(const ChordDiagram& c, const std::vector<std::vector<std::vector<Atom>>>& paths) {
  IntersectionGraph ig;
  for (const Chord& ch : c.chords) ig.chords.push_back(ch.id);
  const int n = c.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      bool adjacent = true;
      for (std::size_t x = 0; x < paths[i].size() && adjacent; ++x) {
        for (std::size_t y = 0; y < paths[j].size() && adjacent; ++y) {
          ++ig.comparisons;
          if (!properly_intersect(paths[i][x], paths[j][y])) adjacent = false;
        }
      }
      if (adjacent) ig.edges.insert({i, j});
    }
  }
  return ig;
}

}  // namespace

IntersectionGraph intersection_graph(const ChordDiagram& c, const Multigraph& g, const RegionSet& regions,
                                     VertexAtoms mode) {
  const Subdivision sub(g, c);
  std::vector<std::vector<std::vector<Atom>>> paths;
  for (const Chord& ch : c.chords) {
    auto& dst = paths.emplace_back();
    for (auto& p : boundary_paths(ch, g, regions, sub, mode)) dst.push_back(std::move(p.atoms));
  }
  IntersectionGraph ig = from_path_sets(c, paths);
  if (ig.comparisons > comparison_bound(c.chords.size()))
    throw std::logic_error("intersection graph exceeded the 16*C(n,2) comparison bound");
  return ig;
}

IntersectionGraph intersection_graph_embedded(const ChordDiagram& c, const Multigraph& g,
                                              const RotationSystem& rot) {
  return intersection_graph(c, g, face_regions(g, trace_faces(g, rot)));
}

IntersectionGraph intersection_graph_full(const ChordDiagram& c, const Multigraph& g) {
  const Subdivision sub(g, c);
  int segments = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) segments += sub.points_on(e) + 1;
  if (g.edge_count() > kFullMaxEdges || segments > kFullMaxSegments)
    throw std::length_error("intersection_graph_full: graph too large for exhaustive path enumeration");

  // Nodes: graph vertices, then subdivision points. Links carry their segment atom.
  const int nv = g.vertex_count();
  std::map<std::pair<EdgeId, int>, int> point_node;
  std::vector<std::vector<std::pair<int, Atom>>> links(nv);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::vector<int> chain{g.edge(e).tail};
    for (int idx : sub.indices(e)) {
      int node = static_cast<int>(links.size());
      links.emplace_back();
      point_node[{e, idx}] = node;
      chain.push_back(node);
    }
    chain.push_back(g.edge(e).head);
    for (int s = 0; s + 1 < static_cast<int>(chain.size()); ++s) {
      links[chain[s]].push_back({chain[s + 1], Atom::segment_of(e, s)});
      links[chain[s + 1]].push_back({chain[s], Atom::segment_of(e, s)});
    }
  }

  std::vector<std::vector<std::vector<Atom>>> paths;
  for (const Chord& ch : c.chords) {
    const int from = point_node.at({ch.a.edge, ch.a.index});
    const int to = point_node.at({ch.b.edge, ch.b.index});
    std::set<std::vector<Atom>> found;
    std::vector<bool> on_path(links.size(), false);
    std::vector<Atom> atoms;
    auto dfs = [&](auto&& self, int node) -> void {
      if (node == to) {
        std::vector<Atom> sorted = atoms;
        std::sort(sorted.begin(), sorted.end());
        found.insert(std::move(sorted));
        return;
      }
      on_path[node] = true;
      for (const auto& [next, seg] : links[node]) {
        if (on_path[next]) continue;
        atoms.push_back(seg);
        const bool interior_vertex = next < nv && next != to;
        if (interior_vertex) atoms.push_back(Atom::vertex(next));
        self(self, next);
        if (interior_vertex) atoms.pop_back();
        atoms.pop_back();
      }
      on_path[node] = false;
    };
    dfs(dfs, from);
    paths.emplace_back(found.begin(), found.end());
  }
  return from_path_sets(c, paths);
}

std::optional<std::vector<int>> find_odd_cycle(const std::vector<std::vector<int>>& adj, std::vector<int>* colors) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      std::vector<int> nbrs = adj[u];
      std::sort(nbrs.begin(), nbrs.end());
      for (int w : nbrs) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          // Close the cycle through the lowest common BFS ancestor.
          std::vector<int> left{u}, right{w};
          int a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          std::vector<int> cycle(left.rbegin(), left.rend());
          cycle.insert(cycle.end(), right.begin(), right.end());
          return cycle;
        }
      }
    }
  }
  if (colors) *colors = color;
  return std::nullopt;
}

}  // namespace gaussgraph
