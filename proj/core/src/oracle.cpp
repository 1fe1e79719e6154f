#include "gaussgraph/oracle.hpp"

#include <map>
#include <numeric>
#include <set>
#include <random>
#include <stdexcept>

#include "gaussgraph/planar_map.hpp"

namespace gaussgraph {

bool brute_extend_circle(const Multigraph& g, const ChordDiagram& c) {
  if (g.vertex_count() != 1 || g.edge_count() != 1) throw std::invalid_argument("brute_extend_circle: not a loop");
  const int n = c.size();
  if (n > kBruteCircleMax) throw std::length_error("brute_extend_circle: too many chords");
  if (c.oriented)
    for (const Chord& ch : c.chords)
      if (ch.a.mark == ch.b.mark) return false;

  std::vector<std::pair<int, int>> span;
  for (const Chord& ch : c.chords) span.push_back(std::minmax(ch.a.index, ch.b.index));
  auto cross = [&](int i, int j) {
    auto [a, b] = span[i];
    auto [x, y] = span[j];
    return (a < x && x < b) != (a < y && y < b);
  };
  for (std::uint32_t inside = 0; inside < (1U << n); ++inside) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        if (((inside >> i) & 1U) == ((inside >> j) & 1U) && cross(i, j)) ok = false;
    if (ok) return true;
  }
  return false;
}

bool brute_realize_curve(const std::vector<std::string>& seq) {
  const int len = static_cast<int>(seq.size());
  std::map<std::string, std::vector<int>> at;
  for (int i = 0; i < len; ++i) at[seq[i]].push_back(i);
  for (auto& [s, occ] : at)
    if (occ.size() != 2) throw std::invalid_argument("brute_realize_curve: symbol '" + s + "' not twice");
  const int n = static_cast<int>(at.size());
  if (n > kBruteCurveMax) throw std::length_error("brute_realize_curve: too many crossings");
  if (n == 0) return true;

  // Edge k runs from occurrence k to occurrence k+1.
  Multigraph g;
  std::map<std::string, VertexId> vertex;
  for (auto& [s, occ] : at) vertex[s] = g.add_vertex(s);
  for (int k = 0; k < len; ++k) g.add_edge("e" + std::to_string(k), vertex[seq[k]], vertex[seq[(k + 1) % len]]);

  std::vector<std::vector<int>> occ_of(n);
  for (auto& [s, occ] : at) occ_of[vertex[s]] = occ;
  for (std::uint32_t choice = 0; choice < (1U << (n - 1)); ++choice) {
    std::vector<std::vector<Dart>> order(n);
    for (int v = 0; v < n; ++v) {
      const int i = occ_of[v][0], j = occ_of[v][1];
      const Dart in_i{(i + len - 1) % len, End::Head}, out_i{i, End::Tail};
      const Dart in_j{(j + len - 1) % len, End::Head}, out_j{j, End::Tail};
      const bool flip = v > 0 && ((choice >> (v - 1)) & 1U);
      order[v] = flip ? std::vector<Dart>{in_i, out_j, out_i, in_j} : std::vector<Dart>{in_i, in_j, out_i, out_j};
    }
    if (is_planar_rotation(g, RotationSystem(g, std::move(order)))) return true;
  }
  return false;
}

bool brute_extend_embedded(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c,
                           bool free_at_cut_edges) {
  const std::set<EdgeId> cuts = cut_edges(g);
  std::vector<std::vector<std::pair<Side, Side>>> options;
  int bits = 0;
  for (const Chord& ch : c.chords) {
    auto& opt = options.emplace_back();
    const bool free = !c.oriented || (free_at_cut_edges && (cuts.count(ch.a.edge) || cuts.count(ch.b.edge)));
    for (Side sa : {Side::Left, Side::Right})
      for (Side sb : {Side::Left, Side::Right})
        if (free || (sa == sb) == (ch.a.mark != ch.b.mark)) opt.push_back({sa, sb});
    bits += opt.size() == 4 ? 2 : 1;
  }
  if (bits > kBruteSidesMaxBits) throw std::length_error("brute_extend_embedded: too many side choices");

  std::vector<std::size_t> pick(c.size(), 0);
  while (true) {
    std::vector<std::pair<Side, Side>> sides;
    for (int i = 0; i < c.size(); ++i) sides.push_back(options[i][pick[i]]);
    if (build_chord_map(g, rot, c, sides).genus() == 0) return true;
    int i = 0;
    while (i < c.size() && ++pick[i] == options[i].size()) pick[i++] = 0;
    if (i == c.size()) return false;
  }
}

const char* to_string(GenBase b) {
  switch (b) {
    case GenBase::Any:
      return "any";
    case GenBase::Curve:
      return "curve";
    case GenBase::Cycle:
      return "cycle";
    case GenBase::Theta:
      return "theta";
    case GenBase::Dumbbell:
      return "dumbbell";
  }
  return "?";
}

namespace {

EmbeddedGraph base_graph(GenBase base, int size) {
  Multigraph g;
  std::vector<std::vector<Dart>> order;
  switch (base) {
    case GenBase::Curve:
      g.add_vertex(kBasepoint);
      g.add_edge(kCurveEdge, 0, 0);
      order = {{{0, End::Tail}, {0, End::Head}}};
      break;
    case GenBase::Cycle:
      for (int i = 0; i < size; ++i) g.add_vertex("v" + std::to_string(i));
      for (int i = 0; i < size; ++i) g.add_edge("e" + std::to_string(i), i, (i + 1) % size);
      order.resize(size);
      for (int i = 0; i < size; ++i) order[i] = {{i, End::Tail}, {(i + size - 1) % size, End::Head}};
      break;
    case GenBase::Theta:
      g.add_vertex("v");
      g.add_vertex("w");
      order.resize(2);
      for (int i = 0; i < size; ++i) {
        g.add_edge("e" + std::to_string(i), 0, 1);
        order[0].push_back({i, End::Tail});
        order[1].insert(order[1].begin(), Dart{i, End::Head});
      }
      break;
    case GenBase::Dumbbell:
      g.add_vertex("v");
      g.add_vertex("w");
      g.add_edge("a", 0, 0);
      g.add_edge("b", 1, 1);
      g.add_edge("c", 0, 1);
      order = {{{0, End::Tail}, {0, End::Head}, {2, End::Tail}}, {{1, End::Tail}, {1, End::Head}, {2, End::Head}}};
      break;
    case GenBase::Any:
      throw std::invalid_argument("base_graph: no base chosen");
  }
  RotationSystem rot(g, std::move(order));
  return {std::move(g), std::move(rot)};
}

std::string crossing_symbol(int i) {
  return i < 26 ? std::string(1, static_cast<char>('A' + i)) : "X" + std::to_string(i);
}

// Face walks of the map, as map darts.
std::vector<std::vector<Dart>> map_faces(const PlanarMap& map) {
  const PlanarMap::Dense dense = map.dense();
  const FaceSet faces = trace_faces(dense.graph, dense.rotation);
  std::vector<std::vector<Dart>> out;
  for (const Face& f : faces.faces()) {
    auto& walk = out.emplace_back();
    for (Dart d : f.walk) walk.push_back({dense.edge_of[d.edge], d.end});
  }
  return out;
}

// Splits the edge of `d`; returns the new node and the dart that continues
// the face walk of `d` past it.
std::pair<VertexId, Dart> split_on_walk(PlanarMap& map, Dart d, const std::string& name) {
  auto [node, rest] = map.subdivide(d.edge, name);
  return {node, d.end == End::Tail ? Dart{rest, End::Tail} : Dart{d.edge, End::Head}};
}

bool insert_crossing(PlanarMap& map, std::mt19937_64& rng, const std::string& symbol) {
  auto pick = [&](const std::vector<Dart>& walk) {
    return walk[std::uniform_int_distribution<std::size_t>(0, walk.size() - 1)(rng)];
  };
  const auto faces = map_faces(map);
  const Dart d1 = pick(faces[std::uniform_int_distribution<std::size_t>(0, faces.size() - 1)(rng)]);
  auto [p, cont] = split_on_walk(map, d1, symbol + "@a");

  std::vector<Dart> walk;
  for (const auto& w : map_faces(map))
    if (std::find(w.begin(), w.end(), cont) != w.end()) walk = w;
  const Dart d2 = pick(walk);
  auto [q, unused] = split_on_walk(map, d2, symbol + "@b");
  (void)unused;

  const EdgeId chord = map.add_chord("chord:" + symbol, p, d1.right_side(), q, d2.right_side());
  map.contract(chord, symbol);
  try {
    const Immersion imm = immersion_from_map(map);
    std::vector<VertexId> parent(map.nodes().size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const ImmersedEdge& e : imm.edges) parent[find(e.tail)] = find(e.head);
    std::set<VertexId> roots;
    for (VertexId v = 0; v < static_cast<VertexId>(map.nodes().size()); ++v)
      if (map.node(v).alive && map.node(v).kind == NodeKind::Original) roots.insert(find(v));
    return roots.size() == 1;
  } catch (const std::logic_error&) {
    return false;
  }
}

}  // namespace

GeneratedImmersion generate_immersion(std::uint64_t seed, const GenParams& params) {
  std::mt19937_64 rng(seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  GeneratedImmersion out;
  out.base = params.base == GenBase::Any ? static_cast<GenBase>(uniform(1, 4)) : params.base;
  int size = params.base_size;
  if (size <= 0) size = out.base == GenBase::Theta ? uniform(2, 4) : uniform(1, 4);
  const int want = params.crossings >= 0 ? params.crossings : uniform(0, params.max_crossings);

  const EmbeddedGraph base = base_graph(out.base, size);
  PlanarMap map(base.graph, base.rotation);
  int made = 0;
  for (int attempt = 0; made < want && attempt < 20 * want; ++attempt) {
    PlanarMap next = map;
    if (insert_crossing(next, rng, crossing_symbol(made))) map = std::move(next), ++made;
  }
  out.immersion = immersion_from_map(map.compacted(), out.base == GenBase::Curve);
  out.code = code_of(out.immersion);
  return out;
}

}  // namespace gaussgraph
