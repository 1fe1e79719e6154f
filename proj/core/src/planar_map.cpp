#include "gaussgraph/planar_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gaussgraph {

const char* to_string(NodeKind k) {
  switch (k) {
    case NodeKind::Original:
      return "original";
    case NodeKind::Crossing:
      return "crossing";
    case NodeKind::Endpoint:
      return "endpoint";
  }
  return "?";
}

PlanarMap::PlanarMap(const Multigraph& g, const RotationSystem& rot) {
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    MapNode n;
    n.name = g.vertex_name(v);
    n.rotation = rot.at(v);
    nodes_.push_back(std::move(n));
  }
  for (const Edge& e : g.edges()) edges_.push_back({e.name, e.tail, e.head, false, true});
}

VertexId PlanarMap::add_node(MapNode node) {
  nodes_.push_back(std::move(node));
  return static_cast<VertexId>(nodes_.size()) - 1;
}

EdgeId PlanarMap::add_edge(std::string name, VertexId tail, VertexId head, bool chord) {
  edges_.push_back({std::move(name), tail, head, chord, true});
  return static_cast<EdgeId>(edges_.size()) - 1;
}

int PlanarMap::position(Dart d) const {
  const auto& ring = nodes_.at(vertex_of(d)).rotation;
  auto it = std::find(ring.begin(), ring.end(), d);
  if (it == ring.end()) throw std::logic_error("dart missing from its node rotation");
  return static_cast<int>(it - ring.begin());
}

std::pair<VertexId, EdgeId> PlanarMap::subdivide(EdgeId e, const std::string& node_name) {
  const VertexId head = edges_.at(e).head;
  const int head_pos = position({e, End::Head});

  MapNode mid;
  mid.kind = NodeKind::Endpoint;
  mid.name = node_name;
  const VertexId s = add_node(std::move(mid));
  const EdgeId rest = add_edge(edges_.at(e).name + "+", s, head);
  edges_[e].head = s;

  nodes_[head].rotation[head_pos] = Dart{rest, End::Head};
  nodes_[s].back_edge = e;
  nodes_[s].fwd_edge = rest;
  nodes_[s].rotation = {Dart{rest, End::Tail}, Dart{e, End::Head}};
  return {s, rest};
}

EdgeId PlanarMap::add_chord(const std::string& name, VertexId from, Side from_side, VertexId to, Side to_side) {
  const EdgeId c = add_edge(name, from, to, true);
  auto attach = [&](VertexId v, Side side, Dart chord_dart) {
    MapNode& n = nodes_.at(v);
    if (n.kind != NodeKind::Endpoint || n.rotation.size() != 2)
      throw std::logic_error("chord attached to a node that is not a free endpoint");
    const Dart fwd{n.fwd_edge, End::Tail};
    const Dart back{n.back_edge, End::Head};
    n.rotation = side == Side::Left ? std::vector<Dart>{fwd, chord_dart, back} : std::vector<Dart>{fwd, back, chord_dart};
  };
  attach(from, from_side, Dart{c, End::Tail});
  attach(to, to_side, Dart{c, End::Head});
  return c;
}

VertexId PlanarMap::contract(EdgeId chord, const std::string& symbol) {
  MapEdge& c = edges_.at(chord);
  if (!c.chord || !c.alive) throw std::logic_error("contract: not a live chord edge");
  const VertexId keep = c.tail;
  const VertexId drop = c.head;
  if (keep == drop) throw std::logic_error("contract: chord is a loop");

  auto after = [&](VertexId v, Dart skip) {
    const auto& ring = nodes_[v].rotation;
    auto it = std::find(ring.begin(), ring.end(), skip);
    std::vector<Dart> out;
    for (std::size_t k = 1; k < ring.size(); ++k) out.push_back(ring[(it - ring.begin() + k) % ring.size()]);
    return out;
  };
  std::vector<Dart> merged = after(keep, Dart{chord, End::Tail});
  std::vector<Dart> moved = after(drop, Dart{chord, End::Head});
  for (Dart d : moved) {
    MapEdge& e = edges_[d.edge];
    (d.end == End::Tail ? e.tail : e.head) = keep;
  }
  merged.insert(merged.end(), moved.begin(), moved.end());

  MapNode& n = nodes_[keep];
  n.kind = NodeKind::Crossing;
  n.symbol = symbol;
  n.name = symbol;
  n.back_edge = n.fwd_edge = -1;
  n.rotation = std::move(merged);
  nodes_[drop].alive = false;
  nodes_[drop].rotation.clear();
  c.alive = false;
  return keep;
}

PlanarMap::Dense PlanarMap::dense() const {
  Dense out;
  std::vector<VertexId> vmap(nodes_.size(), -1);
  std::vector<EdgeId> emap(edges_.size(), -1);
  for (VertexId v = 0; v < static_cast<VertexId>(nodes_.size()); ++v) {
    if (!nodes_[v].alive) continue;
    vmap[v] = out.graph.add_vertex(nodes_[v].name + "#" + std::to_string(v));
    out.node_of.push_back(v);
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    if (!edges_[e].alive) continue;
    emap[e] = out.graph.add_edge(edges_[e].name + "#" + std::to_string(e), vmap.at(edges_[e].tail),
                                 vmap.at(edges_[e].head));
    out.edge_of.push_back(e);
  }
  std::vector<std::vector<Dart>> order;
  for (VertexId v : out.node_of) {
    auto& ring = order.emplace_back();
    for (Dart d : nodes_[v].rotation) ring.push_back({emap.at(d.edge), d.end});
  }
  out.rotation = RotationSystem(out.graph, std::move(order));
  return out;
}

int PlanarMap::genus() const {
  Dense d = dense();
  return gaussgraph::genus(d.graph, d.rotation);
}

PlanarMap PlanarMap::compacted() const {
  PlanarMap out;
  std::vector<VertexId> vmap(nodes_.size(), -1);
  std::vector<EdgeId> emap(edges_.size(), -1);
  for (VertexId v = 0; v < static_cast<VertexId>(nodes_.size()); ++v)
    if (nodes_[v].alive) vmap[v] = static_cast<VertexId>(out.nodes_.size()), out.nodes_.push_back(nodes_[v]);
  for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
    if (!edges_[e].alive) continue;
    emap[e] = static_cast<EdgeId>(out.edges_.size());
    MapEdge me = edges_[e];
    me.tail = vmap.at(me.tail);
    me.head = vmap.at(me.head);
    out.edges_.push_back(std::move(me));
  }
  for (MapNode& n : out.nodes_) {
    for (Dart& d : n.rotation) d.edge = emap.at(d.edge);
    if (n.back_edge >= 0) n.back_edge = emap.at(n.back_edge);
    if (n.fwd_edge >= 0) n.fwd_edge = emap.at(n.fwd_edge);
  }
  return out;
}

std::optional<StrandWalk> PlanarMap::walk_strand(Dart d) const {
  StrandWalk walk{d, d, {}, {}};
  const std::size_t limit = 2 * edges_.size() + 2;
  for (std::size_t steps = 0; steps < limit; ++steps) {
    const Dart arrive = d.twin();
    const VertexId v = vertex_of(arrive);
    const MapNode& n = nodes_.at(v);
    switch (n.kind) {
      case NodeKind::Original:
        walk.stop = arrive;
        return walk;
      case NodeKind::Crossing: {
        if (n.rotation.size() != 4) throw std::logic_error("crossing node without degree 4");
        walk.tokens.push_back({n.symbol, false, Mark::Plain});
        walk.crossings.push_back(v);
        d = n.rotation[(position(arrive) + 2) % 4];
        break;
      }
      case NodeKind::Endpoint: {
        const Dart back{n.back_edge, End::Head};
        const Dart fwd{n.fwd_edge, End::Tail};
        const bool forward = arrive == back;
        if (!forward && arrive != fwd) throw std::logic_error("strand entered an endpoint along its chord");
        walk.tokens.push_back({n.symbol, true, forward ? n.mark : flip(n.mark)});
        d = forward ? fwd : back;
        break;
      }
    }
    if (d == walk.start) return std::nullopt;
  }
  return std::nullopt;
}

PlanarMap build_chord_map(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c,
                          const std::vector<std::pair<Side, Side>>& sides) {
  if (sides.size() != c.chords.size()) throw std::invalid_argument("build_chord_map: one side pair per chord");
  PlanarMap map(g, rot);

  struct Slot {
    int index;
    int chord;
    bool is_a;
  };
  std::vector<std::vector<Slot>> per_edge(g.edge_count());
  for (int i = 0; i < c.size(); ++i) {
    per_edge.at(c.chords[i].a.edge).push_back({c.chords[i].a.index, i, true});
    per_edge.at(c.chords[i].b.edge).push_back({c.chords[i].b.index, i, false});
  }
  std::vector<VertexId> node_a(c.size()), node_b(c.size());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    auto& slots = per_edge[e];
    std::sort(slots.begin(), slots.end(), [](const Slot& x, const Slot& y) { return x.index < y.index; });
    EdgeId piece = e;
    for (const Slot& s : slots) {
      const Chord& ch = c.chords[s.chord];
      auto [node, rest] = map.subdivide(piece, ch.id + (s.is_a ? "@a" : "@b"));
      MapNode& n = map.node(node);
      n.symbol = ch.id;
      n.mark = s.is_a ? ch.a.mark : ch.b.mark;
      (s.is_a ? node_a : node_b)[s.chord] = node;
      piece = rest;
    }
  }
  for (int i = 0; i < c.size(); ++i)
    map.add_chord("chord:" + c.chords[i].id, node_a[i], sides[i].first, node_b[i], sides[i].second);
  return map;
}

}  // namespace gaussgraph
