#include "gaussgraph/immersion.hpp"

#include <map>
#include <stdexcept>

namespace gaussgraph {

namespace {

std::map<std::string, VertexId> original_nodes(const PlanarMap& map) {
  std::map<std::string, VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(map.nodes().size()); ++v)
    if (map.node(v).alive && map.node(v).kind == NodeKind::Original) out[map.node(v).name] = v;
  return out;
}

int strand_edges(const PlanarMap& map) {
  int n = 0;
  for (const MapEdge& e : map.edges()) n += e.alive && !e.chord;
  return n;
}

}  // namespace

Immersion immersion_from_map(const PlanarMap& map, bool curve) {
  Immersion imm{map, {}, curve};
  std::vector<bool> used(map.edges().size(), false);
  int covered = 0;
  for (VertexId v = 0; v < static_cast<VertexId>(map.nodes().size()); ++v) {
    const MapNode& n = map.node(v);
    if (!n.alive || n.kind != NodeKind::Original) continue;
    for (int slot = 0; slot < static_cast<int>(n.rotation.size()); ++slot) {
      const Dart d = n.rotation[slot];
      if (used[d.edge]) continue;
      auto walk = map.walk_strand(d);
      if (!walk) throw std::logic_error("strand without an original vertex");
      used[d.edge] = used[walk->stop.edge] = true;
      covered += static_cast<int>(walk->tokens.size()) + 1;
      const VertexId head = map.vertex_of(walk->stop);
      imm.edges.push_back({"s" + std::to_string(imm.edges.size()), v, slot, head, map.position(walk->stop)});
    }
  }
  if (covered != strand_edges(map)) throw std::logic_error("closed strand without an original vertex");
  return imm;
}

std::string map_mismatch(const PlanarMap& map, const GraphGaussCode& code) {
  const auto node = original_nodes(map);
  int covered = 0;
  for (const CodeRecord& r : code.records) {
    auto t = node.find(r.tail.vertex);
    auto h = node.find(r.head.vertex);
    if (t == node.end() || h == node.end()) return "edge " + r.edge + ": unknown vertex";
    const auto& ring = map.node(t->second).rotation;
    if (r.tail.slot >= static_cast<int>(ring.size())) return "edge " + r.edge + ": tail slot out of range";
    auto walk = map.walk_strand(ring[r.tail.slot]);
    if (!walk) return "edge " + r.edge + ": strand does not reach an original vertex";
    if (walk->tokens != r.tokens)
      return "edge " + r.edge + ": reads '" + format_tokens(walk->tokens) + "', expected '" +
             format_tokens(r.tokens) + "'";
    if (map.vertex_of(walk->stop) != h->second || map.position(walk->stop) != r.head.slot)
      return "edge " + r.edge + ": ends at the wrong anchor";
    covered += static_cast<int>(walk->tokens.size()) + 1;
  }
  if (covered != strand_edges(map)) return "strands do not cover the map";
  return {};
}

void expand_chord(PlanarMap& map, const std::string& symbol, const GraphGaussCode& before) {
  EdgeId chord = -1;
  for (EdgeId e = 0; e < static_cast<EdgeId>(map.edges().size()); ++e)
    if (map.edge(e).alive && map.edge(e).chord && map.edge(e).name == "chord:" + symbol) chord = e;
  if (chord < 0) throw std::logic_error("expand_chord: no chord for '" + symbol + "'");
  map.contract(chord, symbol);
  if (auto bad = map_mismatch(map, before); !bad.empty())
    throw std::logic_error("expand_chord " + symbol + ": " + bad);
}

Immersion reconstruct(const ExtensionCertificate& cert, const SplitCode& split) {
  const SplitGraph sg = build_split_graph(split.code);
  PlanarMap map = build_chord_map(sg.graph, sg.rotation, sg.chords, placement_sides(cert, sg.chords));
  if (auto bad = map_mismatch(map, split.code); !bad.empty()) throw std::logic_error("reconstruct: " + bad);
  for (std::size_t i = split.trace.steps.size(); i-- > 0;)
    expand_chord(map, split.trace.steps[i].symbol, split.trace.before(i));

  map = map.compacted();
  const GraphGaussCode& code = split.trace.initial;
  const auto node = original_nodes(map);
  Immersion imm{map, {}, code.vertices.size() == 1 && code.vertices[0] == kBasepoint && code.records.size() == 1};
  for (const CodeRecord& r : code.records)
    imm.edges.push_back({r.edge, node.at(r.tail.vertex), r.tail.slot, node.at(r.head.vertex), r.head.slot});
  return imm;
}

GraphGaussCode graph_code_of(const Immersion& imm) {
  GraphGaussCode code;
  for (const MapNode& n : imm.map.nodes())
    if (n.alive && n.kind == NodeKind::Original) code.vertices.push_back(n.name);
  for (const ImmersedEdge& e : imm.edges) {
    auto walk = imm.map.walk_strand(imm.map.dart_at(e.tail, e.tail_slot));
    if (!walk) throw std::logic_error("code_of: closed strand");
    if (imm.map.vertex_of(walk->stop) != e.head || imm.map.position(walk->stop) != e.head_slot)
      throw std::logic_error("code_of: strand " + e.name + " ends at the wrong anchor");
    code.records.push_back({e.name,
                            {imm.map.node(e.tail).name, e.tail_slot},
                            walk->tokens,
                            {imm.map.node(e.head).name, e.head_slot}});
  }
  return code;
}

ParsedCode code_of(const Immersion& imm) {
  GraphGaussCode code = graph_code_of(imm);
  if (imm.curve) return CrossingSequence{code.records.at(0).tokens};
  return code;
}

std::vector<std::string> immersion_problems(const Immersion& imm) {
  std::vector<std::string> out;
  const PlanarMap& map = imm.map;
  for (const MapNode& n : map.nodes()) {
    if (!n.alive) continue;
    if (n.kind == NodeKind::Endpoint) out.push_back("endpoint node " + n.name + " left over");
    if (n.kind == NodeKind::Crossing && n.rotation.size() != 4)
      out.push_back("crossing " + n.name + " has degree " + std::to_string(n.rotation.size()));
  }
  for (const MapEdge& e : map.edges())
    if (e.alive && e.chord) out.push_back("chord edge " + e.name + " left over");
  if (!out.empty()) return out;
  if (const int g = map.genus(); g != 0) out.push_back("map has genus " + std::to_string(g));
  try {
    const GraphGaussCode code = graph_code_of(imm);
    if (auto bad = map_mismatch(map, code); !bad.empty()) out.push_back(bad);
    std::map<std::string, int> visits;
    for (const auto& r : code.records)
      for (const Token& t : r.tokens) ++visits[t.symbol];
    for (const MapNode& n : map.nodes())
      if (n.alive && n.kind == NodeKind::Crossing && visits[n.symbol] != 2)
        out.push_back("crossing " + n.name + " visited " + std::to_string(visits[n.symbol]) + " times");
  } catch (const std::logic_error& e) {
    out.push_back(e.what());
  }
  return out;
}

}  // namespace gaussgraph
