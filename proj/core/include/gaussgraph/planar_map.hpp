#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gaussgraph/chords.hpp"
#include "gaussgraph/graph.hpp"

namespace gaussgraph {

/// Symbol occurrence along an edge: an unsplit crossing symbol, or one end of a
/// split symbol carrying a mark.
struct Token {
  std::string symbol;
  bool split = false;
  Mark mark = Mark::Plain;

  bool operator==(const Token&) const = default;
};

enum class NodeKind { Original, Crossing, Endpoint };

const char* to_string(NodeKind k);

struct MapNode {
  NodeKind kind = NodeKind::Original;
  std::string name;
  /// crossing or chord symbol
  std::string symbol;
  /// mark of an endpoint, read travelling from `back_edge` into `fwd_edge`
  Mark mark = Mark::Plain;
  EdgeId back_edge = -1;
  EdgeId fwd_edge = -1;
  std::vector<Dart> rotation;
  bool alive = true;
};

struct MapEdge {
  std::string name;
  VertexId tail = 0;
  VertexId head = 0;
  bool chord = false;
  bool alive = true;
};

/// Result of walking a strand from an original vertex.
struct StrandWalk {
  Dart start;
  Dart stop;  // arrival dart at the final original vertex
  std::vector<Token> tokens;
  std::vector<VertexId> crossings;
};

/// Mutable rotation-system map supporting subdivision, chord insertion and
/// chord contraction. Node and edge ids stay stable until `compacted()`.
class PlanarMap {
 public:
  PlanarMap() = default;
  /// Copies an embedded graph; every vertex becomes an Original node.
  PlanarMap(const Multigraph& g, const RotationSystem& rot);

  VertexId add_node(MapNode node);
  EdgeId add_edge(std::string name, VertexId tail, VertexId head, bool chord = false);

  const std::vector<MapNode>& nodes() const { return nodes_; }
  const std::vector<MapEdge>& edges() const { return edges_; }
  const MapNode& node(VertexId v) const { return nodes_.at(v); }
  MapNode& node(VertexId v) { return nodes_.at(v); }
  const MapEdge& edge(EdgeId e) const { return edges_.at(e); }

  VertexId vertex_of(Dart d) const {
    const MapEdge& e = edges_.at(d.edge);
    return d.end == End::Tail ? e.tail : e.head;
  }
  int position(Dart d) const;

  /// Splits edge `e` at a new Endpoint node. Edge `e` keeps the tail half; the
  /// returned edge is the head half.
  std::pair<VertexId, EdgeId> subdivide(EdgeId e, const std::string& node_name);

  /// Attaches a chord between two degree-2 Endpoint nodes, leaving each on the
  /// given side of its (directed) edge.
  EdgeId add_chord(const std::string& name, VertexId from, Side from_side, VertexId to, Side to_side);

  /// Contracts a chord edge into a degree-4 Crossing node named after `symbol`.
  VertexId contract(EdgeId chord, const std::string& symbol);

  /// Dense (graph, rotation) view of live nodes and edges, plus the id maps.
  struct Dense {
    Multigraph graph;
    RotationSystem rotation;
    std::vector<VertexId> node_of;  // dense vertex -> node
    std::vector<EdgeId> edge_of;    // dense edge -> map edge
  };
  Dense dense() const;
  int genus() const;

  PlanarMap compacted() const;

  /// Follows a strand from dart `d` (leaving an Original node) through
  /// crossings and endpoints until it reaches an Original node. Returns
  /// nullopt if it closes up without reaching one.
  std::optional<StrandWalk> walk_strand(Dart d) const;

  /// Dart of an Original node at a rotation slot.
  Dart dart_at(VertexId v, int slot) const { return nodes_.at(v).rotation.at(slot); }

 private:
  std::vector<MapNode> nodes_;
  std::vector<MapEdge> edges_;
};

/// The graph H_C: every edge subdivided at its chord endpoints (ordered by
/// index) and one chord edge per chord, attached on the given sides.
/// Endpoint nodes carry the chord id as symbol and the endpoint mark.
PlanarMap build_chord_map(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c,
                          const std::vector<std::pair<Side, Side>>& sides);

}  // namespace gaussgraph
