#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gaussgraph {

using VertexId = int;
using EdgeId = int;

enum class End : std::uint8_t { Tail = 0, Head = 1 };

/// Side of a directed edge, looking along tail -> head.
enum class Side : std::uint8_t { Left = 0, Right = 1 };

inline Side opposite(Side s) { return s == Side::Left ? Side::Right : Side::Left; }
const char* to_string(Side s);

/// One end of an edge. A loop contributes two darts at the same vertex.
struct Dart {
  EdgeId edge = 0;
  End end = End::Tail;

  int index() const { return 2 * edge + static_cast<int>(end); }
  static Dart from_index(int i) { return {i / 2, static_cast<End>(i % 2)}; }
  Dart twin() const { return {edge, end == End::Tail ? End::Head : End::Tail}; }

  /// Side of the edge that lies to the right of a walk traversing this dart
  /// away from its vertex.
  Side right_side() const { return end == End::Tail ? Side::Right : Side::Left; }

  auto operator<=>(const Dart&) const = default;
};

struct Edge {
  std::string name;
  VertexId tail = 0;
  VertexId head = 0;

  bool is_loop() const { return tail == head; }

  bool operator==(const Edge&) const = default;
};

/// Directed multigraph; loops and parallel edges allowed. Vertex and edge ids
/// are dense indices; names are kept for I/O.
class Multigraph {
 public:
  VertexId add_vertex(std::string name);
  EdgeId add_edge(std::string name, VertexId tail, VertexId head);

  int vertex_count() const { return static_cast<int>(vertex_names_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int dart_count() const { return 2 * edge_count(); }

  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& vertex_name(VertexId v) const { return vertex_names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return vertex_names_; }

  std::optional<VertexId> find_vertex(const std::string& name) const;
  std::optional<EdgeId> find_edge(const std::string& name) const;

  /// Vertex a dart is attached to.
  VertexId vertex_of(Dart d) const {
    const Edge& e = edges_.at(d.edge);
    return d.end == End::Tail ? e.tail : e.head;
  }

  /// Darts at each vertex in ascending dart index order.
  std::vector<std::vector<Dart>> incidence() const;
  int degree(VertexId v) const;

  bool operator==(const Multigraph&) const = default;

 private:
  std::vector<std::string> vertex_names_;
  std::vector<Edge> edges_;
  std::map<std::string, VertexId> vertex_index_;
  std::map<std::string, EdgeId> edge_index_;
};

/// Counterclockwise cyclic order of darts around every vertex.
class RotationSystem {
 public:
  RotationSystem() = default;

  /// Throws std::invalid_argument unless every dart of `g` appears exactly once,
  /// at its own vertex.
  RotationSystem(const Multigraph& g, std::vector<std::vector<Dart>> order);

  /// Rotation that lists darts in ascending index order at every vertex.
  static RotationSystem canonical(const Multigraph& g);

  const std::vector<Dart>& at(VertexId v) const { return order_.at(v); }
  const std::vector<std::vector<Dart>>& orders() const { return order_; }

  Dart next_ccw(Dart d) const;
  Dart prev_ccw(Dart d) const;
  /// Position of `d` inside its vertex list (the vertex slot).
  int slot_of(Dart d) const { return position_.at(d.index()); }

  /// Equality up to cyclic rotation of each vertex list.
  bool equivalent(const RotationSystem& other) const;

  bool operator==(const RotationSystem&) const = default;

 private:
  std::vector<std::vector<Dart>> order_;
  std::vector<int> position_;
  std::vector<VertexId> owner_;
};

struct Face {
  /// Darts traversed away from their vertex; the face lies to the right of
  /// each traversal.
  std::vector<Dart> walk;
};

class FaceSet {
 public:
  FaceSet() = default;
  FaceSet(std::vector<Face> faces, int dart_count);

  int size() const { return static_cast<int>(faces_.size()); }
  const Face& face(int f) const { return faces_.at(f); }
  const std::vector<Face>& faces() const { return faces_; }
  int face_of(Dart d) const { return face_of_.at(d.index()); }

  /// Face lying on side `s` of edge `e`.
  int face_on(EdgeId e, Side s) const {
    return face_of(s == Side::Right ? Dart{e, End::Tail} : Dart{e, End::Head});
  }

 private:
  std::vector<Face> faces_;
  std::vector<int> face_of_;
};

bool connected(const Multigraph& g);

/// Bridges of a connected multigraph, ascending. Throws on disconnected input.
std::set<EdgeId> cut_edges(const Multigraph& g);

/// Face walk successor: leave along the next dart counterclockwise after the
/// arrival dart.
inline Dart face_successor(const RotationSystem& rot, Dart d) { return rot.next_ccw(d.twin()); }

/// Faces ordered by their smallest dart index; each walk starts at that dart.
FaceSet trace_faces(const Multigraph& g, const RotationSystem& rot);

/// Genus of the surface the rotation embeds a connected graph in.
int genus(const Multigraph& g, const RotationSystem& rot);
bool is_planar_rotation(const Multigraph& g, const RotationSystem& rot);

struct BlowUp {
  Multigraph graph;
  RotationSystem rotation;
  /// original edge -> added parallel edge
  std::map<EdgeId, EdgeId> sibling;
};

/// Adds a parallel partner e' for each e in `edges`, placed next to e so that
/// e and e' bound a digon: e' follows e counterclockwise at the tail and
/// precedes it at the head. New edges are appended in ascending order of e.
BlowUp blow_up(const Multigraph& g, const RotationSystem& rot, const std::set<EdgeId>& edges);

}  // namespace gaussgraph
