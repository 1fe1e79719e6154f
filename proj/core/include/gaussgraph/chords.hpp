#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gaussgraph/graph.hpp"

namespace gaussgraph {

enum class Mark : std::uint8_t { Plain = 0, Barred = 1 };

inline Mark flip(Mark m) { return m == Mark::Plain ? Mark::Barred : Mark::Plain; }

/// A point in the interior of an edge. `index` orders the points of one edge
/// from tail to head.
struct ChordEndpoint {
  EdgeId edge = 0;
  int index = 0;
  Mark mark = Mark::Plain;

  auto operator<=>(const ChordEndpoint&) const = default;
};

struct Chord {
  std::string id;
  ChordEndpoint a;
  ChordEndpoint b;

  bool operator==(const Chord&) const = default;
};

struct ChordDiagram {
  std::vector<Chord> chords;
  /// When false, marks are ignored everywhere.
  bool oriented = true;

  int size() const { return static_cast<int>(chords.size()); }
  std::optional<int> find(std::string_view id) const;

  /// Checks edge references, unique chord ids and unique points. With
  /// `contiguous`, the indices on each edge must be exactly 0..k-1.
  void validate(const Multigraph& g, bool contiguous = true) const;

  bool operator==(const ChordDiagram&) const = default;
};

/// Chord format: `chord <id> <edge>@<index>[~] <edge>@<index>[~]`, plus an
/// optional `unoriented` line.
ChordDiagram parse_chords(std::string_view text, const Multigraph& g);
std::string write_chords(const ChordDiagram& c, const Multigraph& g);

/// Boundary atom: a graph vertex, or the segment of an edge between
/// consecutive subdivision points (segment s precedes the s-th point).
struct Atom {
  enum class Kind : std::uint8_t { Vertex, Segment };
  Kind kind = Kind::Vertex;
  int id = 0;       // vertex or edge id
  int segment = 0;  // segment rank along the edge; corner key for vertices, 0 unless per-corner

  static Atom vertex(VertexId v) { return {Kind::Vertex, v, 0}; }
  static Atom segment_of(EdgeId e, int s) { return {Kind::Segment, e, s}; }
  auto operator<=>(const Atom&) const = default;
};

/// Cyclic boundary walk of a region. Regions are usually faces, but may also
/// be unions of faces whose walk jumps between non-adjacent darts.
struct Region {
  std::string label;
  std::vector<Dart> walk;
};

/// Regions of an embedding together with the region lying on each side of
/// each edge.
struct RegionSet {
  std::vector<Region> regions;
  /// indexed by 2 * edge + side
  std::vector<int> region_of_side;

  int region_on(EdgeId e, Side s) const { return region_of_side.at(2 * e + static_cast<int>(s)); }
};

/// One region per face, labelled R0, R1, ... in face order.
RegionSet face_regions(const Multigraph& g, const FaceSet& faces);

struct BoundaryPath {
  int region = 0;
  /// sorted, duplicate-free
  std::vector<Atom> atoms;
  /// atoms in walk order from endpoint a to endpoint b
  std::vector<Atom> walk;
};

bool properly_intersect(const BoundaryPath& p, const BoundaryPath& q);
bool properly_intersect(const std::vector<Atom>& p, const std::vector<Atom>& q);

/// A way of attaching a chord to a region: the region plus the side of each
/// endpoint edge the chord leaves from.
struct Attachment {
  int region = 0;
  Side side_a = Side::Left;
  Side side_b = Side::Left;

  auto operator<=>(const Attachment&) const = default;
};

/// Attachments where both endpoints lie on the region boundary and, for
/// oriented diagrams, the marks agree with the sides: same side needs opposite
/// marks, opposite sides need equal marks. Marks are not checked at an
/// endpoint on an edge of `cuts`.
std::vector<Attachment> attachments(const Chord& chord, bool oriented, const RegionSet& regions,
                                    const std::set<EdgeId>& cuts);

/// True when the chord has at least one attachment to a face.
bool respects(const Chord& chord, bool oriented, const Multigraph& g, const FaceSet& faces,
              const std::set<EdgeId>& cuts);

/// Subdivision of a graph's edges at the endpoints of a chord diagram.
class Subdivision {
 public:
  Subdivision(const Multigraph& g, const ChordDiagram& c);

  /// Rank of a point among the points of its edge.
  int rank(EdgeId e, int index) const;
  int points_on(EdgeId e) const { return static_cast<int>(indices_.at(e).size()); }
  const std::vector<int>& indices(EdgeId e) const { return indices_.at(e); }

 private:
  std::vector<std::vector<int>> indices_;
};

struct BoundaryPoint {
  EdgeId edge = 0;
  int index = 0;
  /// side of the edge facing the region
  Side side = Side::Left;
};

/// Chord endpoints in the order they are met along a region's walk.
std::vector<BoundaryPoint> boundary_points(const Region& region, const Subdivision& sub);

/// How boundary walks name vertices. `Shared`: one atom per vertex. `PerCorner`:
/// one atom per corner, so walks through a cut vertex at different corners of
/// a face do not meet there.
enum class VertexAtoms : std::uint8_t { Shared, PerCorner };

/// Simple walks between the chord's endpoints along single region boundaries,
/// deduplicated by atom set. Throws std::logic_error if more than four arise.
std::vector<BoundaryPath> boundary_paths(const Chord& chord, const Multigraph& g, const RegionSet& regions,
                                         const Subdivision& sub, VertexAtoms mode = VertexAtoms::Shared);

/// Convenience overload on the faces of a rotation.
std::vector<BoundaryPath> boundary_paths(const ChordDiagram& c, int chord, const Multigraph& g,
                                         const RotationSystem& rot);

struct IntersectionGraph {
  std::vector<std::string> chords;
  std::set<std::pair<int, int>> edges;          // i < j
  std::set<std::pair<int, int>> sibling_edges;  // subset of edges
  /// Path pairs compared while building the graph.
  std::size_t comparisons = 0;

  int size() const { return static_cast<int>(chords.size()); }
  bool adjacent(int i, int j) const;
  std::vector<std::vector<int>> adjacency_lists() const;
};

/// Upper bound on path-pair comparisons for n chords: 16 * C(n, 2).
std::size_t comparison_bound(std::size_t n);

/// Adjacency iff every pair of single-region boundary paths properly
/// intersects; a chord without any such path is adjacent to every chord.
IntersectionGraph intersection_graph(const ChordDiagram& c, const Multigraph& g, const RegionSet& regions,
                                     VertexAtoms mode = VertexAtoms::Shared);

IntersectionGraph intersection_graph_embedded(const ChordDiagram& c, const Multigraph& g,
                                              const RotationSystem& rot);

/// Limits for the exhaustive intersection graph.
inline constexpr int kFullMaxEdges = 12;
inline constexpr int kFullMaxSegments = 32;

/// Intersection graph over all simple paths of the subdivided graph.
/// Exponential; throws std::length_error beyond the size guard.
IntersectionGraph intersection_graph_full(const ChordDiagram& c, const Multigraph& g);

/// Odd cycle (closed, first vertex not repeated) if the graph is not
/// bipartite; otherwise a 2-coloring via `colors`.
std::optional<std::vector<int>> find_odd_cycle(const std::vector<std::vector<int>>& adj,
                                               std::vector<int>* colors = nullptr);

}  // namespace gaussgraph
