#pragma once

#include <string>
#include <vector>

#include "gaussgraph/extension.hpp"
#include "gaussgraph/gausscode.hpp"
#include "gaussgraph/planar_map.hpp"

namespace gaussgraph {

/// Strand of one original edge: leaves `tail` at rotation slot `tail_slot`
/// and arrives at `head` at `head_slot`.
struct ImmersedEdge {
  std::string name;
  VertexId tail = 0;
  int tail_slot = 0;
  VertexId head = 0;
  int head_slot = 0;
};

/// Planar map whose nodes are original vertices and degree-4 crossings.
struct Immersion {
  PlanarMap map;
  std::vector<ImmersedEdge> edges;
  /// closed curve attached to the basepoint vertex
  bool curve = false;
};

/// Reads strands off a map with Original and Crossing nodes only. Strands are
/// named s0, s1, ... in order of their first dart (nodes ascending, slots
/// ascending). Throws std::logic_error on closed strands.
Immersion immersion_from_map(const PlanarMap& map, bool curve = false);

/// Checks a map against a code: from every record's tail anchor the strand
/// must read the record's tokens and arrive at its head anchor, and the
/// strands must cover every non-chord edge. Returns an empty string on
/// success, otherwise the first mismatch.
std::string map_mismatch(const PlanarMap& map, const GraphGaussCode& code);

/// Contracts the chord of `symbol` into a crossing and checks the result
/// against `before`, the sequences in effect before the symbol was split.
/// Throws std::logic_error if the chord is missing or the check fails.
void expand_chord(PlanarMap& map, const std::string& symbol, const GraphGaussCode& before);

/// Builds H_C from the certificate and expands the chords in reverse split
/// order, checking every intermediate snapshot.
Immersion reconstruct(const ExtensionCertificate& cert, const SplitCode& split);

GraphGaussCode graph_code_of(const Immersion& imm);
/// CrossingSequence for curves (basepoint dropped), GraphGaussCode otherwise.
ParsedCode code_of(const Immersion& imm);

/// Structural problems: genus, leftover endpoints or chords, crossing degree,
/// strand coverage. Empty when the immersion is valid.
std::vector<std::string> immersion_problems(const Immersion& imm);

}  // namespace gaussgraph
