#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gaussgraph/chords.hpp"
#include "gaussgraph/graph.hpp"
#include "gaussgraph/labeling.hpp"

namespace gaussgraph {

/// Where a chord goes: a region of the original embedding plus the side of
/// each endpoint edge it leaves from.
struct ChordPlacement {
  std::string chord;
  std::string region;  // R<face> in the original embedding
  int face = 0;
  Side side_a = Side::Left;
  Side side_b = Side::Left;
  /// Pairing used after blowing up cut edges (equals `chord` otherwise).
  std::string pairing;
};

struct RoutedArc {
  std::string chord;
  /// positions of the endpoints along the face walk, from < to
  int from = 0;
  int to = 0;
  /// number of arcs of the same face enclosing this one
  int depth = 0;
};

struct RegionRouting {
  std::string region;
  int face = 0;
  /// sorted by `from`
  std::vector<RoutedArc> arcs;
};

struct ExtensionCertificate {
  /// sorted by chord id
  std::vector<ChordPlacement> labeling;
  std::vector<RegionRouting> routing;
  /// V - E + F of H_C
  int euler = 2;
};

struct RespectsWitness {
  std::string chord;
};

/// Odd cycle of chords in the intersection graph of a circle diagram.
struct OddCycleWitness {
  std::vector<std::string> chords;
};

/// Contradiction in the region labelling problem: a chain of forced choices
/// x -> ... -> not x -> ... -> x. Items are chord ids, or pairing ids after
/// blow-up. Unoriented diagrams with chords between two cut edges are solved
/// per choice of pairing family; there is then one case per combination,
/// listing the pairings left out.
struct ImplicationWitness {
  struct Step {
    std::string from_item, from_region, to_item, to_region;
    ImplicationReason reason = ImplicationReason::Conflict;
    std::string other;
  };
  struct Case {
    std::vector<std::string> excluded;
    std::vector<Step> chain;
  };
  std::vector<Case> cases;
};

struct GenusWitness {
  int genus = 0;
};

using RefusalWitness = std::variant<RespectsWitness, OddCycleWitness, ImplicationWitness, GenusWitness>;

const char* witness_kind(const RefusalWitness& w);

struct ExtensionResult {
  std::optional<ExtensionCertificate> certificate;
  std::optional<RefusalWitness> witness;

  bool yes() const { return certificate.has_value(); }
};

/// Circle case: a graph that is a single cycle. Throws std::invalid_argument
/// for any other shape.
ExtensionResult extend_circle(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c);

/// Graphs without cut edges. Throws std::invalid_argument if there are any.
ExtensionResult extend_nocut(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c);

/// Any connected graph. Cut edges are blown up first.
ExtensionResult extend_general(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c);

/// Diagram after blowing up cut edges and dropping pairings that do not
/// respect the blown-up embedding.
struct Reduction {
  BlowUp blowup;
  /// R<f> for every face f of the original embedding, then S<f> for every face
  /// that contains cut edges. `region_of_side` refers to the blown-up graph.
  RegionSet regions;
  int r_count = 0;
  /// surviving pairings on the blown-up graph
  ChordDiagram diagram;
  /// per surviving pairing: index of the original chord
  std::vector<int> origin;
  /// per surviving pairing: attachments on `regions`
  std::vector<std::vector<Attachment>> attachments;
  /// original chord id -> surviving pairing ids
  std::map<std::string, std::vector<std::string>> siblings;
  /// per original chord: number of endpoints on cut edges
  std::vector<int> cut_endpoints;
};

Reduction reduce_after_blowup(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c);

/// Builds the certificate for a labelling. Throws std::logic_error if two arcs
/// of one face alternate or the replayed H_C is not planar.
ExtensionCertificate route_arcs(std::vector<ChordPlacement> labeling, const ChordDiagram& c, const Multigraph& g,
                                const RotationSystem& rot);

/// Side pairs per chord (in diagram order) taken from a certificate.
std::vector<std::pair<Side, Side>> placement_sides(const ExtensionCertificate& cert, const ChordDiagram& c);

/// Independent re-check of a verdict: certificates must replay to a planar H_C
/// with every placement respecting its region; witnesses must hold on the
/// inputs.
bool validate_result(const ExtensionResult& r, const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c);

}  // namespace gaussgraph
