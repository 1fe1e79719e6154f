#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gaussgraph/chords.hpp"
#include "gaussgraph/gausscode.hpp"
#include "gaussgraph/graph.hpp"
#include "gaussgraph/immersion.hpp"

namespace gaussgraph {

/// Brute-force checkers. None of them use the decision procedures.

inline constexpr int kBruteCircleMax = 16;
inline constexpr int kBruteCurveMax = 12;
inline constexpr int kBruteSidesMaxBits = 22;

/// Diagram on a single loop: tries every inside/outside assignment. Oriented
/// diagrams also need opposite marks on every chord.
bool brute_extend_circle(const Multigraph& g, const ChordDiagram& c);

/// Closed curve with the given crossing sequence (each symbol twice): tries
/// both interleavings at every crossing but the first and accepts iff one of
/// the 4-valent maps has genus 0.
bool brute_realize_curve(const std::vector<std::string>& sequence);

/// Tries every choice of sides for every chord and accepts iff the resulting
/// H_C has genus 0. For oriented diagrams the sides must agree with the marks;
/// with `free_at_cut_edges`, endpoints on cut edges may use either side.
bool brute_extend_embedded(const Multigraph& g, const RotationSystem& rot, const ChordDiagram& c,
                           bool free_at_cut_edges = false);

enum class GenBase { Any, Curve, Cycle, Theta, Dumbbell };

const char* to_string(GenBase b);

struct GenParams {
  GenBase base = GenBase::Any;
  /// cycle length or theta multiplicity; 0 picks one at random
  int base_size = 0;
  /// crossings to insert; negative picks 0..max_crossings at random
  int crossings = -1;
  int max_crossings = 12;
};

struct GeneratedImmersion {
  GenBase base = GenBase::Curve;
  Immersion immersion;
  ParsedCode code;
};

/// Immersion built by construction: starting from an embedded base graph,
/// each step joins two points on the boundary of one face by a chord and
/// contracts it into a crossing. Steps that would leave a closed strand are
/// skipped. Curves use the basepoint loop.
GeneratedImmersion generate_immersion(std::uint64_t seed, const GenParams& params = {});

}  // namespace gaussgraph
