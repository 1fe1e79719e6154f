#pragma once

#include <optional>

#include "gaussgraph/extension.hpp"
#include "gaussgraph/gausscode.hpp"
#include "gaussgraph/immersion.hpp"

namespace gaussgraph {

struct Realization {
  bool realizable = false;
  bool curve = false;
  /// input as a graph code (curves sit on the basepoint loop)
  GraphGaussCode input;
  SplitCode split;
  std::optional<ExtensionCertificate> certificate;
  std::optional<RefusalWitness> witness;
  std::optional<Immersion> immersion;
};

/// Splits the curve, decides the circle diagram and reconstructs on yes.
Realization realize_curve(const CrossingSequence& seq);

/// Splits the code, refuses non-planar split graphs, runs extend_general on
/// the split code and reconstructs on yes. Throws std::invalid_argument for
/// invalid codes and disconnected graphs.
Realization realize_graph(const GraphGaussCode& code);

/// Re-checks a realization: a yes must carry a valid immersion whose code is
/// equivalent to the input and a certificate that replays; a no must carry a
/// witness that holds on the split code.
bool validate_realization(const Realization& r);

}  // namespace gaussgraph
