#pragma once

#include <string>

#include "gaussgraph/immersion.hpp"

namespace gaussgraph::cli {

/// Schematic drawing: the longest face goes on a circle and the remaining
/// nodes sit at the barycentre of their neighbours.
std::string render_svg(const Immersion& imm);
std::string render_dot(const Immersion& imm);

}  // namespace gaussgraph::cli
