#pragma once

#include <nlohmann/json.hpp>

#include "gaussgraph/extension.hpp"
#include "gaussgraph/gausscode.hpp"
#include "gaussgraph/immersion.hpp"
#include "gaussgraph/realize.hpp"

namespace gaussgraph {

using Json = nlohmann::ordered_json;

Json to_json(const RefusalWitness& w);
/// `{verdict, labeling, routing, euler}` or `{verdict, witness}`.
Json to_json(const ExtensionResult& r);

/// Curves: `{curve: [tokens]}`; graphs: `{vertices, edges}`. Split tokens are
/// listed under `split`, barred ones written `~A`.
Json to_json(const ParsedCode& code);
Json to_json(const SplitTrace& trace);

/// `{curve, vertices, edges, rotation, crossings, strands}`. Rotation lists
/// hold dart numbers 2 * edge + (0 at the tail, 1 at the head).
Json to_json(const Immersion& imm);
Immersion immersion_from_json(const Json& j);

/// `{realizable, split_code, split_trace, certificate | witness, immersion?}`.
Json to_json(const Realization& r);

}  // namespace gaussgraph
