#include "gaussgraph/realize.hpp"

#include <stdexcept>

namespace gaussgraph {

namespace {

Realization finish(Realization r, ExtensionResult ext) {
  r.realizable = ext.yes();
  r.certificate = std::move(ext.certificate);
  r.witness = std::move(ext.witness);
  if (r.realizable) r.immersion = reconstruct(*r.certificate, r.split);
  return r;
}

}  // namespace

Realization realize_curve(const CrossingSequence& seq) {
  validate(seq);
  for (const Token& t : seq.tokens)
    if (t.split) throw std::invalid_argument("realize_curve: input contains split tokens");
  Realization r;
  r.curve = true;
  r.input = curve_as_graph(seq);
  r.split = full_split(r.input);
  const SplitGraph sg = build_split_graph(r.split.code);
  return finish(std::move(r), extend_circle(sg.graph, sg.rotation, sg.chords));
}

Realization realize_graph(const GraphGaussCode& code) {
  validate(code);
  for (const auto& rec : code.records)
    for (const Token& t : rec.tokens)
      if (t.split) throw std::invalid_argument("realize_graph: input contains split tokens");
  if (!connected(underlying_graph(code).graph)) throw std::invalid_argument("realize_graph: graph is disconnected");
  Realization r;
  r.input = code;
  r.split = full_split(code);
  const SplitGraph sg = build_split_graph(r.split.code);
  return finish(std::move(r), extend_general(sg.graph, sg.rotation, sg.chords));
}

bool validate_realization(const Realization& r) {
  const SplitGraph sg = build_split_graph(r.split.code);
  ExtensionResult ext{r.certificate, r.witness};
  if (!validate_result(ext, sg.graph, sg.rotation, sg.chords)) return false;
  if (r.realizable != ext.yes()) return false;
  if (!r.realizable) return !r.immersion;
  if (!r.immersion || !immersion_problems(*r.immersion).empty()) return false;
  const ParsedCode input = r.curve ? ParsedCode(CrossingSequence{r.input.records.at(0).tokens}) : ParsedCode(r.input);
  return equivalent_codes(code_of(*r.immersion), input);
}

}  // namespace gaussgraph
