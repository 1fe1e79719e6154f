#include <gtest/gtest.h>

#include "gaussgraph/immersion.hpp"
#include "gaussgraph/oracle.hpp"
#include "gaussgraph/realize.hpp"
#include "support.hpp"

using namespace gaussgraph;
using namespace gaussgraph::testing;

namespace {

CrossingSequence word(const std::vector<std::string>& w) {
  CrossingSequence seq;
  for (const auto& s : w) seq.tokens.push_back({s});
  return seq;
}

int euler(const PlanarMap& map) {
  const auto d = map.dense();
  return d.graph.vertex_count() - d.graph.edge_count() + trace_faces(d.graph, d.rotation).size();
}

// Walks every strand by hand, passing straight through crossings, and
// returns how often each crossing was visited. Fails on a crossing that is
// not 4-valent.
std::map<VertexId, int> straight_walks(const Immersion& imm) {
  const PlanarMap& map = imm.map;
  std::map<VertexId, int> visits;
  for (const ImmersedEdge& e : imm.edges) {
    Dart d = map.dart_at(e.tail, e.tail_slot);
    for (int guard = 0; guard < 10000; ++guard) {
      const Dart in = d.twin();
      const VertexId x = map.vertex_of(in);
      const MapNode& n = map.node(x);
      if (n.kind != NodeKind::Crossing) {
        EXPECT_EQ(x, e.head);
        EXPECT_EQ(map.position(in), e.head_slot);
        break;
      }
      EXPECT_EQ(n.rotation.size(), 4U);
      ++visits[x];
      d = n.rotation[(map.position(in) + 2) % 4];
    }
  }
  return visits;
}

void expect_valid(const Immersion& imm) {
  EXPECT_TRUE(immersion_problems(imm).empty());
  EXPECT_EQ(euler(imm.map), 2);
  int crossings = 0;
  for (const MapNode& n : imm.map.nodes()) crossings += n.kind == NodeKind::Crossing;
  const auto visits = straight_walks(imm);
  EXPECT_EQ(static_cast<int>(visits.size()), crossings);
  for (auto [_, k] : visits) EXPECT_EQ(k, 2);
}

Realization curve(const std::vector<std::string>& w) {
  Realization r = realize_curve(word(w));
  EXPECT_TRUE(r.realizable);
  return r;
}

PlanarMap chord_map(const Realization& r) {
  const SplitGraph sg = build_split_graph(r.split.code);
  return build_chord_map(sg.graph, sg.rotation, sg.chords, placement_sides(*r.certificate, sg.chords));
}

}  // namespace

TEST(ExpandChord, FigureEight) {
  const Realization r = curve({"A", "A"});
  PlanarMap map = chord_map(r);
  expand_chord(map, "A", r.split.trace.before(0));
  const Immersion imm = immersion_from_map(map.compacted(), true);
  ASSERT_EQ(imm.edges.size(), 1U);
  EXPECT_EQ(std::get<CrossingSequence>(code_of(imm)), word({"A", "A"}));
  expect_valid(imm);
}

TEST(ExpandChord, LastChordOfACurveClosesOneComponent) {
  const Realization r = curve({"A", "B", "C", "A", "B", "C"});
  PlanarMap map = chord_map(r);
  const auto& steps = r.split.trace.steps;
  expand_chord(map, steps.back().symbol, r.split.trace.before(steps.size() - 1));
  EXPECT_TRUE(map_mismatch(map, r.split.trace.before(steps.size() - 1)).empty());
  EXPECT_EQ(euler(map), 2);
}

TEST(ExpandChord, TrefoilInReverseOrder) {
  const Realization r = curve({"A", "B", "C", "A", "B", "C"});
  PlanarMap map = chord_map(r);
  const auto& steps = r.split.trace.steps;
  for (std::size_t i = steps.size(); i-- > 0;) expand_chord(map, steps[i].symbol, r.split.trace.before(i));
  const Immersion imm = immersion_from_map(map.compacted(), true);
  EXPECT_TRUE(equivalent_codes(code_of(imm), word({"A", "B", "C", "A", "B", "C"})));
  expect_valid(imm);
}

TEST(ExpandChord, WrongSnapshotOrMissingChord) {
  const Realization r = curve({"A", "B", "C", "A", "B", "C"});
  PlanarMap map = chord_map(r);
  EXPECT_THROW(expand_chord(map, "Z", r.split.trace.before(0)), std::logic_error);
  // the last split chord checked against the initial code
  PlanarMap again = chord_map(r);
  EXPECT_THROW(expand_chord(again, r.split.trace.steps.back().symbol, r.split.trace.before(0)), std::logic_error);
}

TEST(CodeOf, EmbeddingWithoutCrossings) {
  const auto eg = theta3();
  const Immersion imm = immersion_from_map(PlanarMap(eg.graph, eg.rotation));
  const GraphGaussCode code = graph_code_of(imm);
  ASSERT_EQ(code.records.size(), 3U);
  for (const auto& rec : code.records) EXPECT_TRUE(rec.tokens.empty());
  expect_valid(imm);
}

TEST(Reconstruct, ThetaGraph) {
  const auto code = std::get<GraphGaussCode>(
      parse_code("vertex v\nvertex w\nedge e1 v:0 w:2 : A B\nedge e2 v:1 w:1 : A B\nedge e3 v:2 w:0\n"));
  const Realization r = realize_graph(code);
  ASSERT_TRUE(r.realizable);
  const Immersion imm = reconstruct(*r.certificate, r.split);
  EXPECT_TRUE(equivalent_codes(code_of(imm), code));
  expect_valid(imm);
}

TEST(Reconstruct, SmoothingGivesTheSplitGraph) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const auto gen = generate_immersion(rng());
    const Realization r = gen.base == GenBase::Curve ? realize_curve(std::get<CrossingSequence>(gen.code))
                                                     : realize_graph(std::get<GraphGaussCode>(gen.code));
    ASSERT_TRUE(r.realizable);
    expect_valid(*r.immersion);
    const SplitCode again = full_split(graph_code_of(*r.immersion));
    EXPECT_TRUE(equivalent_codes(again.code, r.split.code));
    const SplitGraph a = build_split_graph(again.code);
    const SplitGraph b = build_split_graph(r.split.code);
    EXPECT_EQ(a.graph.vertex_count(), b.graph.vertex_count());
    EXPECT_EQ(a.graph.edge_count(), b.graph.edge_count());
    EXPECT_EQ(trace_faces(a.graph, a.rotation).size(), trace_faces(b.graph, b.rotation).size());
  }
}

TEST(Immersion, GeneratedMapsAreValid) {
  for (GenBase base : {GenBase::Curve, GenBase::Cycle, GenBase::Theta, GenBase::Dumbbell})
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const auto gen = generate_immersion(seed, {base, 0, -1, 12});
      EXPECT_EQ(gen.base, base);
      expect_valid(gen.immersion);
      EXPECT_TRUE(equivalent_codes(code_of(gen.immersion), gen.code));
    }
}

TEST(Immersion, ProblemsAreReported) {
  const Realization r = curve({"A", "A"});
  const Immersion with_chord = immersion_from_map(chord_map(r), true);
  EXPECT_FALSE(immersion_problems(with_chord).empty());
  const auto torus = theta3(false);
  EXPECT_FALSE(immersion_problems(immersion_from_map(PlanarMap(torus.graph, torus.rotation))).empty());
}
